#include "zaran/construct.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "zaran/bounds.hpp"

namespace zaran::construct {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLn2 = std::log(2.0);

// Natural log of C(n-k, m) / C(n, m) as a product of per-draw ratios.
double ln_avoid(std::size_t n, std::size_t k, std::size_t m) {
  if (m > n || k > n) throw std::invalid_argument("avoid_probability: sizes exceed n");
  if (m > n - k) return kNegInf;
  double acc = 0;
  for (std::size_t j = 0; j < m; ++j)
    acc += std::log(static_cast<double>(n - k - j) / static_cast<double>(n - j));
  return acc;
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// ln(q1 + q2 - q1 q2) = ln(q1 + q2 (1 - q1)) given ln q1, ln q2.
double ln_either(double lq1, double lq2) {
  if (lq1 == 0.0 || lq2 == 0.0) return 0.0;
  const double rest = lq1 == kNegInf ? lq2 : lq2 + std::log(-std::expm1(lq1));
  return log_add(lq1, rest);
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "relaxed"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Verified:
      return "verified";
    case Status::Exhausted:
      return "exhausted";
    case Status::Unverified:
      return "unverified";
  }
  return "?";
}

double avoid_probability(std::size_t n, std::size_t k, std::size_t m) {
  return std::exp(ln_avoid(n, k, m));
}

double miss_probability_exact(std::size_t n, std::size_t k, std::size_t m, std::size_t n2) {
  return std::exp(ln_either(ln_avoid(n, k, m), ln_avoid(n, k, n2)));
}

double log2_miss_probability_exact(std::size_t n, std::size_t k, std::size_t m, std::size_t n2) {
  return ln_either(ln_avoid(n, k, m), ln_avoid(n, k, n2)) / kLn2;
}

double miss_probability_relaxed(double alpha, double beta) {
  return std::exp(log2_miss_probability_relaxed(alpha, beta) * kLn2);
}

double log2_miss_probability_relaxed(double alpha, double beta) {
  if (alpha < 0 || beta < 0) throw std::domain_error("miss_probability_relaxed: negative size");
  return ln_either(-alpha, -beta) / kLn2;
}

double miss_probability_bound(double alpha) {
  if (alpha < 0) throw std::domain_error("miss_probability_bound: negative alpha");
  if (alpha <= 1.0) return std::exp(-alpha * alpha / 3.0);
  return std::exp(-(1.0 - std::log(2.0)) * alpha);
}

ConstructionCertificate certify_union_bound(std::size_t n, std::size_t k, const SizeList& sizes,
                                            Mode mode) {
  if (k < 1 || k > n) throw std::invalid_argument("certify_union_bound: need 1 <= k <= n");
  ConstructionCertificate cert;
  cert.mode = mode;
  const double scale = static_cast<double>(k) / static_cast<double>(n);
  double total = 2.0 * bounds::log2_binomial(static_cast<double>(n), static_cast<double>(k));
  for (auto [m, w] : sizes) {
    if (m > n || w > n) throw std::invalid_argument("certify_union_bound: size exceeds n");
    const double alpha = static_cast<double>(m) * scale;
    const double beta = static_cast<double>(w) * scale;
    MissProbability mp;
    const double l2_exact = log2_miss_probability_exact(n, k, m, w);
    const double l2_relaxed = log2_miss_probability_relaxed(alpha, beta);
    mp.exact = std::exp2(l2_exact);
    mp.relaxed = std::exp2(l2_relaxed);
    if (m == w) mp.bound = miss_probability_bound(alpha);
    cert.per_index.push_back(mp);
    total += mode == Mode::Exact ? l2_exact : l2_relaxed;
  }
  cert.log2_failure_bound = total;
  cert.certified = total < 0;
  return cert;
}

BicliqueFamily random_family(std::size_t n, std::size_t k, const SizeList& sizes,
                             RandomSource& rng) {
  std::vector<Biclique> bicliques;
  bicliques.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto [m, w] = sizes[i];
    if (m > n || w > n)
      throw std::invalid_argument("random_family: size " + std::to_string(i) + " exceeds n");
    auto left = VertexSet::from_indices(Side::Left, n, rng.sample_subset(n, m));
    auto right = VertexSet::from_indices(Side::Right, n, rng.sample_subset(n, w));
    bicliques.push_back({std::move(left), std::move(right)});
  }
  return BicliqueFamily(n, k, std::move(bicliques));
}

ConstructionOutcome construct_until_verified(std::size_t n, std::size_t k, const SizeList& sizes,
                                             RandomSource& rng, std::size_t max_attempts,
                                             const witness::Config& search) {
  if (max_attempts < 1) throw std::invalid_argument("construct_until_verified: max_attempts >= 1");
  std::optional<BicliqueFamily> undecided;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    BicliqueFamily family = random_family(n, k, sizes, rng);
    auto result = witness::has_kxk_independent_set(union_of(family), k, search);
    if (result.verdict == witness::Verdict::NotFound)
      return {Status::Verified, std::move(family), attempt, std::nullopt};
    if (result.verdict == witness::Verdict::Unknown) {
      undecided = family;
      if (attempt == max_attempts)
        return {Status::Unverified, std::move(family), attempt, std::nullopt};
      continue;
    }
    if (attempt == max_attempts) {
      if (undecided) return {Status::Unverified, std::move(*undecided), attempt, std::nullopt};
      return {Status::Exhausted, std::move(family), attempt, std::move(result)};
    }
  }
  throw std::logic_error("construct_until_verified: unreachable");
}

}  // namespace zaran::construct
