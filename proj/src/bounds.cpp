#include "zaran/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace zaran::bounds {

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binary_entropy: p must lie in [0, 1], got " + std::to_string(p));
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double log2_binomial(double x, double k) {
  if (x < k || k < 0) return -std::numeric_limits<double>::infinity();
  return (std::lgamma(x + 1.0) - std::lgamma(k + 1.0) - std::lgamma(x - k + 1.0)) / std::log(2.0);
}

KstCheck kst_check(const BipartiteGraph& g, std::size_t k) {
  if (g.n_left() != g.n_right())
    throw std::invalid_argument("kst_check: graph must have equal sides");
  const std::size_t n = g.n_left();
  if (k < 1 || k > n) throw std::invalid_argument("kst_check: need 1 <= k <= n");
  KstCheck out;
  out.average_degree = static_cast<double>(g.edge_count()) / static_cast<double>(n);
  out.rhs = static_cast<double>(k) - 1.0;
  const double x = static_cast<double>(n) - out.average_degree;
  const double kk = static_cast<double>(k);
  if (x < kk) {
    out.lhs = 0.0;
  } else {
    const double log2_ratio = log2_binomial(x, kk) - log2_binomial(static_cast<double>(n), kk);
    out.lhs = static_cast<double>(n) * std::exp2(log2_ratio);
  }
  out.satisfied = out.lhs <= out.rhs + kKstTolerance * std::max(1.0, out.rhs);
  return out;
}

KstDegreeBound kst_degree_lower_bound(std::size_t n, std::size_t k) {
  if (k < 2) throw std::domain_error("kst_degree_lower_bound: requires k >= 2");
  if (k > n) throw std::domain_error("kst_degree_lower_bound: requires k <= n");
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double l = std::log2(nn / (kk - 1.0));
  KstDegreeBound out;
  out.average_degree = (nn - kk + 1.0) * l / (kk + l);
  out.edges = nn * out.average_degree;
  return out;
}

HanselCheck hansel_check(std::span<const std::size_t> orders, std::size_t n, std::size_t k) {
  if (k < 2) throw std::domain_error("hansel_check: requires k >= 2");
  HanselCheck out;
  for (std::size_t s : orders) out.lhs += static_cast<double>(s);
  const double nn = static_cast<double>(n);
  out.rhs = nn * std::log2(nn / (static_cast<double>(k) - 1.0));
  out.satisfied = out.lhs >= out.rhs;
  return out;
}

double ProfileEntry::entropy_term() const { return (alpha + beta) * binary_entropy(p()); }

bool NormalizedProfile::symmetric() const noexcept {
  for (const auto& e : entries)
    if (e.alpha != e.beta) return false;
  return true;
}

std::vector<std::size_t> NormalizedProfile::degenerate_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].degenerate()) out.push_back(i);
  return out;
}

NormalizedProfile make_profile(std::size_t n, std::size_t k, std::vector<ProfileEntry> entries) {
  NormalizedProfile p;
  p.n = n;
  p.k = k;
  p.entries = std::move(entries);
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  bool regime = n >= 1 && kk >= std::pow(nn, 0.1) && kk <= std::pow(nn, 0.9);
  const double lo = std::pow(nn, -0.01);
  const double hi = std::pow(nn, 0.01);
  for (const auto& e : p.entries)
    if (e.alpha < lo || e.alpha > hi || e.beta < lo || e.beta > hi) regime = false;
  p.in_theorem_regime = regime;
  return p;
}

NormalizedProfile profile_from_sizes(std::size_t n, std::size_t k,
                                     std::span<const std::pair<std::size_t, std::size_t>> sizes) {
  if (n == 0) throw std::invalid_argument("profile_from_sizes: n must be positive");
  std::vector<ProfileEntry> entries;
  entries.reserve(sizes.size());
  const double scale = static_cast<double>(k) / static_cast<double>(n);
  for (auto [m, w] : sizes)
    entries.push_back({static_cast<double>(m) * scale, static_cast<double>(w) * scale});
  return make_profile(n, k, std::move(entries));
}

NormalizedProfile profile_from_family(const BicliqueFamily& family) {
  auto sizes = family.sizes();
  return profile_from_sizes(family.n(), family.k(), sizes);
}

namespace {
double condition_rhs(const NormalizedProfile& profile, double constant) {
  return constant * static_cast<double>(profile.k) * std::log2(static_cast<double>(profile.n));
}
}  // namespace

SymmetricCheck symmetric_condition(const NormalizedProfile& profile, double constant) {
  SymmetricCheck out;
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    const auto& e = profile.entries[i];
    if (e.alpha != e.beta)
      throw std::invalid_argument("symmetric_condition: entry " + std::to_string(i) +
                                  " has beta != alpha");
    if (e.alpha <= 1.0)
      out.small_term += e.alpha * e.alpha;
    else
      out.large_term += e.alpha;
  }
  out.lhs = out.small_term + out.large_term;
  out.rhs = condition_rhs(profile, constant);
  out.satisfied = out.lhs >= out.rhs;
  return out;
}

AsymmetricCheck asymmetric_condition(const NormalizedProfile& profile, double constant) {
  AsymmetricCheck out;
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    const auto& e = profile.entries[i];
    if (e.degenerate())
      throw std::invalid_argument("asymmetric_condition: entry " + std::to_string(i) +
                                  " has alpha + beta = 0");
    const double prod = e.product_term();
    const double ent = e.entropy_term();
    if (prod <= ent) {
      out.argmin_x.push_back(i);
      out.min_over_x += prod;
      out.first_term += prod;
    } else {
      out.min_over_x += ent;
      out.second_term += ent;
    }
  }
  out.rhs = condition_rhs(profile, constant);
  out.satisfied = out.min_over_x >= out.rhs;
  return out;
}

double asymmetric_objective(const NormalizedProfile& profile, const std::vector<bool>& in_x) {
  if (in_x.size() != profile.entries.size())
    throw std::invalid_argument("asymmetric_objective: membership vector has wrong length");
  double total = 0;
  for (std::size_t i = 0; i < profile.entries.size(); ++i)
    total += in_x[i] ? profile.entries[i].product_term() : profile.entries[i].entropy_term();
  return total;
}

double mixed_entropy_term(double alpha, double beta) {
  if (beta <= 0) return 0.0;
  return beta * std::log1p(alpha / beta) / std::log(2.0);
}

BoundReport bound_report(const BicliqueFamily& family, const Constants& constants) {
  BoundReport rep;
  rep.n = family.n();
  rep.k = family.k();
  rep.r = family.size();
  rep.constants = constants;
  const auto g = union_of(family);
  rep.union_edges = g.edge_count();
  rep.kst = kst_check(g, family.k());
  if (family.k() >= 2) {
    rep.kst_degree_bound = kst_degree_lower_bound(family.n(), family.k());
    std::vector<std::size_t> orders;
    for (auto [m, w] : family.sizes()) orders.push_back(m + w);
    rep.hansel = hansel_check(orders, family.n(), family.k());
  }
  const auto profile = profile_from_family(family);
  rep.in_theorem_regime = profile.in_theorem_regime;
  rep.degenerate = profile.degenerate_indices();
  if (profile.symmetric()) {
    rep.symmetric_sufficient = symmetric_condition(profile, constants.A);
    rep.symmetric_necessary = symmetric_condition(profile, constants.B);
  }
  if (rep.degenerate.empty()) {
    rep.asymmetric_sufficient = asymmetric_condition(profile, constants.C);
    rep.asymmetric_necessary = asymmetric_condition(profile, constants.D);
  }
  return rep;
}

}  // namespace zaran::bounds
