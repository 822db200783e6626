#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zaran/core.hpp"

// Closed-form size conditions for biclique families. All logarithms are base 2.
namespace zaran::bounds {

/// H(p) = -p log p - (1-p) log(1-p), with H(0) = H(1) = 0.
/// Throws std::domain_error outside [0, 1].
double binary_entropy(double p);

/// log2 C(x, k) for real x >= k via log-gamma; -infinity when x < k.
double log2_binomial(double x, double k);

struct KstCheck {
  double average_degree = 0;
  double lhs = 0;  // n * C(n - dbar, k) / C(n, k)
  double rhs = 0;  // k - 1
  bool satisfied = false;
};

/// Relative slack used when comparing the log-gamma evaluated lhs against
/// the integer rhs; equality cases (e.g. a perfect matching) must pass.
inline constexpr double kKstTolerance = 1e-9;

/// Requires a square graph and 1 <= k <= n.
KstCheck kst_check(const BipartiteGraph& g, std::size_t k);

struct KstDegreeBound {
  double average_degree = 0;  // (n-k+1) log(n/(k-1)) / (k + log(n/(k-1)))
  double edges = 0;           // n * average_degree
};

/// Throws std::domain_error for k < 2 or k > n.
KstDegreeBound kst_degree_lower_bound(std::size_t n, std::size_t k);

struct HanselCheck {
  double lhs = 0;  // sum of biclique orders
  double rhs = 0;  // n log(n/(k-1))
  bool satisfied = false;
};

/// `orders` holds |A_i| + |B_i| for each placed biclique A_i x B_i (2 n_i
/// for a copy of K_{n_i,n_i}). Throws std::domain_error for k < 2.
HanselCheck hansel_check(std::span<const std::size_t> orders, std::size_t n, std::size_t k);

struct ProfileEntry {
  double alpha = 0;
  double beta = 0;

  bool degenerate() const noexcept { return alpha + beta == 0; }
  /// alpha / (alpha + beta); 0 for a degenerate entry.
  double p() const noexcept { return degenerate() ? 0.0 : alpha / (alpha + beta); }
  double entropy_term() const;  // (alpha + beta) H(p)
  double product_term() const noexcept { return alpha * beta; }
};

struct NormalizedProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ProfileEntry> entries;
  bool in_theorem_regime = false;

  bool symmetric() const noexcept;
  std::vector<std::size_t> degenerate_indices() const;
};

/// Builds a profile and evaluates the regime flag:
/// k in [n^{1/10}, n^{9/10}] and every alpha, beta in [n^{-1/100}, n^{1/100}].
NormalizedProfile make_profile(std::size_t n, std::size_t k, std::vector<ProfileEntry> entries);
/// alpha_i = m_i k / n, beta_i = n_i k / n.
NormalizedProfile profile_from_sizes(std::size_t n, std::size_t k,
                                     std::span<const std::pair<std::size_t, std::size_t>> sizes);
NormalizedProfile profile_from_family(const BicliqueFamily& family);

struct SymmetricCheck {
  double small_term = 0;  // sum over alpha <= 1 of alpha^2
  double large_term = 0;  // sum over alpha > 1 of alpha
  double lhs = 0;
  double rhs = 0;  // constant * k * log n
  bool satisfied = false;
};

/// Throws std::invalid_argument if any beta differs from its alpha.
SymmetricCheck symmetric_condition(const NormalizedProfile& profile, double constant);

struct AsymmetricCheck {
  double min_over_x = 0;
  std::vector<std::size_t> argmin_x;  // ascending
  double first_term = 0;              // sum over argmin_x of alpha beta
  double second_term = 0;             // sum over the rest of (alpha+beta) H(p)
  double rhs = 0;
  bool satisfied = false;
};

/// Minimum over all X of  sum_{i in X} alpha_i beta_i + sum_{i not in X} (alpha_i+beta_i) H(p_i).
/// The objective is separable, so the minimum takes the smaller term per
/// index; ties go into X. Throws std::invalid_argument on a degenerate entry.
AsymmetricCheck asymmetric_condition(const NormalizedProfile& profile, double constant);

/// The same objective for one fixed X (given as membership flags), summed
/// in index order.
double asymmetric_objective(const NormalizedProfile& profile, const std::vector<bool>& in_x);

/// beta * log((alpha + beta) / beta); bounded above by alpha / ln 2.
double mixed_entropy_term(double alpha, double beta);

struct Constants {
  double A = 2.0;   // symmetric sufficient
  double B = 0.01;  // symmetric necessary
  double C = 2.0;   // asymmetric sufficient
  double D = 0.01;  // asymmetric necessary
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t union_edges = 0;
  KstCheck kst;
  std::optional<KstDegreeBound> kst_degree_bound;  // absent for k = 1
  std::optional<HanselCheck> hansel;               // absent for k = 1
  std::optional<SymmetricCheck> symmetric_sufficient;  // constant A; symmetric families only
  std::optional<SymmetricCheck> symmetric_necessary;   // constant B
  std::optional<AsymmetricCheck> asymmetric_sufficient;  // constant C; absent if degenerate
  std::optional<AsymmetricCheck> asymmetric_necessary;   // constant D
  std::vector<std::size_t> degenerate;
  bool in_theorem_regime = false;
  Constants constants;
};

BoundReport bound_report(const BicliqueFamily& family, const Constants& constants = {});

}  // namespace zaran::bounds
