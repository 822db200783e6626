#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "zaran/core.hpp"
#include "zaran/random.hpp"
#include "zaran/witness.hpp"

// Random placement of bicliques and the union-bound certificate for it.
namespace zaran::construct {

using SizeList = std::vector<std::pair<std::size_t, std::size_t>>;

/// C(n-k, m) / C(n, m): a uniform m-subset of an n-set avoids a fixed k-subset.
double avoid_probability(std::size_t n, std::size_t k, std::size_t m);

/// Probability that a uniformly placed m x n2 biclique has no edge inside a
/// fixed k x k rectangle: q1 + q2 - q1 q2 with q = avoid_probability.
double miss_probability_exact(std::size_t n, std::size_t k, std::size_t m, std::size_t n2);
/// log2 of miss_probability_exact, evaluated without underflow.
double log2_miss_probability_exact(std::size_t n, std::size_t k, std::size_t m, std::size_t n2);

/// 1 - (1 - e^{-alpha})(1 - e^{-beta}).
double miss_probability_relaxed(double alpha, double beta);
double log2_miss_probability_relaxed(double alpha, double beta);

/// Symmetric-case upper bound on the relaxed miss probability:
/// exp(-alpha^2/3) for alpha <= 1, exp(-(1 - ln 2) alpha) otherwise.
double miss_probability_bound(double alpha);

enum class Mode { Exact, Relaxed };
const char* to_string(Mode m);

struct MissProbability {
  double exact = 0;
  double relaxed = 0;
  std::optional<double> bound;  // symmetric sizes only
};

struct ConstructionCertificate {
  Mode mode = Mode::Exact;
  /// sum_i log2 miss_i + 2 log2 C(n, k); -infinity when some miss is 0.
  double log2_failure_bound = 0;
  bool certified = false;
  std::vector<MissProbability> per_index;
};

ConstructionCertificate certify_union_bound(std::size_t n, std::size_t k, const SizeList& sizes,
                                            Mode mode = Mode::Exact);

/// Each V_i a uniform m_i-subset of V and each W_i a uniform n_i-subset of W,
/// all independent, drawn in order V_0, W_0, V_1, W_1, ...
/// Throws std::invalid_argument if a size exceeds n.
BicliqueFamily random_family(std::size_t n, std::size_t k, const SizeList& sizes,
                             RandomSource& rng);

enum class Status { Verified, Exhausted, Unverified };
const char* to_string(Status s);

struct ConstructionOutcome {
  Status status = Status::Exhausted;
  BicliqueFamily family;
  std::size_t attempts = 0;
  /// For Exhausted: the witness refuting the last family drawn.
  std::optional<witness::WitnessResult> last_witness;
};

/// Draws random families until one has no k x k independent set. Attempts
/// whose search runs out of budget are skipped; if the final attempt is
/// undecided the outcome is Unverified rather than Exhausted.
ConstructionOutcome construct_until_verified(std::size_t n, std::size_t k, const SizeList& sizes,
                                             RandomSource& rng, std::size_t max_attempts,
                                             const witness::Config& search = {});

}  // namespace zaran::construct
