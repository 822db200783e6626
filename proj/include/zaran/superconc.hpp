#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zaran/bounds.hpp"
#include "zaran/core.hpp"

// Depth-two superconcentrators: verification by max-flow and the
// degree-class audits behind the edge lower bound and the V/W tradeoff.
namespace zaran::superconc {

/// Thrown when a middle vertex's degrees do not match the required ratio.
class UnbalancedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Maximum number of vertex-disjoint paths S -> M -> T, as a unit-capacity
/// flow with every middle vertex split into an in/out pair of capacity 1.
std::size_t disjoint_path_count(const LayeredGraph& g, const VertexSet& S, const VertexSet& T);

enum class VerifyMode { Exhaustive, Sampled };
const char* to_string(VerifyMode m);

struct VerifyConfig {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::optional<std::pair<std::size_t, std::size_t>> k_range;  // inclusive; default 1..n
  std::size_t samples = 1000;  // per k, sampled mode
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Exhaustive mode refuses to start when sum_k C(n,k)^2 exceeds this.
  std::uint64_t pair_budget = 5'000'000;
};

struct Counterexample {
  std::size_t k = 0;
  VertexSet S;
  VertexSet T;
  std::size_t max_flow = 0;
};

struct ScVerdict {
  /// No counterexample among the checked pairs. Only a certificate when
  /// `certified` (exhaustive mode over the full k range).
  bool is_superconcentrator = false;
  bool certified = false;
  std::optional<Counterexample> counterexample;  // first failure, ascending k
  std::size_t k_lo = 1;
  std::size_t k_hi = 0;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t pairs_checked = 0;
};

/// Throws BudgetExceeded in exhaustive mode when the pair count is too large.
ScVerdict verify_superconcentrator(const LayeredGraph& g, const VerifyConfig& config = {});

/// One biclique (in-neighbours, out-neighbours) per middle vertex in
/// `restrict`, in the given order.
BicliqueFamily middle_bicliques(const LayeredGraph& g, const std::vector<std::size_t>& restrict,
                                std::size_t k = 1);

enum class DegreeMeasure {
  Balanced,  // deg = deg_V = deg_W; throws UnbalancedGraph otherwise
  Out,       // deg = deg_W
};

struct MiddleDecomposition {
  std::size_t k = 0;
  double threshold_base = 0;
  double high_cut = 0;  // (n/k) * threshold_base
  double low_cut = 0;   // (n/k) / threshold_base
  std::vector<std::size_t> high, medium, low;
  std::size_t high_edges_v = 0, high_edges_w = 0;
  std::size_t medium_edges_v = 0, medium_edges_w = 0;
  std::size_t low_edges_v = 0, low_edges_w = 0;
};

/// High: deg >= high_cut; Low: deg < low_cut; Medium: the rest.
/// Requires 1 <= k <= n and threshold_base >= 1.
MiddleDecomposition decompose(const LayeredGraph& g, std::size_t k, double threshold_base,
                              DegreeMeasure measure = DegreeMeasure::Balanced);

/// Pads each middle vertex's deficient side (lowest-index new neighbours
/// first) so that deg_V / deg_W matches a / b up to integer rounding. Never
/// removes edges; each layer's edge count at most doubles when a / b is the
/// graph's own average-degree ratio. Throws std::domain_error if a target
/// degree exceeds n.
LayeredGraph balance_degrees(const LayeredGraph& g, double a, double b);

/// |deg_V b - deg_W a| < max(a, b) for every middle vertex.
bool is_balanced(const LayeredGraph& g, double a, double b);

/// k-ladder over [n^{1/4}, n^{3/4}]: k_0 = ceil(n^{1/4}), k_{i+1} = ceil(k_i * ratio).
/// Each rung is at least `ratio` times the previous one, so Medium bands with
/// threshold_base^2 = ratio never overlap. A ratio <= 1 gives a single rung.
std::vector<double> k_ladder(double n, double ratio);

struct LadderDecomposition {
  std::vector<MiddleDecomposition> rungs;  // one per k in k_ladder(n, threshold_base^2)
  bool bands_disjoint = false;  // k_{i+1} >= k_i threshold_base^2 for consecutive rungs
  bool sets_disjoint = false;   // Medium sets pairwise disjoint
};

LadderDecomposition ladder_decompose(const LayeredGraph& g, double threshold_base,
                                     DegreeMeasure measure);

struct EdgeAuditRung {
  std::size_t k = 0;
  MiddleDecomposition classes;
  bool high_below_k = false;  // |High(k)| < k
  std::size_t medium_incident_edges = 0;  // sum over Medium of deg
  double medium_target = 0;               // (B/2) n log n
  bool medium_meets_target = false;
  bounds::SymmetricCheck symmetric;  // on Medium u Low bicliques, constant B
  double fixed_k_lhs = 0;            // sum_Low alpha^2 + sum_Medium alpha
};

struct EdgeAuditReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double B = 0;
  std::size_t edges_vm_before = 0, edges_mw_before = 0;
  std::size_t edges_vm_balanced = 0, edges_mw_balanced = 0;
  double threshold_base = 0;  // (log n)^2
  std::vector<EdgeAuditRung> ladder;
  std::size_t ladder_min_length = 0;  // floor((1/10) log n / log log n)
  bool bands_disjoint = false;
  bool medium_sets_disjoint = false;
  std::size_t total_edges = 0;  // after balancing
  double total_target = 0;      // (B/20) n (log n)^2 / log log n
  bool total_meets_target = false;
};

/// Balances 1:1, then classifies middle vertices on every ladder rung.
/// Requires n >= 3. Asymptotic claims are reported, not asserted.
EdgeAuditReport edge_lower_bound_audit(const LayeredGraph& g, double B);

struct TradeoffReport {
  std::size_t n = 0;
  double D = 0;
  bool mirrored = false;  // V and W swapped so that a <= b
  double a = 0;
  double b = 0;
  double threshold_base = 0;  // max(b^2, 1)
  std::vector<std::size_t> ladder;
  std::vector<std::size_t> medium_edges_v;  // per rung
  std::size_t L = 0;
  std::size_t k0 = 0;
  std::size_t min_medium_edges_v = 0;
  std::size_t sum_medium_edges_v = 0;
  std::size_t edges_vm = 0;  // a * n
  bool pigeonhole_holds = false;  // L * min <= sum <= a n
  bool medium_sets_disjoint = false;
  bool high_below_k0 = false;
  double objective_low_marked = 0;  // X = Low(k0)
  bounds::AsymmetricCheck asymmetric;  // min over X, constant D
  double lhs = 0;                  // a log((a+b)/a) log b
  double rhs_scale = 0;            // (log n)^2
  double rhs = 0;                  // D (log n)^2
};

/// `ratio` is the (a, b) the graph was balanced to; defaults to its own
/// average degrees. Throws UnbalancedGraph if the graph is not balanced to it.
TradeoffReport tradeoff_audit(const LayeredGraph& g, double D,
                              std::optional<std::pair<double, double>> ratio = std::nullopt);

}  // namespace zaran::superconc
