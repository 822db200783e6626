#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zaran/core.hpp"

namespace zaran::witness {

enum class Method { Exhaustive, BranchBound, Counting, Randomized };
enum class Verdict { Found, NotFound, Unknown };
/// Which side the search branches over; Auto picks the side with smaller
/// average degree, ties going to the right side.
enum class SearchSide { Auto, Left, Right };

const char* to_string(Method m);
const char* to_string(Verdict v);

struct Config {
  std::uint64_t node_budget = 10'000'000;
  Method method = Method::BranchBound;
  SearchSide side = SearchSide::Auto;
};

/// Outcome of a k x k independent-set search.
///
/// `Unknown` means the node budget ran out; it is never a claim of absence.
/// When found, |S| = |T| = k and S x T has no edge (re-verified before the
/// result is returned).
struct WitnessResult {
  Verdict verdict = Verdict::Unknown;
  VertexSet S;
  VertexSet T;
  Method method = Method::BranchBound;
  std::uint64_t nodes_explored = 0;

  bool found() const noexcept { return verdict == Verdict::Found; }
  bool complete() const noexcept { return verdict != Verdict::Unknown; }
};

/// True iff no edge of g lies in S x T (bit-by-bit check).
bool is_independent(const BipartiteGraph& g, const VertexSet& S, const VertexSet& T);

/// Complete search for S (left) and T (right), |S| = |T| = k, with no edge
/// in S x T.
///
/// Branch-and-bound picks T vertices in ascending-degree order (index
/// tie-break), keeping the common non-neighbourhood on the other side and
/// pruning as soon as it drops below k. The first witness in that order is
/// returned, with S the k smallest common non-neighbours. This is
/// deterministic but not the lexicographically least witness overall.
///
/// Throws std::invalid_argument unless 1 <= k <= min(n_left, n_right).
WitnessResult has_kxk_independent_set(const BipartiteGraph& g, std::size_t k,
                                      const Config& config = {});

/// Counting form of the KST inequality used constructively. If
///   sum_v C(n_right - deg(v), k) > (k-1) C(n_right, k)
/// some k-subset T has at least k common non-neighbours; T is then built by
/// conditional expectations and the resulting witness verified. Returns
/// nullopt when the count does not exceed the threshold (inconclusive).
std::optional<WitnessResult> counting_refuter(const BipartiteGraph& g, std::size_t k);

/// Complete independent-set search in a general graph on n vertices given
/// by symmetric adjacency rows. Returns the first independent k-set found
/// in index order, or nullopt. Throws BudgetExceeded if n > vertex_limit.
std::optional<VertexSet> general_graph_has_independent_set(const std::vector<Bitset>& adjacency,
                                                           std::size_t k,
                                                           std::size_t vertex_limit = 24);

}  // namespace zaran::witness
