#include "zaran/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zaran/errors.hpp"

namespace zaran::witness {

const char* to_string(Method m) {
  switch (m) {
    case Method::Exhaustive:
      return "exhaustive";
    case Method::BranchBound:
      return "branch_bound";
    case Method::Counting:
      return "counting";
    case Method::Randomized:
      return "randomized";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Found:
      return "found";
    case Verdict::NotFound:
      return "not_found";
    case Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

bool is_independent(const BipartiteGraph& g, const VertexSet& S, const VertexSet& T) {
  for (std::size_t v : S.members())
    for (std::size_t w : T.members())
      if (g.has_edge(v, w)) return false;
  return true;
}

namespace {

VertexSet first_k(const Bitset& bits, std::size_t k, Side side) {
  VertexSet s(side, bits.size());
  std::size_t taken = 0;
  for (std::size_t i = bits.first(); i < bits.size() && taken < k; i = bits.next(i + 1), ++taken)
    s.insert(i);
  return s;
}

// Searches for T on the right side of `g`; S comes from the left side.
class RightSideSearch {
 public:
  RightSideSearch(const BipartiteGraph& g, std::size_t k, std::uint64_t budget)
      : k_(k), budget_(budget), n_left_(g.n_left()) {
    const BipartiteGraph t = transpose(g);
    non_nbrs_.reserve(g.n_right());
    for (std::size_t w = 0; w < g.n_right(); ++w) non_nbrs_.push_back(t.row(w).complement());
    order_.resize(g.n_right());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return t.degree(a) < t.degree(b);
    });
    chosen_.reserve(k);
  }

  Verdict branch_bound() {
    Bitset all(n_left_, true);
    if (all.count() < k_) return Verdict::NotFound;
    return descend(0, all) ? Verdict::Found : (exhausted_ ? Verdict::Unknown : Verdict::NotFound);
  }

  Verdict exhaustive() {
    const std::size_t r = order_.size();
    std::vector<std::size_t> idx(k_);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      if (++nodes_ > budget_) return Verdict::Unknown;
      Bitset common(n_left_, true);
      for (std::size_t i : idx) common &= non_nbrs_[i];
      if (common.count() >= k_) {
        witness_n_ = common;
        chosen_.assign(idx.begin(), idx.end());
        return Verdict::Found;
      }
      // Next k-combination in lexicographic order.
      std::size_t pos = k_;
      while (pos > 0 && idx[pos - 1] == r - k_ + (pos - 1)) --pos;
      if (pos == 0) return Verdict::NotFound;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k_; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }
  const Bitset& common() const noexcept { return witness_n_; }

 private:
  bool descend(std::size_t pos, const Bitset& common) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (chosen_.size() == k_) {
      witness_n_ = common;
      return true;
    }
    const std::size_t need = k_ - chosen_.size();
    for (std::size_t i = pos; i + need <= order_.size(); ++i) {
      const std::size_t w = order_[i];
      if (Bitset::intersection_count(common, non_nbrs_[w]) < k_) continue;
      chosen_.push_back(w);
      if (descend(i + 1, common & non_nbrs_[w])) return true;
      chosen_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t k_;
  std::uint64_t budget_;
  std::size_t n_left_;
  std::vector<Bitset> non_nbrs_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> chosen_;
  Bitset witness_n_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

WitnessResult search_right(const BipartiteGraph& g, std::size_t k, const Config& config) {
  RightSideSearch search(g, k, config.node_budget);
  WitnessResult out;
  out.method = config.method == Method::Exhaustive ? Method::Exhaustive : Method::BranchBound;
  out.verdict =
      config.method == Method::Exhaustive ? search.exhaustive() : search.branch_bound();
  out.nodes_explored = std::min(search.nodes(), config.node_budget);
  out.S = VertexSet(Side::Left, g.n_left());
  out.T = VertexSet(Side::Right, g.n_right());
  if (out.found()) {
    out.S = first_k(search.common(), k, Side::Left);
    for (std::size_t w : search.chosen()) out.T.insert(w);
  }
  return out;
}

void verify_or_throw(const BipartiteGraph& g, std::size_t k, const WitnessResult& r) {
  if (!r.found()) return;
  if (r.S.cardinality() != k || r.T.cardinality() != k || !is_independent(g, r.S, r.T))
    throw std::logic_error("witness search produced an invalid witness");
}

}  // namespace

WitnessResult has_kxk_independent_set(const BipartiteGraph& g, std::size_t k,
                                      const Config& config) {
  if (k < 1 || k > std::min(g.n_left(), g.n_right()))
    throw std::invalid_argument("has_kxk_independent_set: need 1 <= k <= min side size (k=" +
                                std::to_string(k) + ")");
  if (config.method == Method::Counting || config.method == Method::Randomized)
    throw std::invalid_argument("has_kxk_independent_set: method must be exhaustive or branch_bound");

  bool use_right = true;
  if (config.side == SearchSide::Left) {
    use_right = false;
  } else if (config.side == SearchSide::Auto) {
    // Average degrees E/n_left and E/n_right; the right side is chosen when
    // its average is no larger.
    use_right = g.n_right() >= g.n_left();
  }

  WitnessResult out;
  if (use_right) {
    out = search_right(g, k, config);
  } else {
    WitnessResult flipped = search_right(transpose(g), k, config);
    out.verdict = flipped.verdict;
    out.method = flipped.method;
    out.nodes_explored = flipped.nodes_explored;
    out.S = VertexSet(Side::Left, flipped.T.bits());
    out.T = VertexSet(Side::Right, flipped.S.bits());
  }
  verify_or_throw(g, k, out);
  return out;
}

std::optional<WitnessResult> counting_refuter(const BipartiteGraph& g, std::size_t k) {
  const std::size_t nr = g.n_right();
  if (k < 1 || k > std::min(g.n_left(), nr))
    throw std::invalid_argument("counting_refuter: need 1 <= k <= min side size");

  const BipartiteGraph t = transpose(g);
  std::vector<Bitset> col_non(nr);
  for (std::size_t w = 0; w < nr; ++w) col_non[w] = t.row(w).complement();
  std::vector<double> non_deg(g.n_left());
  for (std::size_t v = 0; v < g.n_left(); ++v)
    non_deg[v] = static_cast<double>(nr - g.degree(v));

  auto ln_choose = [](double x, double j) {
    if (x < j) return -std::numeric_limits<double>::infinity();
    return std::lgamma(x + 1.0) - std::lgamma(j + 1.0) - std::lgamma(x - j + 1.0);
  };

  // log sum_v C(non_deg(v), k) against log((k-1) C(nr, k)).
  double ref = -std::numeric_limits<double>::infinity();
  for (double c : non_deg) ref = std::max(ref, ln_choose(c, static_cast<double>(k)));
  if (!std::isfinite(ref)) return std::nullopt;
  double scaled = 0;
  for (double c : non_deg) scaled += std::exp(ln_choose(c, static_cast<double>(k)) - ref);
  const double log_sum = ref + std::log(scaled);
  if (k > 1) {
    const double log_thr =
        std::log(static_cast<double>(k) - 1.0) + ln_choose(static_cast<double>(nr), static_cast<double>(k));
    if (!(log_sum > log_thr + 1e-12)) return std::nullopt;
  }

  // Method of conditional expectations over the choice of T.
  Bitset candidates(g.n_left(), true);  // left vertices whose non-nbhd contains T so far
  Bitset in_t(nr);
  std::vector<std::size_t> chosen;
  for (std::size_t t_size = 0; t_size < k; ++t_size) {
    const double remaining = static_cast<double>(k - t_size - 1);
    std::vector<double> logw(g.n_left(), -std::numeric_limits<double>::infinity());
    double wref = -std::numeric_limits<double>::infinity();
    for (std::size_t v = candidates.first(); v < g.n_left(); v = candidates.next(v + 1)) {
      logw[v] = ln_choose(non_deg[v] - static_cast<double>(t_size) - 1.0, remaining);
      wref = std::max(wref, logw[v]);
    }
    if (!std::isfinite(wref)) return std::nullopt;
    std::size_t best = nr;
    double best_score = -1.0;
    for (std::size_t w = 0; w < nr; ++w) {
      if (in_t.test(w)) continue;
      double score = 0;
      const Bitset hit = candidates & col_non[w];
      for (std::size_t v = hit.first(); v < hit.size(); v = hit.next(v + 1))
        score += std::exp(logw[v] - wref);
      if (score > best_score) {
        best_score = score;
        best = w;
      }
    }
    if (best == nr) return std::nullopt;
    in_t.set(best);
    chosen.push_back(best);
    candidates &= col_non[best];
  }
  if (candidates.count() < k) return std::nullopt;

  WitnessResult out;
  out.verdict = Verdict::Found;
  out.method = Method::Counting;
  out.nodes_explored = k;
  out.S = first_k(candidates, k, Side::Left);
  out.T = VertexSet(Side::Right, in_t);
  verify_or_throw(g, k, out);
  return out;
}

namespace {

bool independent_search(const std::vector<Bitset>& adj, std::size_t k, Bitset& chosen,
                        std::size_t size, const Bitset& candidates) {
  if (size == k) return true;
  if (size + candidates.count() < k) return false;
  const std::size_t v = candidates.first();
  Bitset with = candidates;
  with.reset(v);
  with.subtract(adj[v]);
  chosen.set(v);
  if (independent_search(adj, k, chosen, size + 1, with)) return true;
  chosen.reset(v);
  Bitset without = candidates;
  without.reset(v);
  return independent_search(adj, k, chosen, size, without);
}

}  // namespace

std::optional<VertexSet> general_graph_has_independent_set(const std::vector<Bitset>& adjacency,
                                                           std::size_t k,
                                                           std::size_t vertex_limit) {
  const std::size_t n = adjacency.size();
  if (n > vertex_limit)
    throw BudgetExceeded("general_graph_has_independent_set: n=" + std::to_string(n) +
                         " exceeds the brute-force limit " + std::to_string(vertex_limit));
  for (const auto& row : adjacency)
    if (row.size() != n) throw std::invalid_argument("adjacency rows must have size n");
  if (k == 0) return VertexSet(Side::Left, n);
  if (k > n) return std::nullopt;
  Bitset chosen(n);
  if (!independent_search(adjacency, k, chosen, 0, Bitset(n, true))) return std::nullopt;
  for (std::size_t v : chosen.indices())
    if (Bitset::intersects(adjacency[v], chosen))
      throw std::logic_error("general_graph_has_independent_set: invalid result");
  return VertexSet(Side::Left, chosen);
}

}  // namespace zaran::witness
