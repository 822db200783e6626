#include "zaran/attack.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zaran/random.hpp"

namespace zaran::attack {

const char* to_string(Mode m) { return m == Mode::Symmetric ? "symmetric" : "asymmetric"; }
const char* to_string(Truncation t) { return t == Truncation::Exact ? "exact_2_to_minus_d" : "none"; }

Classification classify(const bounds::NormalizedProfile& profile, Mode mode,
                        const std::optional<std::vector<std::size_t>>& marked) {
  const std::size_t r = profile.entries.size();
  std::vector<bool> keep(r, false);
  if (mode == Mode::Symmetric) {
    for (std::size_t i = 0; i < r; ++i) keep[i] = profile.entries[i].alpha <= 1.0;
  } else if (marked) {
    for (std::size_t i : *marked) {
      if (i >= r) throw std::invalid_argument("classify: marked index " + std::to_string(i) +
                                              " out of range");
      keep[i] = true;
    }
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      const auto& e = profile.entries[i];
      keep[i] = e.degenerate() || e.product_term() <= e.entropy_term();
    }
  }
  Classification c;
  for (std::size_t i = 0; i < r; ++i) (keep[i] ? c.kept : c.attacked).push_back(i);
  return c;
}

namespace {

// The ceil(n/2)-th smallest value.
double median_threshold(std::vector<double> d) {
  if (d.empty()) return 0.0;
  const std::size_t idx = (d.size() + 1) / 2 - 1;
  std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(idx), d.end());
  return d[idx];
}

VertexSet candidate_set(const std::vector<double>& d, double threshold, Side side) {
  const std::size_t n = d.size();
  const std::size_t limit = (n + 1) / 2;
  VertexSet s(side, n);
  std::size_t taken = 0;
  for (std::size_t v = 0; v < n && taken < limit; ++v)
    if (d[v] <= threshold) {
      s.insert(v);
      ++taken;
    }
  return s;
}

}  // namespace

DeletionTrace run_trial(const BicliqueFamily& family, const AttackConfig& config,
                        std::size_t trial) {
  const std::size_t n = family.n();
  const std::size_t k = family.k();
  const auto profile = bounds::profile_from_family(family);

  DeletionTrace tr;
  tr.trial = trial;
  tr.seed = config.seed;
  tr.stream = config.stream;
  tr.mode = config.mode;
  tr.truncation = config.truncation;
  tr.classes = classify(profile, config.mode, config.marked);

  RandomSource rng = RandomSource(config.seed, config.stream).derive(trial);

  // Deletion probabilities and per-vertex costs.
  tr.d_left.assign(n, 0.0);
  tr.d_right.assign(n, 0.0);
  tr.s_left.assign(n, 0);
  tr.s_right.assign(n, 0);
  for (std::size_t i : tr.classes.attacked) {
    const auto& e = profile.entries[i];
    double p = 0.5;
    if (config.mode == Mode::Asymmetric) {
      if (e.degenerate())
        throw std::invalid_argument("run_attack: attacked biclique " + std::to_string(i) +
                                    " has alpha + beta = 0");
      p = e.p();
    }
    tr.delete_right_probability.push_back(p);
    const auto& b = family[i];
    // v in V_i survives iff W_i is the deleted side (probability p).
    for (std::size_t v : b.left.members()) {
      tr.d_left[v] += std::log2(1.0 / p);
      ++tr.s_left[v];
    }
    for (std::size_t w : b.right.members()) {
      tr.d_right[w] += std::log2(1.0 / (1.0 - p));
      ++tr.s_right[w];
    }
  }

  // (1) one coin per attacked biclique.
  Bitset alive_left(n, true);
  Bitset alive_right(n, true);
  for (std::size_t j = 0; j < tr.classes.attacked.size(); ++j) {
    const std::size_t i = tr.classes.attacked[j];
    const bool delete_right = rng.uniform() < tr.delete_right_probability[j];
    tr.coins.push_back({i, delete_right ? Side::Right : Side::Left});
    if (delete_right)
      alive_right.subtract(family[i].right.bits());
    else
      alive_left.subtract(family[i].left.bits());
  }

  // (2)-(4) thresholds, candidate sets and thinning.
  if (config.truncation == Truncation::Exact) {
    tr.d_threshold_left = config.fixed_d ? *config.fixed_d : median_threshold(tr.d_left);
    tr.d_threshold_right = config.fixed_d ? *config.fixed_d : median_threshold(tr.d_right);
    tr.v_prime = candidate_set(tr.d_left, tr.d_threshold_left, Side::Left);
    tr.w_prime = candidate_set(tr.d_right, tr.d_threshold_right, Side::Right);
    auto thin = [&rng](const VertexSet& cand, const Bitset& alive, const std::vector<double>& d,
                       double threshold, Side side) {
      VertexSet out(side, cand.ground_size());
      for (std::size_t v : cand.members()) {
        if (!alive.test(v)) continue;
        if (rng.uniform() < std::exp2(-(threshold - d[v]))) out.insert(v);
      }
      return out;
    };
    tr.x_surv = thin(tr.v_prime, alive_left, tr.d_left, tr.d_threshold_left, Side::Left);
    tr.y_surv = thin(tr.w_prime, alive_right, tr.d_right, tr.d_threshold_right, Side::Right);
  } else {
    tr.v_prime = VertexSet(Side::Left, Bitset(n, true));
    tr.w_prime = VertexSet(Side::Right, Bitset(n, true));
    tr.x_surv = VertexSet(Side::Left, alive_left);
    tr.y_surv = VertexSet(Side::Right, alive_right);
  }

  // No attacked biclique may have an edge between the survivors.
  for (std::size_t i : tr.classes.attacked) {
    tr.attacked_survivor_edges +=
        Bitset::intersection_count(family[i].left.bits(), tr.x_surv.bits()) *
        Bitset::intersection_count(family[i].right.bits(), tr.y_surv.bits());
  }
  if (tr.attacked_survivor_edges != 0)
    throw std::logic_error("run_attack: attacked biclique left an edge between survivors");

  // Kept edges: observed, exact expectation, and the per-biclique bound.
  const BipartiteGraph kept = union_of(family, tr.classes.kept);
  auto survive_left = [&](std::size_t v) {
    if (config.truncation == Truncation::Exact)
      return tr.v_prime.contains(v) ? std::exp2(-tr.d_threshold_left) : 0.0;
    return std::exp2(-tr.d_left[v]);
  };
  auto survive_right = [&](std::size_t w) {
    if (config.truncation == Truncation::Exact)
      return tr.w_prime.contains(w) ? std::exp2(-tr.d_threshold_right) : 0.0;
    return std::exp2(-tr.d_right[w]);
  };
  std::vector<Bitset> attacked_right_of(n, Bitset(n));  // W-vertices sharing an attacked biclique
  for (std::size_t i : tr.classes.attacked)
    for (std::size_t v : family[i].left.members()) attacked_right_of[v] |= family[i].right.bits();
  for (std::size_t v = 0; v < n; ++v) {
    const Bitset& row = kept.row(v);
    tr.kept_survivor_edges +=
        tr.x_surv.contains(v) ? Bitset::intersection_count(row, tr.y_surv.bits()) : 0;
    const double pv = survive_left(v);
    if (pv == 0.0) continue;
    for (std::size_t w = row.first(); w < n; w = row.next(w + 1))
      if (!attacked_right_of[v].test(w)) tr.kept_edge_expectation += pv * survive_right(w);
  }
  const double edge_scale = std::exp2(-(tr.d_threshold_left + tr.d_threshold_right));
  for (std::size_t i : tr.classes.kept)
    tr.kept_edge_bound += static_cast<double>(family[i].edge_count()) * edge_scale;

  // (5) search the survivors against the kept subgraph, re-verify on the full union.
  const auto xs = tr.x_surv.members();
  const auto ys = tr.y_surv.members();
  if (xs.size() >= k && ys.size() >= k) {
    const BipartiteGraph sub = kept.induced(xs, ys);
    const auto res = witness::has_kxk_independent_set(sub, k, config.search);
    tr.search_verdict = res.verdict;
    tr.search_nodes = res.nodes_explored;
    if (res.found()) {
      VertexSet S(Side::Left, n), T(Side::Right, n);
      for (std::size_t a : res.S.members()) S.insert(xs[a]);
      for (std::size_t b : res.T.members()) T.insert(ys[b]);
      if (!witness::is_independent(union_of(family), S, T))
        throw std::logic_error("run_attack: witness is not independent in the full union");
      tr.witness = std::make_pair(std::move(S), std::move(T));
    }
  } else {
    tr.search_verdict = witness::Verdict::NotFound;
  }
  return tr;
}

AttackOutcome run_attack(const BicliqueFamily& family, const AttackConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("run_attack: trials must be >= 1");
  AttackOutcome out;
  for (std::size_t t = 0; t < config.trials; ++t) {
    out.trace = run_trial(family, config, t);
    out.trials_run = t + 1;
    if (out.trace.witness) {
      out.success = true;
      break;
    }
  }
  return out;
}

SurvivorStatistics survivor_statistics(const std::vector<DeletionTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("survivor_statistics: no traces");
  SurvivorStatistics s;
  s.trials = traces.size();
  double sum_sq = 0;
  std::size_t meeting = 0;
  for (const auto& tr : traces) {
    if (tr.truncation != Truncation::Exact)
      throw std::invalid_argument("survivor_statistics: traces must use exact truncation");
    const double n = static_cast<double>(tr.d_left.size());
    const double rl = static_cast<double>(tr.x_surv.cardinality()) / (n * std::exp2(-tr.d_threshold_left));
    const double rr = static_cast<double>(tr.y_surv.cardinality()) / (n * std::exp2(-tr.d_threshold_right));
    s.mean_ratio_left += rl;
    s.mean_ratio_right += rr;
    if (rl >= 0.25 && rr >= 0.25) ++meeting;
    const double e = static_cast<double>(tr.kept_survivor_edges);
    s.mean_kept_edges += e;
    sum_sq += e * e;
    s.mean_kept_expectation += tr.kept_edge_expectation;
    s.mean_kept_bound += tr.kept_edge_bound;
  }
  const double t = static_cast<double>(s.trials);
  s.mean_ratio_left /= t;
  s.mean_ratio_right /= t;
  s.fraction_meeting_quarter = static_cast<double>(meeting) / t;
  s.mean_kept_edges /= t;
  s.stddev_kept_edges = std::sqrt(std::max(0.0, sum_sq / t - s.mean_kept_edges * s.mean_kept_edges));
  s.mean_kept_expectation /= t;
  s.mean_kept_bound /= t;
  return s;
}

}  // namespace zaran::attack
