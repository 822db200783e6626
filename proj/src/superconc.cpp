#include "zaran/superconc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "zaran/errors.hpp"
#include "zaran/flow.hpp"
#include "zaran/random.hpp"

namespace zaran::superconc {

const char* to_string(VerifyMode m) { return m == VerifyMode::Exhaustive ? "exhaustive" : "sampled"; }

std::size_t disjoint_path_count(const LayeredGraph& g, const VertexSet& S, const VertexSet& T) {
  const std::size_t n = g.n();
  const std::size_t m = g.m();
  // source, sink, V, M_in, M_out, W
  const std::size_t source = 0, sink = 1, v0 = 2, min0 = v0 + n, mout0 = min0 + m, w0 = mout0 + m;
  flow::Dinic net(w0 + n);
  for (std::size_t s : S.members()) net.add_edge(source, v0 + s, 1);
  for (std::size_t t : T.members()) net.add_edge(w0 + t, sink, 1);
  for (std::size_t mid = 0; mid < m; ++mid) {
    const Bitset reach_in = g.in_neighbors(mid) & S.bits();
    const Bitset reach_out = g.out_neighbors(mid) & T.bits();
    if (reach_in.none() || reach_out.none()) continue;
    net.add_edge(min0 + mid, mout0 + mid, 1);
    for (std::size_t s : reach_in.indices()) net.add_edge(v0 + s, min0 + mid, 1);
    for (std::size_t t : reach_out.indices()) net.add_edge(mout0 + mid, w0 + t, 1);
  }
  return static_cast<std::size_t>(net.max_flow(source, sink));
}

namespace {

// Calls fn on each k-combination of [0, n) in lexicographic order until fn returns false.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!fn(idx)) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double choose(std::size_t n, std::size_t k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace

ScVerdict verify_superconcentrator(const LayeredGraph& g, const VerifyConfig& config) {
  const std::size_t n = g.n();
  ScVerdict out;
  out.mode = config.mode;
  out.k_lo = config.k_range ? config.k_range->first : 1;
  out.k_hi = config.k_range ? config.k_range->second : n;
  if (out.k_lo < 1 || out.k_hi > n || out.k_lo > out.k_hi)
    throw std::invalid_argument("verify_superconcentrator: k range must lie within [1, n]");

  if (config.mode == VerifyMode::Exhaustive) {
    double pairs = 0;
    for (std::size_t k = out.k_lo; k <= out.k_hi; ++k) pairs += choose(n, k) * choose(n, k);
    if (pairs > static_cast<double>(config.pair_budget))
      throw BudgetExceeded("verify_superconcentrator: " + std::to_string(pairs) +
                           " (S, T) pairs exceed the budget of " +
                           std::to_string(config.pair_budget));
    for (std::size_t k = out.k_lo; k <= out.k_hi && !out.counterexample; ++k) {
      for_each_combination(n, k, [&](const std::vector<std::size_t>& s_idx) {
        const auto S = VertexSet::from_indices(Side::Left, n, s_idx);
        return for_each_combination(n, k, [&](const std::vector<std::size_t>& t_idx) {
          const auto T = VertexSet::from_indices(Side::Right, n, t_idx);
          ++out.pairs_checked;
          const std::size_t f = disjoint_path_count(g, S, T);
          if (f < k) {
            out.counterexample = Counterexample{k, S, T, f};
            return false;
          }
          return true;
        });
      });
    }
    out.is_superconcentrator = !out.counterexample;
    out.certified = out.is_superconcentrator && out.k_lo == 1 && out.k_hi == n;
    return out;
  }

  RandomSource rng(config.seed, config.stream);
  for (std::size_t k = out.k_lo; k <= out.k_hi && !out.counterexample; ++k) {
    for (std::size_t s = 0; s < config.samples; ++s) {
      const auto S = VertexSet::from_indices(Side::Left, n, rng.sample_subset(n, k));
      const auto T = VertexSet::from_indices(Side::Right, n, rng.sample_subset(n, k));
      ++out.pairs_checked;
      const std::size_t f = disjoint_path_count(g, S, T);
      if (f < k) {
        out.counterexample = Counterexample{k, S, T, f};
        break;
      }
    }
  }
  out.is_superconcentrator = !out.counterexample;
  out.certified = false;
  return out;
}

BicliqueFamily middle_bicliques(const LayeredGraph& g, const std::vector<std::size_t>& restrict,
                                std::size_t k) {
  std::vector<Biclique> bicliques;
  bicliques.reserve(restrict.size());
  for (std::size_t mid : restrict)
    bicliques.push_back({VertexSet(Side::Left, g.in_neighbors(mid)),
                         VertexSet(Side::Right, g.out_neighbors(mid))});
  return BicliqueFamily(g.n(), k, std::move(bicliques));
}

MiddleDecomposition decompose(const LayeredGraph& g, std::size_t k, double threshold_base,
                              DegreeMeasure measure) {
  if (k < 1 || k > g.n()) throw std::invalid_argument("decompose: need 1 <= k <= n");
  if (!(threshold_base >= 1.0)) throw std::invalid_argument("decompose: threshold_base must be >= 1");
  MiddleDecomposition d;
  d.k = k;
  d.threshold_base = threshold_base;
  const double scale = static_cast<double>(g.n()) / static_cast<double>(k);
  d.high_cut = scale * threshold_base;
  d.low_cut = scale / threshold_base;
  for (std::size_t mid = 0; mid < g.m(); ++mid) {
    const std::size_t dv = g.deg_v(mid);
    const std::size_t dw = g.deg_w(mid);
    if (measure == DegreeMeasure::Balanced && dv != dw)
      throw UnbalancedGraph("decompose: middle vertex " + std::to_string(mid) + " has deg_V=" +
                            std::to_string(dv) + " but deg_W=" + std::to_string(dw));
    const double deg = static_cast<double>(measure == DegreeMeasure::Balanced ? dv : dw);
    if (deg >= d.high_cut) {
      d.high.push_back(mid);
      d.high_edges_v += dv;
      d.high_edges_w += dw;
    } else if (deg < d.low_cut) {
      d.low.push_back(mid);
      d.low_edges_v += dv;
      d.low_edges_w += dw;
    } else {
      d.medium.push_back(mid);
      d.medium_edges_v += dv;
      d.medium_edges_w += dw;
    }
  }
  return d;
}

bool is_balanced(const LayeredGraph& g, double a, double b) {
  const double slack = std::max(a, b);
  for (std::size_t mid = 0; mid < g.m(); ++mid) {
    const double dv = static_cast<double>(g.deg_v(mid));
    const double dw = static_cast<double>(g.deg_w(mid));
    if (!(std::abs(dv * b - dw * a) < slack) && !(dv == 0 && dw == 0)) return false;
  }
  return true;
}

LayeredGraph balance_degrees(const LayeredGraph& g, double a, double b) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("balance_degrees: a and b must be positive");
  const std::size_t n = g.n();
  LayeredGraph out = g;
  for (std::size_t mid = 0; mid < g.m(); ++mid) {
    const std::size_t dv = g.deg_v(mid);
    const std::size_t dw = g.deg_w(mid);
    const double lhs = static_cast<double>(dv) * b;
    const double rhs = static_cast<double>(dw) * a;
    if (lhs < rhs) {
      const auto target = static_cast<std::size_t>(std::floor(static_cast<double>(dw) * a / b));
      if (target > n)
        throw std::domain_error("balance_degrees: middle vertex " + std::to_string(mid) +
                                " needs in-degree " + std::to_string(target) + " > n");
      std::size_t have = dv;
      for (std::size_t v = 0; v < n && have < target; ++v)
        if (!out.has_vm(v, mid)) {
          out.add_vm(v, mid);
          ++have;
        }
    } else if (lhs > rhs) {
      const auto target = static_cast<std::size_t>(std::floor(static_cast<double>(dv) * b / a));
      if (target > n)
        throw std::domain_error("balance_degrees: middle vertex " + std::to_string(mid) +
                                " needs out-degree " + std::to_string(target) + " > n");
      std::size_t have = dw;
      for (std::size_t w = 0; w < n && have < target; ++w)
        if (!out.has_mw(mid, w)) {
          out.add_mw(mid, w);
          ++have;
        }
    }
  }
  return out;
}

std::vector<double> k_ladder(double n, double ratio) {
  const double lo = std::pow(n, 0.25);
  const double hi = std::pow(n, 0.75) * (1.0 + 1e-12);
  std::vector<double> ks;
  double k = std::ceil(lo * (1.0 - 1e-12));
  while (k <= hi) {
    ks.push_back(k);
    if (!(ratio > 1.0)) break;
    k = std::ceil(k * ratio);
  }
  return ks;
}

LadderDecomposition ladder_decompose(const LayeredGraph& g, double threshold_base,
                                     DegreeMeasure measure) {
  LadderDecomposition out;
  for (double k : k_ladder(static_cast<double>(g.n()), threshold_base * threshold_base))
    out.rungs.push_back(decompose(g, static_cast<std::size_t>(k), threshold_base, measure));
  out.bands_disjoint = true;
  // (n/k')t <= (n/k)/t  <=>  k' >= k t^2, compared without dividing.
  const long double tt = static_cast<long double>(threshold_base) * threshold_base;
  for (std::size_t i = 0; i + 1 < out.rungs.size(); ++i)
    if (static_cast<long double>(out.rungs[i + 1].k) < static_cast<long double>(out.rungs[i].k) * tt)
      out.bands_disjoint = false;
  Bitset seen(g.m());
  out.sets_disjoint = true;
  for (const auto& r : out.rungs)
    for (std::size_t mid : r.medium) {
      if (seen.test(mid)) out.sets_disjoint = false;
      seen.set(mid);
    }
  return out;
}

EdgeAuditReport edge_lower_bound_audit(const LayeredGraph& g, double B) {
  const std::size_t n = g.n();
  if (n < 3) throw std::invalid_argument("edge_lower_bound_audit: requires n >= 3");
  EdgeAuditReport rep;
  rep.n = n;
  rep.m = g.m();
  rep.B = B;
  rep.edges_vm_before = g.edge_count_vm();
  rep.edges_mw_before = g.edge_count_mw();
  const LayeredGraph bal = balance_degrees(g, 1.0, 1.0);
  rep.edges_vm_balanced = bal.edge_count_vm();
  rep.edges_mw_balanced = bal.edge_count_mw();
  const double logn = std::log2(static_cast<double>(n));
  const double loglogn = std::log2(logn);
  rep.threshold_base = logn * logn;
  rep.ladder_min_length = static_cast<std::size_t>(std::floor(0.1 * logn / loglogn));

  const auto ladder = ladder_decompose(bal, rep.threshold_base, DegreeMeasure::Balanced);
  rep.bands_disjoint = ladder.bands_disjoint;
  rep.medium_sets_disjoint = ladder.sets_disjoint;
  for (const auto& cls : ladder.rungs) {
    EdgeAuditRung rung;
    rung.k = cls.k;
    rung.classes = cls;
    rung.high_below_k = cls.high.size() < cls.k;
    rung.medium_incident_edges = cls.medium_edges_v;
    rung.medium_target = B / 2.0 * static_cast<double>(n) * logn;
    rung.medium_meets_target = static_cast<double>(rung.medium_incident_edges) >= rung.medium_target;
    std::vector<std::size_t> rest = cls.medium;
    rest.insert(rest.end(), cls.low.begin(), cls.low.end());
    std::sort(rest.begin(), rest.end());
    const auto profile = bounds::profile_from_family(middle_bicliques(bal, rest, cls.k));
    rung.symmetric = bounds::symmetric_condition(profile, B);
    const double scale = static_cast<double>(cls.k) / static_cast<double>(n);
    for (std::size_t mid : cls.low) {
      const double alpha = static_cast<double>(bal.deg_v(mid)) * scale;
      rung.fixed_k_lhs += alpha * alpha;
    }
    for (std::size_t mid : cls.medium) rung.fixed_k_lhs += static_cast<double>(bal.deg_v(mid)) * scale;
    rep.ladder.push_back(std::move(rung));
  }
  rep.total_edges = bal.edge_count();
  rep.total_target = B / 20.0 * static_cast<double>(n) * logn * logn / loglogn;
  rep.total_meets_target = static_cast<double>(rep.total_edges) >= rep.total_target;
  return rep;
}

TradeoffReport tradeoff_audit(const LayeredGraph& input, double D,
                              std::optional<std::pair<double, double>> ratio) {
  const std::size_t n = input.n();
  if (n < 2) throw std::invalid_argument("tradeoff_audit: requires n >= 2");
  TradeoffReport rep;
  rep.n = n;
  rep.D = D;
  double a = static_cast<double>(input.edge_count_vm()) / static_cast<double>(n);
  double b = static_cast<double>(input.edge_count_mw()) / static_cast<double>(n);
  if (!ratio) ratio = std::make_pair(a, b);
  if (!is_balanced(input, ratio->first, ratio->second))
    throw UnbalancedGraph("tradeoff_audit: middle degrees are not in ratio a:b; run balance_degrees first");

  LayeredGraph g = input;
  if (a > b) {
    g = input.mirrored();
    std::swap(a, b);
    rep.mirrored = true;
  }
  rep.a = a;
  rep.b = b;
  rep.edges_vm = g.edge_count_vm();
  rep.threshold_base = std::max(b * b, 1.0);

  const auto ladder = ladder_decompose(g, rep.threshold_base, DegreeMeasure::Out);
  rep.medium_sets_disjoint = ladder.sets_disjoint;
  rep.L = ladder.rungs.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < ladder.rungs.size(); ++i) {
    rep.ladder.push_back(ladder.rungs[i].k);
    rep.medium_edges_v.push_back(ladder.rungs[i].medium_edges_v);
    rep.sum_medium_edges_v += ladder.rungs[i].medium_edges_v;
    if (ladder.rungs[i].medium_edges_v < ladder.rungs[best].medium_edges_v) best = i;
  }
  const auto& cls = ladder.rungs[best];
  rep.k0 = cls.k;
  rep.min_medium_edges_v = cls.medium_edges_v;
  rep.pigeonhole_holds =
      rep.min_medium_edges_v * rep.L <= rep.sum_medium_edges_v && rep.sum_medium_edges_v <= rep.edges_vm;
  rep.high_below_k0 = cls.high.size() < cls.k;

  std::vector<std::size_t> rest = cls.medium;
  rest.insert(rest.end(), cls.low.begin(), cls.low.end());
  std::sort(rest.begin(), rest.end());
  const auto profile = bounds::profile_from_family(middle_bicliques(g, rest, cls.k));
  std::vector<bool> in_low(rest.size());
  for (std::size_t j = 0; j < rest.size(); ++j)
    in_low[j] = std::binary_search(cls.low.begin(), cls.low.end(), rest[j]);
  rep.objective_low_marked = bounds::asymmetric_objective(profile, in_low);

  std::vector<bounds::ProfileEntry> live;
  for (const auto& e : profile.entries)
    if (!e.degenerate()) live.push_back(e);
  rep.asymmetric = bounds::asymmetric_condition(bounds::make_profile(n, cls.k, live), D);

  const double logn = std::log2(static_cast<double>(n));
  rep.lhs = (a > 0 && b > 0) ? a * std::log2((a + b) / a) * std::log2(b) : 0.0;
  rep.rhs_scale = logn * logn;
  rep.rhs = D * rep.rhs_scale;
  return rep;
}

}  // namespace zaran::superconc
