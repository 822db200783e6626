#include "zaran/report.hpp"

#include <cmath>

#include "zaran/random.hpp"

namespace zaran::report {

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json indices(const VertexSet& s) { return s.members(); }

namespace {

json numbers(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

}  // namespace

json to_json(const bounds::KstCheck& c) {
  return {{"average_degree", number(c.average_degree)},
          {"lhs", number(c.lhs)},
          {"rhs", number(c.rhs)},
          {"satisfied", c.satisfied}};
}

json to_json(const bounds::KstDegreeBound& b) {
  return {{"average_degree", number(b.average_degree)}, {"edges", number(b.edges)}};
}

json to_json(const bounds::HanselCheck& c) {
  return {{"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"satisfied", c.satisfied}};
}

json to_json(const bounds::SymmetricCheck& c) {
  return {{"small_term", number(c.small_term)}, {"large_term", number(c.large_term)},
          {"lhs", number(c.lhs)},               {"rhs", number(c.rhs)},
          {"satisfied", c.satisfied}};
}

json to_json(const bounds::AsymmetricCheck& c) {
  return {{"min_over_x", number(c.min_over_x)}, {"argmin_x", c.argmin_x},
          {"first_term", number(c.first_term)}, {"second_term", number(c.second_term)},
          {"rhs", number(c.rhs)},               {"satisfied", c.satisfied}};
}

json to_json(const bounds::BoundReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"r", r.r},
          {"union_edges", r.union_edges},
          {"kst", to_json(r.kst)},
          {"kst_degree_bound", optional_json(r.kst_degree_bound)},
          {"hansel", optional_json(r.hansel)},
          {"symmetric_sufficient", optional_json(r.symmetric_sufficient)},
          {"symmetric_necessary", optional_json(r.symmetric_necessary)},
          {"asymmetric_sufficient", optional_json(r.asymmetric_sufficient)},
          {"asymmetric_necessary", optional_json(r.asymmetric_necessary)},
          {"degenerate", r.degenerate},
          {"in_theorem_regime", r.in_theorem_regime},
          {"constants",
           {{"A", number(r.constants.A)},
            {"B", number(r.constants.B)},
            {"C", number(r.constants.C)},
            {"D", number(r.constants.D)}}}};
}

json to_json(const witness::WitnessResult& r) {
  json out = {{"verdict", witness::to_string(r.verdict)},
              {"method", witness::to_string(r.method)},
              {"nodes_explored", r.nodes_explored},
              {"complete", r.complete()}};
  if (r.found()) {
    out["S"] = indices(r.S);
    out["T"] = indices(r.T);
  } else {
    out["S"] = nullptr;
    out["T"] = nullptr;
  }
  return out;
}

json to_json(const construct::ConstructionCertificate& c) {
  json per = json::array();
  for (const auto& m : c.per_index)
    per.push_back({{"exact", number(m.exact)},
                   {"relaxed", number(m.relaxed)},
                   {"bound", m.bound ? number(*m.bound) : json(nullptr)}});
  return {{"mode", construct::to_string(c.mode)},
          {"log2_failure_bound", number(c.log2_failure_bound)},
          {"certified", c.certified},
          {"per_index", std::move(per)}};
}

json to_json(const construct::ConstructionOutcome& o) {
  return {{"status", construct::to_string(o.status)},
          {"attempts", o.attempts},
          {"last_witness", optional_json(o.last_witness)}};
}

json to_json(const attack::DeletionTrace& t) {
  json coins = json::array();
  for (const auto& c : t.coins)
    coins.push_back({{"index", c.index}, {"deleted", c.deleted == Side::Right ? "right" : "left"}});
  json out = {{"trial", t.trial},
              {"seed", t.seed},
              {"stream", t.stream},
              {"mode", attack::to_string(t.mode)},
              {"truncation", attack::to_string(t.truncation)},
              {"attacked", t.classes.attacked},
              {"marked", t.classes.kept},
              {"delete_right_probability", numbers(t.delete_right_probability)},
              {"coins", std::move(coins)},
              {"d_left", numbers(t.d_left)},
              {"d_right", numbers(t.d_right)},
              {"s_left", t.s_left},
              {"s_right", t.s_right},
              {"d_threshold_left", number(t.d_threshold_left)},
              {"d_threshold_right", number(t.d_threshold_right)},
              {"v_prime", indices(t.v_prime)},
              {"w_prime", indices(t.w_prime)},
              {"x_surv", indices(t.x_surv)},
              {"y_surv", indices(t.y_surv)},
              {"attacked_survivor_edges", t.attacked_survivor_edges},
              {"kept_survivor_edges", t.kept_survivor_edges},
              {"kept_edge_expectation", number(t.kept_edge_expectation)},
              {"kept_edge_bound", number(t.kept_edge_bound)},
              {"search_verdict", witness::to_string(t.search_verdict)},
              {"search_nodes", t.search_nodes}};
  if (t.witness)
    out["witness"] = {{"S", indices(t.witness->first)}, {"T", indices(t.witness->second)}};
  else
    out["witness"] = nullptr;
  return out;
}

json to_json(const attack::SurvivorStatistics& s) {
  return {{"trials", s.trials},
          {"mean_ratio_left", number(s.mean_ratio_left)},
          {"mean_ratio_right", number(s.mean_ratio_right)},
          {"fraction_meeting_quarter", number(s.fraction_meeting_quarter)},
          {"mean_kept_edges", number(s.mean_kept_edges)},
          {"stddev_kept_edges", number(s.stddev_kept_edges)},
          {"mean_kept_expectation", number(s.mean_kept_expectation)},
          {"mean_kept_bound", number(s.mean_kept_bound)}};
}

json to_json(const superconc::ScVerdict& v) {
  json out = {{"is_superconcentrator", v.is_superconcentrator},
              {"certified", v.certified},
              {"mode", superconc::to_string(v.mode)},
              {"k_lo", v.k_lo},
              {"k_hi", v.k_hi},
              {"pairs_checked", v.pairs_checked}};
  if (v.counterexample)
    out["counterexample"] = {{"k", v.counterexample->k},
                             {"S", indices(v.counterexample->S)},
                             {"T", indices(v.counterexample->T)},
                             {"max_flow", v.counterexample->max_flow}};
  else
    out["counterexample"] = nullptr;
  return out;
}

json to_json(const superconc::MiddleDecomposition& d) {
  return {{"k", d.k},
          {"threshold_base", number(d.threshold_base)},
          {"high_cut", number(d.high_cut)},
          {"low_cut", number(d.low_cut)},
          {"high", d.high},
          {"medium", d.medium},
          {"low", d.low},
          {"high_edges_v", d.high_edges_v},
          {"high_edges_w", d.high_edges_w},
          {"medium_edges_v", d.medium_edges_v},
          {"medium_edges_w", d.medium_edges_w},
          {"low_edges_v", d.low_edges_v},
          {"low_edges_w", d.low_edges_w}};
}

json to_json(const superconc::EdgeAuditReport& r) {
  json ladder = json::array();
  for (const auto& rung : r.ladder)
    ladder.push_back({{"k", rung.k},
                      {"classes", to_json(rung.classes)},
                      {"high_below_k", rung.high_below_k},
                      {"medium_incident_edges", rung.medium_incident_edges},
                      {"medium_target", number(rung.medium_target)},
                      {"medium_meets_target", rung.medium_meets_target},
                      {"symmetric", to_json(rung.symmetric)},
                      {"fixed_k_lhs", number(rung.fixed_k_lhs)}});
  return {{"n", r.n},
          {"m", r.m},
          {"B", number(r.B)},
          {"edges_vm_before", r.edges_vm_before},
          {"edges_mw_before", r.edges_mw_before},
          {"edges_vm_balanced", r.edges_vm_balanced},
          {"edges_mw_balanced", r.edges_mw_balanced},
          {"threshold_base", number(r.threshold_base)},
          {"ladder", std::move(ladder)},
          {"ladder_length", r.ladder.size()},
          {"ladder_min_length", r.ladder_min_length},
          {"bands_disjoint", r.bands_disjoint},
          {"medium_sets_disjoint", r.medium_sets_disjoint},
          {"total_edges", r.total_edges},
          {"total_target", number(r.total_target)},
          {"total_meets_target", r.total_meets_target}};
}

json to_json(const superconc::TradeoffReport& r) {
  return {{"n", r.n},
          {"D", number(r.D)},
          {"mirrored", r.mirrored},
          {"a", number(r.a)},
          {"b", number(r.b)},
          {"threshold_base", number(r.threshold_base)},
          {"ladder", r.ladder},
          {"medium_edges_v", r.medium_edges_v},
          {"L", r.L},
          {"k0", r.k0},
          {"min_medium_edges_v", r.min_medium_edges_v},
          {"sum_medium_edges_v", r.sum_medium_edges_v},
          {"edges_vm", r.edges_vm},
          {"pigeonhole_holds", r.pigeonhole_holds},
          {"medium_sets_disjoint", r.medium_sets_disjoint},
          {"high_below_k0", r.high_below_k0},
          {"objective_low_marked", number(r.objective_low_marked)},
          {"asymmetric", to_json(r.asymmetric)},
          {"lhs", number(r.lhs)},
          {"rhs_scale", number(r.rhs_scale)},
          {"rhs", number(r.rhs)}};
}

json envelope(const char* command) {
  return {{"version", kVersion}, {"rng_version", kRngVersion}, {"command", command}};
}

void flatten(const json& doc, const std::string& prefix, json& out) {
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (doc.is_array()) {
    bool scalar = true;
    for (const auto& e : doc) scalar = scalar && e.is_primitive();
    if (!scalar) {
      out[prefix] = doc.dump();
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (i) joined += ';';
      joined += doc[i].is_string() ? doc[i].get<std::string>() : doc[i].dump();
    }
    out[prefix] = joined;
    return;
  }
  out[prefix] = doc;
}

}  // namespace zaran::report
