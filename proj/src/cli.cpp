#include "zaran/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "zaran/attack.hpp"
#include "zaran/bounds.hpp"
#include "zaran/construct.hpp"
#include "zaran/errors.hpp"
#include "zaran/io.hpp"
#include "zaran/report.hpp"
#include "zaran/superconc.hpp"
#include "zaran/witness.hpp"

namespace zaran::cli {

using nlohmann::json;
namespace fs = std::filesystem;

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  std::uint64_t value = 0;
  const std::string s(raw);
  std::size_t used = 0;
  try {
    value = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.front() == '-')
    throw UsageError(std::string(name) + ": expected an unsigned integer, got '" + s + "'");
  return value;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results keep
// index order; the first exception by index is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t count, std::size_t jobs,
                            const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

void ensure_writable(const std::string& path, bool force) {
  if (!force && fs::exists(path))
    throw UsageError(path + ": refusing to overwrite an existing file (use --force)");
}

void write_text(const std::string& path, const std::string& text, bool force) {
  ensure_writable(path, force);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open for writing");
  f << text;
  if (!f) throw std::runtime_error(path + ": write failed");
}

void emit(const json& doc, const std::string& path, bool force, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty())
    out << text;
  else
    write_text(path, text, force);
}

// A size list is [[m, n2], ...] with an optional third element repeating the
// pair; a document may wrap it as {"sizes": [...]}.
construct::SizeList sizes_from_json(const json& doc, const std::string& path) {
  const json& list = doc.is_object() && doc.contains("sizes") ? doc.at("sizes") : doc;
  const std::string base = doc.is_object() ? path + "sizes" : path;
  if (!list.is_array()) throw ValidationError(base.empty() ? "sizes" : base, "expected an array");
  construct::SizeList out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string here = base + "[" + std::to_string(i) + "]";
    const json& e = list[i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3)
      throw ValidationError(here, "expected [m, n] or [m, n, count]");
    for (std::size_t j = 0; j < e.size(); ++j)
      if (!e[j].is_number_unsigned() && !(e[j].is_number_integer() && e[j].get<long long>() >= 0))
        throw ValidationError(here + "[" + std::to_string(j) + "]", "expected a non-negative integer");
    const std::size_t count = e.size() == 3 ? e[2].get<std::size_t>() : 1;
    for (std::size_t c = 0; c < count; ++c)
      out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return out;
}

void check_sizes(std::size_t n, std::size_t k, const construct::SizeList& sizes) {
  if (k < 1 || k > n) throw ValidationError("k", "must satisfy 1 <= k <= n");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i].first > n || sizes[i].second > n)
      throw ValidationError("sizes[" + std::to_string(i) + "]", "side size exceeds n = " + std::to_string(n));
}

json sizes_json(const construct::SizeList& sizes) {
  json out = json::array();
  for (const auto& [m, n2] : sizes) out.push_back({m, n2});
  return out;
}

std::string sizes_label(const construct::SizeList& sizes) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (const auto& s : sizes) ++counts[s];
  std::string out;
  for (const auto& [s, c] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c) + "x" + std::to_string(s.first) + "x" + std::to_string(s.second);
  }
  return out;
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_bounds_table(const bounds::BoundReport& r, std::ostream& out) {
  auto row = [&out](const std::string& name, const std::string& value) {
    out << std::left << std::setw(34) << name << value << "\n";
  };
  row("n", std::to_string(r.n));
  row("k", std::to_string(r.k));
  row("bicliques", std::to_string(r.r));
  row("union edges", std::to_string(r.union_edges));
  row("kst lhs / rhs / ok", fmt(r.kst.lhs) + " / " + fmt(r.kst.rhs) + " / " + yes_no(r.kst.satisfied));
  if (r.kst_degree_bound)
    row("kst edge lower bound", fmt(r.kst_degree_bound->edges));
  if (r.hansel)
    row("hansel lhs / rhs / ok",
        fmt(r.hansel->lhs) + " / " + fmt(r.hansel->rhs) + " / " + yes_no(r.hansel->satisfied));
  auto sym = [&](const char* name, const std::optional<bounds::SymmetricCheck>& c) {
    if (c) row(name, fmt(c->lhs) + " / " + fmt(c->rhs) + " / " + yes_no(c->satisfied));
  };
  auto asym = [&](const char* name, const std::optional<bounds::AsymmetricCheck>& c) {
    if (c) row(name, fmt(c->min_over_x) + " / " + fmt(c->rhs) + " / " + yes_no(c->satisfied));
  };
  sym("symmetric sufficient (A)", r.symmetric_sufficient);
  sym("symmetric necessary (B)", r.symmetric_necessary);
  asym("asymmetric sufficient (C)", r.asymmetric_sufficient);
  asym("asymmetric necessary (D)", r.asymmetric_necessary);
  row("degenerate bicliques", std::to_string(r.degenerate.size()));
  row("in theorem regime", yes_no(r.in_theorem_regime));
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw ValidationError("--k-range", "expected a..b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const auto lo = std::stoull(a, &used_a);
    const auto hi = std::stoull(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError("--k-range", "expected a..b with unsigned integers, got '" + s + "'");
  }
}

struct Options {
  // shared
  std::string report;
  bool force = false;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::optional<std::uint64_t> budget;

  // construct
  std::size_t n = 0;
  std::size_t k = 0;
  std::string sizes_file;
  std::string construct_mode = "exact";
  std::size_t max_attempts = 3;
  std::string out_family;

  // verify / attack / bounds
  std::string family_file;
  std::string graph_file;
  std::optional<std::size_t> verify_k;
  std::string attack_mode = "sym";
  std::vector<std::size_t> marked;
  std::size_t trials = 1;
  bool no_truncation = false;
  std::optional<double> fixed_d;
  std::string json_file;
  bounds::Constants constants;

  // superconcentrators
  std::string layered_file;
  std::string k_range;
  std::string sc_mode = "exhaustive";
  std::size_t samples = 1000;
  int theorem = 7;
  double B = 0.01;
  double D = 0.01;
  bool balance = false;

  // sweep
  std::string grid_file;
  std::string csv_file;
};

witness::Config search_config(const Options& o) {
  witness::Config c;
  c.node_budget = o.budget ? *o.budget : env_or("ZARAN_NODE_BUDGET", c.node_budget);
  return c;
}

std::uint64_t require_seed(const Options& o, const char* command) {
  if (!o.seed) throw UsageError(std::string(command) + ": --seed is required");
  return *o.seed;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const std::uint64_t seed = require_seed(o, "construct");
  const auto sizes = sizes_from_json(io::read_json_file(o.sizes_file), "");
  check_sizes(o.n, o.k, sizes);
  if (o.max_attempts < 1) throw ValidationError("--max-attempts", "must be at least 1");
  const auto mode = o.construct_mode == "relaxed" ? construct::Mode::Relaxed : construct::Mode::Exact;
  if (!o.report.empty()) ensure_writable(o.report, o.force);
  if (!o.out_family.empty()) ensure_writable(o.out_family, o.force);

  const auto cert = construct::certify_union_bound(o.n, o.k, sizes, mode);
  RandomSource rng(seed, o.stream);
  const auto outcome = construct::construct_until_verified(o.n, o.k, sizes, rng, o.max_attempts, search_config(o));

  json doc = report::envelope("construct");
  doc["seed"] = seed;
  doc["stream"] = o.stream;
  doc["n"] = o.n;
  doc["k"] = o.k;
  doc["sizes"] = sizes_json(sizes);
  doc["certificate"] = report::to_json(cert);
  doc["outcome"] = report::to_json(outcome);
  doc["family"] = io::to_json(outcome.family);
  if (!o.out_family.empty()) io::write_json_file(o.out_family, io::to_json(outcome.family));
  emit(doc, o.report, o.force, out);
  return outcome.status == construct::Status::Exhausted ? kRefutation : kCompleted;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.family_file.empty() && o.graph_file.empty())
    throw UsageError("verify: one of --family or --graph is required");
  std::optional<BicliqueFamily> family;
  if (!o.family_file.empty()) family = io::load_family(o.family_file);
  const BipartiteGraph g = o.graph_file.empty() ? union_of(*family) : io::load_graph(o.graph_file);
  std::size_t k = 0;
  if (o.verify_k)
    k = *o.verify_k;
  else if (family)
    k = family->k();
  else
    throw UsageError("verify: --k is required with --graph alone");
  if (k < 1 || k > std::min(g.n_left(), g.n_right()))
    throw ValidationError("k", "must satisfy 1 <= k <= min(n_left, n_right)");
  if (!o.report.empty()) ensure_writable(o.report, o.force);

  const auto result = witness::has_kxk_independent_set(g, k, search_config(o));
  json doc = report::envelope("verify");
  doc["k"] = k;
  doc["n_left"] = g.n_left();
  doc["n_right"] = g.n_right();
  doc["edges"] = g.edge_count();
  doc["result"] = report::to_json(result);
  emit(doc, o.report, o.force, out);
  return result.found() ? kRefutation : kCompleted;
}

struct AttackRun {
  std::vector<attack::DeletionTrace> traces;  // up to and including the first success
  bool success = false;
};

AttackRun run_trials(const BicliqueFamily& family, const attack::AttackConfig& config, std::size_t jobs) {
  AttackRun run;
  const std::size_t batch = std::max<std::size_t>(1, jobs) * 4;
  for (std::size_t start = 0; start < config.trials && !run.success; start += batch) {
    const std::size_t count = std::min(batch, config.trials - start);
    auto traces = parallel_map<attack::DeletionTrace>(
        count, jobs, [&](std::size_t i) { return attack::run_trial(family, config, start + i); });
    for (auto& t : traces) {
      const bool hit = t.witness.has_value();
      run.traces.push_back(std::move(t));
      if (hit) {
        run.success = true;
        break;
      }
    }
  }
  return run;
}

int cmd_attack(const Options& o, std::ostream& out) {
  const std::uint64_t seed = require_seed(o, "attack");
  const auto family = io::load_family(o.family_file);
  if (o.trials < 1) throw ValidationError("--trials", "must be at least 1");
  attack::AttackConfig config;
  config.mode = o.attack_mode == "asym" ? attack::Mode::Asymmetric : attack::Mode::Symmetric;
  if (!o.marked.empty()) {
    if (config.mode != attack::Mode::Asymmetric) throw UsageError("attack: --marked requires --mode asym");
    for (std::size_t i = 0; i < o.marked.size(); ++i)
      if (o.marked[i] >= family.size())
        throw ValidationError("--marked[" + std::to_string(i) + "]",
                              "index " + std::to_string(o.marked[i]) + " out of range [0, " +
                                  std::to_string(family.size()) + ")");
    config.marked = o.marked;
  }
  config.trials = o.trials;
  config.truncation = o.no_truncation ? attack::Truncation::None : attack::Truncation::Exact;
  config.fixed_d = o.fixed_d;
  config.seed = seed;
  config.stream = o.stream;
  config.search = search_config(o);
  if (!o.report.empty()) ensure_writable(o.report, o.force);

  const auto run = run_trials(family, config, o.jobs);
  json doc = report::envelope("attack");
  doc["seed"] = seed;
  doc["stream"] = o.stream;
  doc["mode"] = attack::to_string(config.mode);
  doc["truncation"] = attack::to_string(config.truncation);
  doc["fixed_d"] = config.fixed_d ? report::number(*config.fixed_d) : json(nullptr);
  doc["trials_requested"] = o.trials;
  doc["trials_run"] = run.traces.size();
  doc["success"] = run.success;
  doc["trace"] = report::to_json(run.traces.back());
  doc["summary"] = config.truncation == attack::Truncation::Exact
                       ? report::to_json(attack::survivor_statistics(run.traces))
                       : json(nullptr);
  emit(doc, o.report, o.force, out);
  return run.success ? kRefutation : kCompleted;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto family = io::load_family(o.family_file);
  if (!o.json_file.empty()) ensure_writable(o.json_file, o.force);
  const auto rep = bounds::bound_report(family, o.constants);
  print_bounds_table(rep, out);
  if (!o.json_file.empty()) {
    json doc = report::envelope("bounds");
    doc["report"] = report::to_json(rep);
    write_text(o.json_file, doc.dump(2) + "\n", o.force);
  }
  return kCompleted;
}

int cmd_sc_verify(const Options& o, std::ostream& out) {
  const auto g = io::load_layered(o.layered_file);
  superconc::VerifyConfig config;
  config.mode = o.sc_mode == "sampled" ? superconc::VerifyMode::Sampled : superconc::VerifyMode::Exhaustive;
  if (!o.k_range.empty()) config.k_range = parse_k_range(o.k_range);
  config.samples = o.samples;
  config.pair_budget = o.budget ? *o.budget : env_or("ZARAN_PAIR_BUDGET", config.pair_budget);
  if (config.mode == superconc::VerifyMode::Sampled) {
    config.seed = require_seed(o, "sc-verify --mode sampled");
    config.stream = o.stream;
  }
  if (!o.report.empty()) ensure_writable(o.report, o.force);
  const auto verdict = superconc::verify_superconcentrator(g, config);
  json doc = report::envelope("sc-verify");
  if (config.mode == superconc::VerifyMode::Sampled) {
    doc["seed"] = config.seed;
    doc["stream"] = config.stream;
    doc["samples"] = config.samples;
  }
  doc["verdict"] = report::to_json(verdict);
  emit(doc, o.report, o.force, out);
  return verdict.counterexample ? kRefutation : kCompleted;
}

int cmd_sc_analyze(const Options& o, std::ostream& out) {
  auto g = io::load_layered(o.layered_file);
  if (!o.report.empty()) ensure_writable(o.report, o.force);
  json doc = report::envelope("sc-analyze");
  doc["theorem"] = o.theorem;
  if (o.theorem == 7) {
    doc["audit"] = report::to_json(superconc::edge_lower_bound_audit(g, o.B));
  } else {
    std::optional<std::pair<double, double>> ratio;
    if (o.balance) {
      const double a = static_cast<double>(g.edge_count_vm()) / static_cast<double>(g.n());
      const double b = static_cast<double>(g.edge_count_mw()) / static_cast<double>(g.n());
      g = superconc::balance_degrees(g, a, b);
      ratio = std::make_pair(a, b);
    }
    doc["balanced"] = o.balance;
    doc["audit"] = report::to_json(superconc::tradeoff_audit(g, o.D, ratio));
  }
  emit(doc, o.report, o.force, out);
  return kCompleted;
}

// Sweep: a grid document
//   {"command": "construct"|"verify"|"attack"|"bounds", "n": [...], "k": [...],
//    "sizes": [size-list, ...], "seeds": [...], ...options}
// expands to the Cartesian product n x k x sizes x seeds, in that nesting order.
struct GridPoint {
  std::size_t n, k;
  construct::SizeList sizes;
  std::uint64_t seed;
};

std::vector<std::uint64_t> unsigned_list(const json& grid, const char* key) {
  if (!grid.contains(key)) throw ValidationError(key, "missing");
  const json& v = grid.at(key);
  if (!v.is_array() || v.empty()) throw ValidationError(key, "expected a non-empty array");
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned())
      throw ValidationError(std::string(key) + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    out.push_back(v[i].get<std::uint64_t>());
  }
  return out;
}

json sweep_row(const std::string& command, const GridPoint& p, const json& grid,
               const witness::Config& search) {
  json row = {{"n", p.n}, {"k", p.k}, {"seed", p.seed}, {"sizes", sizes_label(p.sizes)}};
  RandomSource rng(p.seed, 0);
  json body;
  if (command == "construct") {
    const auto mode = grid.value("mode", std::string("exact")) == "relaxed" ? construct::Mode::Relaxed
                                                                           : construct::Mode::Exact;
    auto cert = report::to_json(construct::certify_union_bound(p.n, p.k, p.sizes, mode));
    cert.erase("per_index");
    const auto outcome =
        construct::construct_until_verified(p.n, p.k, p.sizes, rng, grid.value("max_attempts", 3u), search);
    body["certificate"] = cert;
    body["outcome"] = report::to_json(outcome);
    body["bounds"] = report::to_json(bounds::bound_report(outcome.family));
  } else {
    const auto family = construct::random_family(p.n, p.k, p.sizes, rng);
    if (command == "verify") {
      body["witness"] = report::to_json(witness::has_kxk_independent_set(union_of(family), p.k, search));
    } else if (command == "bounds") {
      body["bounds"] = report::to_json(bounds::bound_report(family));
    } else {
      attack::AttackConfig config;
      config.mode = grid.value("mode", std::string("sym")) == "asym" ? attack::Mode::Asymmetric
                                                                   : attack::Mode::Symmetric;
      config.trials = grid.value("trials", 1u);
      config.seed = p.seed;
      config.stream = 1;
      config.search = search;
      const auto outcome = attack::run_attack(family, config);
      body["attack"] = {{"success", outcome.success},
                        {"trials_run", outcome.trials_run},
                        {"search_verdict", witness::to_string(outcome.trace.search_verdict)},
                        {"d_threshold_left", report::number(outcome.trace.d_threshold_left)},
                        {"d_threshold_right", report::number(outcome.trace.d_threshold_right)},
                        {"x_surv", outcome.trace.x_surv.cardinality()},
                        {"y_surv", outcome.trace.y_surv.cardinality()}};
      body["bounds"] = report::to_json(bounds::bound_report(family));
    }
  }
  report::flatten(body, "", row);
  return row;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const json grid = io::read_json_file(o.grid_file);
  if (!grid.is_object()) throw ParseError(o.grid_file + ": expected an object");
  const std::string command = grid.value("command", std::string());
  static const std::set<std::string> known = {"construct", "verify", "attack", "bounds"};
  if (!known.count(command))
    throw ValidationError("command", "expected one of construct, verify, attack, bounds");
  const auto ns = unsigned_list(grid, "n");
  const auto ks = unsigned_list(grid, "k");
  const auto seeds = unsigned_list(grid, "seeds");
  if (!grid.contains("sizes") || !grid.at("sizes").is_array() || grid.at("sizes").empty())
    throw ValidationError("sizes", "expected a non-empty array of size lists");
  std::vector<construct::SizeList> size_lists;
  for (std::size_t i = 0; i < grid.at("sizes").size(); ++i)
    size_lists.push_back(sizes_from_json(grid.at("sizes")[i], "sizes[" + std::to_string(i) + "]"));

  std::vector<GridPoint> points;
  for (auto n : ns)
    for (auto k : ks)
      for (const auto& sizes : size_lists)
        for (auto seed : seeds) {
          check_sizes(n, k, sizes);
          points.push_back({n, k, sizes, seed});
        }
  if (!o.csv_file.empty()) ensure_writable(o.csv_file, o.force);

  const auto search = search_config(o);
  const auto rows = parallel_map<json>(points.size(), o.jobs, [&](std::size_t i) {
    return sweep_row(command, points[i], grid, search);
  });

  // Columns: the grid keys first, then every other key in sorted order.
  std::vector<std::string> columns = {"n", "k", "seed", "sizes"};
  std::set<std::string> rest;
  for (const auto& r : rows)
    for (const auto& [key, _] : r.items())
      if (std::find(columns.begin(), columns.begin() + 4, key) == columns.begin() + 4) rest.insert(key);
  columns.insert(columns.end(), rest.begin(), rest.end());

  std::ostringstream csv;
  for (std::size_t c = 0; c < columns.size(); ++c) csv << (c ? "," : "") << csv_field(columns[c]);
  csv << "\r\n";
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::string cell;
      if (r.contains(columns[c])) {
        const json& v = r.at(columns[c]);
        if (v.is_string())
          cell = v.get<std::string>();
        else if (!v.is_null())
          cell = v.dump();
      }
      csv << (c ? "," : "") << csv_field(cell);
    }
    csv << "\r\n";
  }
  if (o.csv_file.empty())
    out << csv.str();
  else
    write_text(o.csv_file, csv.str(), o.force);
  return kCompleted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Biclique unions without k x k independent sets: construction, bounds, "
               "deletion attacks and superconcentrator audits."};
  app.name("zaran");
  app.set_version_flag("--version", report::kVersion);
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub, bool randomized) {
    sub->add_option("--report", o.report, "Write the JSON report here instead of stdout");
    sub->add_flag("--force", o.force, "Overwrite existing output files");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (randomized) {
      sub->add_option("--seed", o.seed, "Random seed (required)");
      sub->add_option("--stream", o.stream, "Random stream id");
    }
  };

  auto* construct_cmd = app.add_subcommand("construct", "Random biclique placement with a union-bound certificate");
  common(construct_cmd, true);
  construct_cmd->add_option("--n", o.n, "Vertices per side")->required();
  construct_cmd->add_option("--k", o.k, "Independent-set side length")->required();
  construct_cmd->add_option("--sizes", o.sizes_file, "JSON size list [[m, n], ...]")->required()->check(CLI::ExistingFile);
  construct_cmd->add_option("--mode", o.construct_mode, "Certificate miss probability")
      ->check(CLI::IsMember({"exact", "relaxed"}));
  construct_cmd->add_option("--max-attempts", o.max_attempts, "Placement attempts");
  construct_cmd->add_option("--budget", o.budget, "Witness search node budget");
  construct_cmd->add_option("--out", o.out_family, "Write the family document here");

  auto* verify_cmd = app.add_subcommand("verify", "Search for a k x k independent set");
  common(verify_cmd, false);
  verify_cmd->add_option("--family", o.family_file, "Family JSON")->check(CLI::ExistingFile);
  verify_cmd->add_option("--graph", o.graph_file, "Graph JSON (overrides the family's union)")
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--k", o.verify_k, "Side length (defaults to the family's k)");
  verify_cmd->add_option("--budget", o.budget, "Node budget");

  auto* attack_cmd = app.add_subcommand("attack", "Random-deletion refutation");
  common(attack_cmd, true);
  attack_cmd->add_option("--family", o.family_file, "Family JSON")->required()->check(CLI::ExistingFile);
  attack_cmd->add_option("--mode", o.attack_mode, "sym or asym")->check(CLI::IsMember({"sym", "asym"}));
  attack_cmd->add_option("--marked", o.marked, "Kept indices (asym)")->delimiter(',');
  attack_cmd->add_option("--trials", o.trials, "Maximum trials");
  attack_cmd->add_flag("--no-truncation", o.no_truncation, "Skip thinning to 2^-d");
  attack_cmd->add_option("--fixed-d", o.fixed_d, "Fixed threshold d in bits");
  attack_cmd->add_option("--budget", o.budget, "Inner witness node budget");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the size conditions");
  bounds_cmd->add_flag("--force", o.force, "Overwrite existing output files");
  bounds_cmd->add_option("--family", o.family_file, "Family JSON")->required()->check(CLI::ExistingFile);
  bounds_cmd->add_option("--json", o.json_file, "Also write the JSON report here");
  bounds_cmd->add_option("--A", o.constants.A, "Symmetric sufficient constant");
  bounds_cmd->add_option("--B", o.constants.B, "Symmetric necessary constant");
  bounds_cmd->add_option("--C", o.constants.C, "Asymmetric sufficient constant");
  bounds_cmd->add_option("--D", o.constants.D, "Asymmetric necessary constant");

  auto* scv_cmd = app.add_subcommand("sc-verify", "Check the superconcentrator property");
  common(scv_cmd, true);
  scv_cmd->add_option("--layered", o.layered_file, "Layered graph JSON")->required()->check(CLI::ExistingFile);
  scv_cmd->add_option("--k-range", o.k_range, "Inclusive range a..b");
  scv_cmd->add_option("--mode", o.sc_mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  scv_cmd->add_option("--samples", o.samples, "Pairs per k (sampled)");
  scv_cmd->add_option("--budget", o.budget, "Exhaustive pair budget");

  auto* sca_cmd = app.add_subcommand("sc-analyze", "Degree-class audits");
  common(sca_cmd, false);
  sca_cmd->add_option("--layered", o.layered_file, "Layered graph JSON")->required()->check(CLI::ExistingFile);
  sca_cmd->add_option("--theorem", o.theorem, "7 (edge count) or 8 (tradeoff)")
      ->required()
      ->check(CLI::IsMember({7, 8}));
  auto* b_opt = sca_cmd->add_option("--B", o.B, "Constant for the edge audit");
  auto* d_opt = sca_cmd->add_option("--D", o.D, "Constant for the tradeoff audit");
  b_opt->excludes(d_opt);
  sca_cmd->add_flag("--balance", o.balance, "Balance to the graph's own a:b before the tradeoff audit");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid and write CSV");
  common(sweep_cmd, false);
  sweep_cmd->add_option("--grid", o.grid_file, "Grid JSON")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", o.csv_file, "CSV output (stdout if omitted)");
  sweep_cmd->add_option("--budget", o.budget, "Witness node budget");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kCompleted;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kCompleted;
  } catch (const CLI::CallForVersion&) {
    out << report::kVersion << "\n";
    return kCompleted;
  } catch (const CLI::ParseError& e) {
    err << "zaran: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (o.jobs == 0) o.jobs = 1;
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (attack_cmd->parsed()) return cmd_attack(o, out);
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (scv_cmd->parsed()) return cmd_sc_verify(o, out);
    if (sca_cmd->parsed()) {
      if (o.theorem == 8 && b_opt->count()) throw UsageError("sc-analyze: --B applies to --theorem 7");
      if (o.theorem == 7 && d_opt->count()) throw UsageError("sc-analyze: --D applies to --theorem 8");
      return cmd_sc_analyze(o, out);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
  } catch (const std::exception& e) {
    err << "zaran: " << e.what() << "\n";
    return kUsage;
  }
  err << "zaran: no subcommand\n";
  return kUsage;
}

}  // namespace zaran::cli
