#include "zaran/io.hpp"

#include <fstream>
#include <sstream>

#include "zaran/errors.hpp"

namespace zaran::io {

namespace {

const json& field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) throw ParseError(path.empty() ? "document must be a JSON object"
                                                      : path + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end())
    throw ParseError((path.empty() ? std::string() : path + ".") + key + ": missing field");
  return *it;
}

std::size_t as_count(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw ParseError(path + ": expected an integer");
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  auto v = value.get<long long>();
  if (v < 0) throw ValidationError(path, "must be non-negative, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

std::size_t as_index(const json& value, std::size_t bound, const std::string& path) {
  std::size_t v = as_count(value, path);
  if (v >= bound)
    throw ValidationError(path, "index " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(bound) + ")");
  return v;
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected an array");
  return value;
}

VertexSet read_set(const json& value, Side side, std::size_t n, const std::string& path) {
  VertexSet s(side, n);
  const auto& arr = as_array(value, path);
  for (std::size_t j = 0; j < arr.size(); ++j)
    s.insert(as_index(arr[j], n, path + "[" + std::to_string(j) + "]"));
  return s;
}

std::pair<std::size_t, std::size_t> read_pair(const json& value, std::size_t bound_a,
                                              std::size_t bound_b, const std::string& path) {
  if (!value.is_array() || value.size() != 2) throw ParseError(path + ": expected [int, int]");
  return {as_index(value[0], bound_a, path + "[0]"), as_index(value[1], bound_b, path + "[1]")};
}

json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json arr = json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

}  // namespace

json to_json(const BicliqueFamily& family) {
  json bicliques = json::array();
  for (const auto& b : family.bicliques())
    bicliques.push_back({{"left", b.left.members()}, {"right", b.right.members()}});
  return {{"n", family.n()}, {"k", family.k()}, {"bicliques", std::move(bicliques)}};
}

json to_json(const BipartiteGraph& graph) {
  return {{"n_left", graph.n_left()},
          {"n_right", graph.n_right()},
          {"edges", pairs_to_json(graph.edges())}};
}

json to_json(const LayeredGraph& graph) {
  return {{"n", graph.n()},
          {"m", graph.m()},
          {"edges_vm", pairs_to_json(graph.edges_vm())},
          {"edges_mw", pairs_to_json(graph.edges_mw())}};
}

BicliqueFamily family_from_json(const json& doc) {
  std::size_t n = as_count(field(doc, "n", ""), "n");
  std::size_t k = as_count(field(doc, "k", ""), "k");
  if (k < 1) throw ValidationError("k", "must be at least 1");
  if (k > n) throw ValidationError("k", "must not exceed n=" + std::to_string(n));
  const auto& arr = as_array(field(doc, "bicliques", ""), "bicliques");
  std::vector<Biclique> bicliques;
  bicliques.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "bicliques[" + std::to_string(i) + "]";
    bicliques.push_back({read_set(field(arr[i], "left", path), Side::Left, n, path + ".left"),
                         read_set(field(arr[i], "right", path), Side::Right, n, path + ".right")});
  }
  return BicliqueFamily(n, k, std::move(bicliques));
}

BipartiteGraph graph_from_json(const json& doc) {
  std::size_t nl = as_count(field(doc, "n_left", ""), "n_left");
  std::size_t nr = as_count(field(doc, "n_right", ""), "n_right");
  BipartiteGraph g(nl, nr);
  const auto& arr = as_array(field(doc, "edges", ""), "edges");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto [v, w] = read_pair(arr[i], nl, nr, "edges[" + std::to_string(i) + "]");
    g.add_edge(v, w);
  }
  return g;
}

LayeredGraph layered_from_json(const json& doc) {
  std::size_t n = as_count(field(doc, "n", ""), "n");
  std::size_t m = as_count(field(doc, "m", ""), "m");
  LayeredGraph g(n, m);
  const auto& vm = as_array(field(doc, "edges_vm", ""), "edges_vm");
  for (std::size_t i = 0; i < vm.size(); ++i) {
    auto [v, mid] = read_pair(vm[i], n, m, "edges_vm[" + std::to_string(i) + "]");
    g.add_vm(v, mid);
  }
  const auto& mw = as_array(field(doc, "edges_mw", ""), "edges_mw");
  for (std::size_t i = 0; i < mw.size(); ++i) {
    auto [mid, w] = read_pair(mw[i], m, n, "edges_mw[" + std::to_string(i) + "]");
    g.add_mw(mid, w);
  }
  return g;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

BicliqueFamily load_family(const std::filesystem::path& path) {
  return family_from_json(read_json_file(path));
}
BipartiteGraph load_graph(const std::filesystem::path& path) {
  return graph_from_json(read_json_file(path));
}
LayeredGraph load_layered(const std::filesystem::path& path) {
  return layered_from_json(read_json_file(path));
}

void save(const std::filesystem::path& path, const BicliqueFamily& family) {
  write_json_file(path, to_json(family));
}
void save(const std::filesystem::path& path, const BipartiteGraph& graph) {
  write_json_file(path, to_json(graph));
}
void save(const std::filesystem::path& path, const LayeredGraph& graph) {
  write_json_file(path, to_json(graph));
}

}  // namespace zaran::io
