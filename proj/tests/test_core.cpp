#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "zaran/core.hpp"
#include "zaran/errors.hpp"
#include "zaran/io.hpp"
#include "zaran/random.hpp"

using namespace zaran;

namespace {

VertexSet L(std::size_t n, std::initializer_list<std::size_t> m) { return VertexSet(Side::Left, n, m); }
VertexSet R(std::size_t n, std::initializer_list<std::size_t> m) { return VertexSet(Side::Right, n, m); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("zaran_core_" + name);
}

}  // namespace

TEST_CASE("bitset word boundaries", "[core][bitset]") {
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    Bitset b(n, true);
    CHECK(b.count() == n);
    CHECK(b.complement().none());
    b.reset(n - 1);
    CHECK(b.count() == n - 1);
    CHECK(b.next(n - 1) == n);
    CHECK(b.complement().indices() == std::vector<std::size_t>{n - 1});
  }
  CHECK_THROWS_AS(Bitset(3) & Bitset(4), std::invalid_argument);
}

TEST_CASE("vertex set cardinality matches popcount", "[core]") {
  auto s = L(10, {1, 3, 9});
  CHECK(s.cardinality() == 3);
  CHECK(s.bits().count() == 3);
  CHECK(s.members() == std::vector<std::size_t>{1, 3, 9});
  CHECK_THROWS_AS(s.insert(10), std::out_of_range);
}

TEST_CASE("union_of examples", "[core]") {
  BicliqueFamily one(3, 1, {{L(3, {0, 1}), R(3, {0, 1})}});
  CHECK(union_of(one).edge_count() == 4);

  BicliqueFamily twice(3, 1, {{L(3, {0, 1}), R(3, {0, 1})}, {L(3, {0, 1}), R(3, {0, 1})}});
  CHECK(union_of(twice) == union_of(one));

  BicliqueFamily matching(2, 1, {{L(2, {0}), R(2, {0})}, {L(2, {1}), R(2, {1})}});
  const auto g = union_of(matching);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 0));
  CHECK(g.has_edge(1, 1));
  CHECK_FALSE(g.has_edge(0, 1));

  CHECK(union_of(BicliqueFamily(5, 2)).edge_count() == 0);
}

TEST_CASE("union_of is order independent and monotone", "[core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto fam = gen::random_family(12, 3, {{3, 4}, {5, 2}, {1, 7}, {6, 6}}, rng);
    auto bs = fam.bicliques();
    std::reverse(bs.begin(), bs.end());
    const auto g = union_of(fam);
    CHECK(union_of(BicliqueFamily(12, 3, bs)) == g);

    std::size_t row_sum = 0;
    for (const auto& row : g.rows()) row_sum += row.count();
    CHECK(g.edge_count() == row_sum);

    auto extra = gen::random_family(12, 3, {{2, 3}}, rng)[0];
    const auto bigger = union_of(fam.with(extra));
    for (auto [v, w] : g.edges()) CHECK(bigger.has_edge(v, w));
  }
}

TEST_CASE("transpose", "[core]") {
  CHECK(transpose(BipartiteGraph(0, 0)) == BipartiteGraph(0, 0));
  BipartiteGraph m(2, 2);
  m.add_edge(0, 1);
  const auto t = transpose(m);
  CHECK(t.edge_count() == 1);
  CHECK(t.has_edge(1, 0));

  std::mt19937_64 rng(3);
  const auto g = gen::random_graph(8, 8, 0.4, rng);
  CHECK(transpose(transpose(g)) == g);
  const auto r = gen::random_graph(5, 9, 0.5, rng);
  const auto rt = transpose(r);
  REQUIRE(rt.n_left() == 9);
  for (std::size_t v = 0; v < 5; ++v)
    for (std::size_t w = 0; w < 9; ++w) CHECK(r.has_edge(v, w) == rt.has_edge(w, v));
}

TEST_CASE("family invariants", "[core]") {
  CHECK_THROWS_AS(BicliqueFamily(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(BicliqueFamily(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(BicliqueFamily(4, 2, {{L(5, {0}), R(4, {0})}}), std::invalid_argument);

  BicliqueFamily f(4, 2, {{L(4, {0}), R(4, {})}, {L(4, {1}), R(4, {2})}});
  CHECK(lint_empty_bicliques(f) == std::vector<std::size_t>{0});
}

TEST_CASE("layered graph degrees and mirror", "[core]") {
  LayeredGraph g(3, 2);
  g.add_vm(0, 0);
  g.add_vm(1, 0);
  g.add_mw(0, 2);
  g.add_mw(1, 1);
  CHECK(g.deg_v(0) == 2);
  CHECK(g.deg_w(0) == 1);
  CHECK(g.edge_count() == 4);
  const auto m = g.mirrored();
  CHECK(m.deg_v(0) == 1);
  CHECK(m.deg_w(0) == 2);
  CHECK(m.has_vm(2, 0));
  CHECK(m.mirrored() == g);
}

TEST_CASE("json round trips", "[core][io]") {
  std::mt19937_64 rng(11);
  const auto fam = gen::random_family(10, 3, {{2, 3}, {4, 1}, {5, 5}}, rng);
  CHECK(io::family_from_json(io::to_json(fam)) == fam);

  const auto g = gen::random_graph(6, 9, 0.3, rng);
  CHECK(io::graph_from_json(io::to_json(g)) == g);

  const auto lg = gen::random_layered(5, 4, 0.5, 0.5, rng);
  CHECK(io::layered_from_json(io::to_json(lg)) == lg);

  const auto path = temp_file("family.json");
  io::save(path, fam);
  CHECK(io::load_family(path) == fam);
  std::filesystem::remove(path);
}

TEST_CASE("json rejection names the field", "[core][io]") {
  using nlohmann::json;
  auto doc = json::parse(R"({"n": 10, "k": 2, "bicliques": [{"left": [0], "right": [1]},
                                                          {"left": [3], "right": [10]}]})");
  try {
    io::family_from_json(doc);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("bicliques[1].right[0]") != std::string::npos);
  }

  doc = json::parse(R"({"n": 10, "k": 0, "bicliques": []})");
  CHECK_THROWS_AS(io::family_from_json(doc), ValidationError);
  CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"n": 10, "bicliques": []})")), ParseError);

  doc = json::parse(R"({"n_left": 2, "n_right": 2, "edges": [[0, 1], [2, 0]]})");
  try {
    io::graph_from_json(doc);
    FAIL("expected rejection");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
  }

  const auto path = temp_file("broken.json");
  std::ofstream(path) << "{\"n\": 3,";
  CHECK_THROWS_AS(io::load_family(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("random source determinism", "[core][random]") {
  RandomSource a(42, 3), b(42, 3), c(42, 4);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 100; ++i) {
    xa.push_back(a.next_u64());
    xb.push_back(b.next_u64());
    xc.push_back(c.next_u64());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  CHECK(RandomSource(1).derive(5).next_u64() == RandomSource(1).derive(5).next_u64());
  CHECK(RandomSource(1).derive(5).next_u64() != RandomSource(1).derive(6).next_u64());
}

TEST_CASE("random source draws are uniform", "[core][random]") {
  RandomSource rng(9);
  std::vector<int> counts(7, 0);
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) ++counts[rng.below(7)];
  const double expect = draws / 7.0, sigma = std::sqrt(draws * (1.0 / 7) * (6.0 / 7));
  for (int c : counts) CHECK(std::abs(c - expect) < 4 * sigma);

  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  const auto s = rng.sample_subset(20, 5);
  CHECK(s.size() == 5);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}
