#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zaran/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run zaran_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zaran::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("zaran_cli_" + std::to_string(std::rand()) + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const auto p = path / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }
  static inline int counter = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

const char* kFamily = R"({"n": 12, "k": 3, "bicliques": [
  {"left": [0, 1, 2, 3, 4, 5], "right": [0, 1, 2, 3, 4, 5]},
  {"left": [6, 7, 8, 9, 10, 11], "right": [6, 7, 8, 9, 10, 11]},
  {"left": [0, 2, 4, 6, 8, 10], "right": [1, 3, 5, 7, 9, 11]}]})";

const char* kLayered = R"({"n": 3, "m": 3,
  "edges_vm": [[0,0],[1,0],[2,0],[0,1],[1,1],[2,1],[0,2],[1,2],[2,2]],
  "edges_mw": [[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]]})";

}  // namespace

TEST_CASE("csv quoting", "[cli]") {
  CHECK(zaran::cli::csv_field("plain") == "plain");
  CHECK(zaran::cli::csv_field("a,b") == "\"a,b\"");
  CHECK(zaran::cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(zaran::cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("bounds prints a table and writes json", "[cli]") {
  TempDir dir;
  const auto fam = dir.file("fam.json", kFamily);
  const auto out = dir.file("bounds.json");
  const auto r = zaran_run({"bounds", "--family", fam, "--json", out});
  CHECK(r.code == 0);
  CHECK(r.out.find("union edges") != std::string::npos);
  const auto doc = json::parse(slurp(out));
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["report"]["r"] == 3);
  CHECK(doc["report"]["hansel"]["lhs"] == 36.0);

  const auto again = zaran_run({"bounds", "--family", fam, "--json", out});
  CHECK(again.code == 2);
  CHECK(again.err.find("--force") != std::string::npos);
  CHECK(zaran_run({"bounds", "--family", fam, "--json", out, "--force"}).code == 0);
}

TEST_CASE("malformed family names the field", "[cli]") {
  TempDir dir;
  const auto bad = dir.file("bad.json", R"({"n": 4, "k": 2, "bicliques": [{"left": [0], "right": [7]}]})");
  auto r = zaran_run({"verify", "--family", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("bicliques[0].right[0]") != std::string::npos);

  const auto broken = dir.file("broken.json", "{\"n\": ");
  r = zaran_run({"bounds", "--family", broken});
  CHECK(r.code == 2);

  CHECK(zaran_run({"nonsense"}).code == 2);
  CHECK(zaran_run({}).code == 2);
}

TEST_CASE("randomized commands require a seed", "[cli]") {
  TempDir dir;
  const auto fam = dir.file("fam.json", kFamily);
  const auto sizes = dir.file("sizes.json", "[[4, 4, 10]]");
  auto r = zaran_run({"attack", "--family", fam, "--trials", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--seed") != std::string::npos);
  CHECK(zaran_run({"construct", "--n", "20", "--k", "3", "--sizes", sizes}).code == 2);
  const auto lay = dir.file("lay.json", kLayered);
  CHECK(zaran_run({"sc-verify", "--layered", lay, "--mode", "sampled"}).code == 2);
  CHECK(zaran_run({"sc-verify", "--layered", lay}).code == 0);
}

TEST_CASE("verify exit codes and budget override", "[cli]") {
  TempDir dir;
  const auto fam = dir.file("fam.json", kFamily);
  auto r = zaran_run({"verify", "--family", fam});
  CHECK(r.code == 1);  // the family leaves 3 x 3 independent sets
  CHECK(json::parse(r.out)["result"]["verdict"] == "found");

  const auto graph = dir.file("g.json", R"({"n_left": 3, "n_right": 3, "edges": [[0,0],[1,1],[2,2]]})");
  r = zaran_run({"verify", "--graph", graph, "--k", "2"});
  CHECK(r.code == 0);
  CHECK(zaran_run({"verify", "--graph", graph}).code == 2);

  setenv("ZARAN_NODE_BUDGET", "1", 1);
  r = zaran_run({"verify", "--family", fam});
  unsetenv("ZARAN_NODE_BUDGET");
  CHECK(json::parse(r.out)["result"]["verdict"] == "unknown");

  setenv("ZARAN_NODE_BUDGET", "lots", 1);
  r = zaran_run({"verify", "--family", fam});
  unsetenv("ZARAN_NODE_BUDGET");
  CHECK(r.code == 2);
  CHECK(r.err.find("ZARAN_NODE_BUDGET") != std::string::npos);
}

TEST_CASE("construct writes family and certificate", "[cli]") {
  TempDir dir;
  const auto sizes = dir.file("sizes.json", R"({"sizes": [[8, 8, 70]]})");
  const auto fam = dir.file("out.json");
  const auto r = zaran_run({"construct", "--n", "60", "--k", "8", "--sizes", sizes, "--seed", "4", "--out", fam});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["certificate"]["certified"] == true);
  CHECK(doc["outcome"]["status"] == "verified");
  CHECK(json::parse(slurp(fam))["bicliques"].size() == 70);

  const auto bad = dir.file("bad.json", "[[8, 80]]");
  const auto e = zaran_run({"construct", "--n", "60", "--k", "8", "--sizes", bad, "--seed", "1"});
  CHECK(e.code == 2);
  CHECK(e.err.find("sizes[0]") != std::string::npos);
}

TEST_CASE("sc commands", "[cli]") {
  TempDir dir;
  const auto lay = dir.file("lay.json", kLayered);
  auto r = zaran_run({"sc-verify", "--layered", lay, "--k-range", "1..3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"]["certified"] == true);
  CHECK(zaran_run({"sc-verify", "--layered", lay, "--k-range", "1-3"}).code == 2);

  r = zaran_run({"sc-analyze", "--layered", lay, "--theorem", "7", "--B", "0.5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["audit"]["bands_disjoint"] == true);
  r = zaran_run({"sc-analyze", "--layered", lay, "--theorem", "8", "--D", "0.5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["audit"]["pigeonhole_holds"] == true);
  CHECK(zaran_run({"sc-analyze", "--layered", lay, "--theorem", "8", "--B", "0.5"}).code == 2);
}

TEST_CASE("sweep writes one csv row per grid point", "[cli]") {
  TempDir dir;
  const auto grid = dir.file("grid.json", R"({"command": "construct", "n": [60], "k": [8],
      "sizes": [[[8, 8, 70]]], "seeds": [1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20]})");
  const auto csv1 = dir.file("a.csv"), csv2 = dir.file("b.csv");
  CHECK(zaran_run({"sweep", "--grid", grid, "--out", csv1}).code == 0);
  CHECK(zaran_run({"sweep", "--grid", grid, "--out", csv2, "--jobs", "3"}).code == 0);
  const auto text = slurp(csv1);
  CHECK(text == slurp(csv2));

  std::size_t lines = 0, pos = 0;
  while ((pos = text.find("\r\n", pos)) != std::string::npos) {
    ++lines;
    pos += 2;
  }
  CHECK(lines == 21);
  CHECK(text.rfind("n,k,seed,sizes,", 0) == 0);
  CHECK(text.find("outcome.status") != std::string::npos);
  CHECK(text.find("bounds.kst.lhs") != std::string::npos);

  const auto nogrid = dir.file("g2.json", R"({"command": "bounds", "n": [10], "k": [2], "sizes": [[[2,2]]]})");
  const auto r = zaran_run({"sweep", "--grid", nogrid});
  CHECK(r.code == 2);
  CHECK(r.err.find("seeds") != std::string::npos);
}

TEST_CASE("randomized reports are byte identical", "[cli]") {
  TempDir dir;
  const auto fam = dir.file("fam.json", kFamily);
  const auto sizes = dir.file("sizes.json", "[[5, 5, 12]]");
  const auto lay = dir.file("lay.json", kLayered);
  const std::vector<std::vector<std::string>> commands = {
      {"construct", "--n", "30", "--k", "4", "--sizes", sizes, "--seed", "9"},
      {"attack", "--family", fam, "--trials", "7", "--seed", "3"},
      {"attack", "--family", fam, "--mode", "asym", "--trials", "7", "--seed", "3", "--jobs", "2"},
      {"sc-verify", "--layered", lay, "--mode", "sampled", "--samples", "5", "--seed", "2"},
  };
  for (const auto& c : commands) {
    const auto a = zaran_run(c), b = zaran_run(c);
    CHECK(a.code != 2);
    CHECK(a.out == b.out);
  }
  const auto one = zaran_run({"attack", "--family", fam, "--trials", "9", "--seed", "3"});
  const auto many = zaran_run({"attack", "--family", fam, "--trials", "9", "--seed", "3", "--jobs", "4"});
  CHECK(one.out == many.out);
}
