#include <fstream>
#include <sstream>

#include "cluster/cli.hpp"
#include "cluster/io.hpp"
#include "cluster/pattern.hpp"
#include "doctest.h"

using namespace cluster;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cluster-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("vectors reproduces the A2 row t2") {
  const Run r = cli({"vectors", "--matrix", "0 1; -1 0", "--word", "2,1", "--show", "c,g,d,f,fpolys", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(matrix_from_json(j["F"]) == IntMat{{1, 0}, {1, 1}});
  CHECK(matrix_from_json(j["D"]) == IntMat{{1, 0}, {1, 1}});
  CHECK(matrix_from_json(j["C"]) == IntMat{{-1, 0}, {0, -1}});
  CHECK(matrix_from_json(j["G"]) == IntMat{{-1, 0}, {0, -1}});
  CHECK(poly_from_json(j["fpolys"][0], 2) == LaurentPoly::parse("y1*y2 + y1 + 1", 2));
  CHECK(poly_from_json(j["fpolys"][1], 2) == LaurentPoly::parse("y2 + 1", 2));
}

TEST_CASE("vectors at the root and table output") {
  const Run r = cli({"vectors", "--matrix", "[[0,1],[-1,0]]", "--word", "", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(matrix_from_json(j["C"]) == IntMat::identity(2));
  CHECK(matrix_from_json(j["D"]) == -IntMat::identity(2));
  const Run t = cli({"vectors", "--matrix", "0 1; -1 0", "--word", "2,1,2", "--show", "f"});
  CHECK(t.out.find("F:\n  1 1\n  1 0\n") != std::string::npos);
}

TEST_CASE("matrix from a file") {
  const std::string path = "cli_test_matrix.json";
  std::ofstream(path) << "[[0, 1], [-1, 0]]";
  const Run r = cli({"vectors", "--matrix", path, "--word", "1", "--format", "json", "--show", "f"});
  CHECK(r.code == 0);
  std::remove(path.c_str());
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(cli({"vectors", "--matrix", "0 1; 1 0"}).code == 2);
  CHECK(cli({"vectors", "--matrix", "0 1; -1 0", "--word", "3"}).code == 2);
  CHECK(cli({"vectors", "--matrix", "0 1; -1"}).code == 2);
  CHECK(cli({"vectors"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"vectors", "--matrix", "0 1; -1 0", "--show", "q"}).code == 2);
  CHECK(cli({"vectors", "--matrix", "0 1; -1 0", "--format", "dot"}).code == 2);
  CHECK(cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(cli({"rank2", "--b", "1", "--c", "1", "--n", "2", "--check-recursion"}).code == 2);
  CHECK(cli({"classical", "--cartan", "2 -1 -1; -1 2 -1; -1 -1 2", "--alpha", "1,0,0", "--beta", "0,1,0"}).code == 2);
  const Run e = cli({"compat", "--matrix", "0 1; 1 0", "--a", ":1", "--b", "2:2"});
  CHECK(e.code == 2);
  CHECK(e.err.find("error") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("explore DOT of A2 has five nodes and five edges") {
  const Run r = cli({"explore", "--matrix", "0 1; -1 0", "--format", "dot"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "[label=\"{") == 5);
  CHECK(count(r.out, " -- ") == 5);
}

TEST_CASE("explore JSON with the complex is thread independent") {
  const Run a = cli({"--threads", "1", "explore", "--matrix", "0 1 0; -1 0 1; 0 -1 0", "--complex", "--format", "json"});
  const Run b = cli({"explore", "--matrix", "0 1 0; -1 0 1; 0 -1 0", "--complex", "--format", "json", "--threads", "3"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["variable_count"] == 9);
  CHECK(j["complex"]["facets"].size() == 14);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("compat reports degrees and property checks") {
  const Run r = cli({"compat", "--matrix", "0 2 -1; -2 0 1; 1 -1 0", "--a", ":3", "--b", "3,2,1:1", "--d", "--dual",
                     "--sym", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["degree_ab"] == 2);
  CHECK(j["degree_ba"] == 2);
  CHECK(j["d_degree_ab"] == 1);
  CHECK(j["d_degree_ba"] == 1);
  CHECK(j["checks"].size() == 2);
  const Run e = cli({"compat", "--matrix", "0 2 -1; -2 0 1; 1 -1 0", "--a", "1:1", "--b", "2,1:2", "--embed", "1,2"});
  CHECK(e.code == 0);
}

TEST_CASE("classical and rank2 subcommands") {
  const Run c = cli({"classical", "--cartan", "2 -1; -1 2", "--alpha", "-1,0", "--beta", "1,1", "--format", "json"});
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["classical"] == 1);
  CHECK(j["agree"] == true);
  const Run r = cli({"rank2", "--b", "2", "--c", "2", "--n", "4", "--check-recursion", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto k = nlohmann::json::parse(r.out);
  CHECK(matrix_from_json(k["closed_form"]) == IntMat{{3, 2}, {4, 3}});
  CHECK(k["agree"] == true);
}

TEST_CASE("mutate prints principal seeds") {
  const Run r = cli({"mutate", "--matrix", "0 1; -1 0", "--word", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(matrix_from_json(j["B"]) == IntMat{{0, -1}, {1, 0}});
  CHECK(j["y"][1] == nlohmann::json({0, -1}));
  const LaurentPoly x2 = poly_from_json(j["x"][1], 4);
  CHECK(x2 == LaurentPoly::parse("x1*y2*x2^-1 + x2^-1", {"x1", "x2", "y1", "y2"}));
  CHECK(cli({"mutate", "--matrix", "0 1; -1 0", "--word", "2,1", "--coefficients", "trivial"}).code == 0);
  CHECK(cli({"mutate", "--matrix", "0 1; -1 0", "--coefficients", "weird"}).code == 2);
}

TEST_CASE("verify exit codes and report formats") {
  const Run r = cli({"verify", "--suite", "d-exchangeability", "--corpus", "a2hat-counterexample", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["runs"][0]["outcome"] == "fail");
  CHECK(j["runs"][0]["expected"] == "fail");
  CHECK(nlohmann::json::parse(j.dump()) == j);
  const Run x = cli({"verify", "--suite", "counterexample-values", "--format", "junit"});
  CHECK(x.code == 0);
  CHECK(x.out.rfind("<?xml", 0) == 0);
  CHECK(cli({"verify", "--suite", "classical-degree", "--corpus", "ex418"}).code == 1);
  CHECK(cli({"verify", "--list", "--format", "json"}).code == 0);
}
