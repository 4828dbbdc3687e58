#include <set>

#include "cluster/error.hpp"
#include "cluster/verify.hpp"
#include "doctest.h"

using namespace cluster;

TEST_CASE("reduced words") {
  CHECK(reduced_words(2, 3).size() == 7);
  CHECK(reduced_words(3, 2).size() == 1 + 3 + 6);
  for (const auto& w : reduced_words(4, 3)) CHECK(reduce_word(w) == w);
  CHECK(reduced_words(3, 0) == std::vector<MutationWord>{{}});
}

TEST_CASE("random matrices are skew-symmetrizable and reproducible") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ExchangeMatrix b = random_exchange_matrix(seed, 2 + seed % 3, 3);
    CHECK(b == random_exchange_matrix(seed, 2 + seed % 3, 3));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        CHECK(std::abs(b(i, j)) <= 3);
        CHECK(b.symmetrizer()[i] * b(i, j) == -b.symmetrizer()[j] * b(j, i));
      }
  }
}

TEST_CASE("built-in corpora") {
  const auto names = corpus_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& n : names) {
    const Corpus c = builtin_corpus(n);
    CHECK(c.name == n);
    CHECK_FALSE(c.cases.empty());
  }
  CHECK(builtin_corpus("random-200").cases.size() == 200);
  CHECK(builtin_corpus("finite-type").cases.size() == 10);
  const Corpus g = builtin_corpus("a2-golden");
  CHECK(g.cases[0].words.size() == 6);
  CHECK(g.cases[0].b.matrix() == IntMat{{0, 1}, {-1, 0}});
  const Corpus d4 = builtin_corpus("d4hat-counterexample");
  CHECK(d4.cases[0].b.size() == 5);
  CHECK(d4.cases[0].words[0] == MutationWord{0, 1, 2, 3});
  CHECK_THROWS_AS(builtin_corpus("nope"), NotFound);
}

TEST_CASE("suite catalogue") {
  std::set<std::string> names;
  for (const auto& s : suite_catalog()) {
    names.insert(s.name);
    CHECK_FALSE(s.default_corpora.empty());
    for (const auto& c : s.default_corpora) CHECK_NOTHROW(builtin_corpus(c));
  }
  CHECK(names.size() == suite_catalog().size());
  CHECK_THROWS_AS(run_suite("nope", std::nullopt), UnknownSuite);
  CHECK_THROWS_AS(run_suite("sign-coherence", std::string("nope")), NotFound);
}

TEST_CASE("expected outcomes of the counterexample suites") {
  const auto d = run_suite("d-exchangeability", std::string("a2hat-counterexample"));
  REQUIRE(d.runs.size() == 1);
  CHECK(d.runs[0].outcome() == "fail");
  CHECK_FALSE(d.runs[0].expect_pass);
  CHECK(d.runs[0].met());
  CHECK(d.ok());
  REQUIRE(d.runs[0].failures.size() == 1);
  CHECK(d.runs[0].failures[0]["degrees"] == nlohmann::json({1, 1}));

  const auto f = run_suite("f-exchangeability", std::string("d4hat-counterexample"));
  CHECK(f.runs[0].outcome() == "pass");
  CHECK(f.ok());

  const auto s = run_suite("d-symmetry", std::string("ex418"));
  CHECK(s.runs[0].outcome() == "fail");
  CHECK(s.runs[0].failures[0]["d_degrees"] == nlohmann::json({2, 1}));
  CHECK(s.ok());
}

TEST_CASE("a suite on a corpus it does not apply to is empty and unmet") {
  const auto r = run_suite("classical-degree", std::string("ex418"));
  CHECK(r.runs[0].outcome() == "empty");
  CHECK_FALSE(r.ok());
}

TEST_CASE("serial and parallel reports are identical") {
  for (const char* suite : {"sign-coherence", "duality", "h-matrix"}) {
    const auto par = run_suite(suite, std::nullopt, {.parallel = true});
    const auto ser = run_suite(suite, std::nullopt, {.parallel = false});
    CHECK(to_json(par).dump() == to_json(ser).dump());
    CHECK(par.ok());
  }
}

TEST_CASE("junit output") {
  const auto r = run_suite("counterexample-values", std::nullopt);
  const std::string x = to_junit(r);
  CHECK(x.find("<testsuites") != std::string::npos);
  CHECK(x.find("testcase classname=\"counterexample-values\" name=\"ex418\"") != std::string::npos);
  CHECK(x.find("<failure") == std::string::npos);
}
