#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/int_matrix.hpp"
#include "cluster/pattern.hpp"
#include "json.hpp"

namespace cluster {

/// One matrix of a corpus with the vertices it should be checked at.
struct CorpusCase {
  enum class Policy {
    /// The listed words.
    words,
    /// Every reduced word up to `depth`.
    exhaustive,
    /// Every seed of the (finite) exchange graph.
    explorer_complete,
  };

  std::string id;
  ExchangeMatrix b;
  Policy policy = Policy::words;
  std::vector<MutationWord> words = {};
  std::size_t depth = 0;
  /// Set for Cartan-generated cases.
  std::optional<IntMat> cartan = {};
  /// Case-specific expected data (counts, degrees, tables).
  nlohmann::json expect = nlohmann::json::object();
};

struct Corpus {
  std::string name;
  std::string provenance;
  std::vector<CorpusCase> cases;
};

/// Names of the built-in corpora, in a fixed order.
std::vector<std::string> corpus_names();
/// Regenerates a named corpus; NotFound for unknown names.
Corpus builtin_corpus(const std::string& name);
std::vector<Corpus> builtin_corpora();

/// Skew-symmetrizable matrix with symmetrizer entries in 1..3 and entries in
/// [-max_entry, max_entry].
ExchangeMatrix random_exchange_matrix(std::uint64_t seed, std::size_t n, Int max_entry);

/// Reduced words up to the given length, in shortlex order.
std::vector<MutationWord> reduced_words(std::size_t n, std::size_t depth);

struct VerifyOptions {
  bool parallel = true;
  /// Exponent-box budget for exact F-polynomials; larger cases fall back to
  /// integer recursions, jets, or are skipped.
  std::size_t max_terms = 2000;
  std::size_t max_failures_reported = 10;
};

/// Result of one suite on one corpus.
struct SuiteRun {
  std::string suite;
  std::string corpus;
  /// Whether the suite is expected to hold on this corpus.
  bool expect_pass = true;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// The first failures (case, item and the numbers involved).
  std::vector<nlohmann::json> failures = {};

  std::size_t checks() const { return passed + failed; }
  /// "pass", "fail", or "empty" when nothing could be checked.
  std::string outcome() const;
  bool met() const;
};

struct VerifyReport {
  std::vector<SuiteRun> runs;
  bool ok() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> default_corpora;
  /// Corpora on which the property is known to fail.
  std::vector<std::string> expected_failures;
};

std::vector<SuiteInfo> suite_catalog();

/// Runs a suite ("all" for every suite) on the given corpus, or on the
/// suite's default corpora. UnknownSuite / NotFound for bad names.
VerifyReport run_suite(const std::string& suite, const std::optional<std::string>& corpus,
                       const VerifyOptions& opts = {});
/// Runs one suite on an explicit corpus.
SuiteRun run_suite_on(const std::string& suite, const Corpus& corpus, const VerifyOptions& opts = {});

nlohmann::json to_json(const SuiteRun& r);
nlohmann::json to_json(const VerifyReport& r);
/// JUnit XML: one testsuite per suite, one testcase per corpus.
std::string to_junit(const VerifyReport& r);

}  // namespace cluster
