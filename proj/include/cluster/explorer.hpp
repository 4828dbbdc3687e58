#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cluster/compat.hpp"
#include "cluster/exchange_matrix.hpp"
#include "cluster/pattern.hpp"
#include "json.hpp"

namespace cluster {

struct ExploreOptions {
  std::size_t max_seeds = 100000;
  std::size_t max_depth = 64;
  /// Expand each BFS level with OpenMP; the serial path gives identical output.
  bool parallel = true;
  /// Forwarded to the F-polynomial recursion (see EvolveOptions::max_terms).
  std::size_t max_terms = 0;
};

/// A cluster variable, identified by its principal-coefficient normal form.
struct VariableInfo {
  std::string key;
  IntVec g;
  IntVec d;
  MultiPoly f;
  /// Where the variable was first met.
  VariableRef ref;
};

/// Canonical text of (g-vector, F-polynomial).
std::string variable_key(const IntVec& g, const MultiPoly& f);
/// Key of x_{ref.index; t(ref.word)}.
std::string variable_key(const ExchangeMatrix& b0, const VariableRef& ref);

struct SeedNode {
  /// Variable ids in label order.
  std::vector<std::size_t> vars;
  ExchangeMatrix b;
  MutationWord word;
  /// Non-labeled seed key: sorted variable keys and the conjugated matrix.
  std::string key;
  IntMat c, g, d, f;
  /// Neighbor seed per direction, or npos when not explored.
  std::vector<std::size_t> neighbors;

  std::size_t depth() const { return word.size(); }
};

struct ExchangeEdge {
  std::size_t from;
  std::size_t to;
  /// Mutation direction in the labeling of `from`.
  std::size_t direction;
};

struct ExchangeGraph {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ExchangeMatrix initial;
  std::vector<VariableInfo> variables;
  std::vector<SeedNode> seeds;
  std::vector<ExchangeEdge> edges;
  bool complete = false;
  std::map<std::string, std::size_t> variable_index;

  std::optional<std::size_t> find_variable(const std::string& key) const;
  /// Id of the variable designated by ref (evolves its word).
  std::optional<std::size_t> find_variable(const VariableRef& ref) const;
};

/// Exchange-graph BFS from the initial seed, deduplicating non-labeled seeds.
ExchangeGraph explore(const ExchangeMatrix& b0, const ExploreOptions& opts = {});

/// Simplicial complex on cluster variables whose facets are the clusters.
struct ClusterComplex {
  std::vector<std::string> vertices;
  /// Sorted vertex indices of each cluster, in seed order.
  std::vector<std::vector<std::size_t>> facets;
};

ClusterComplex cluster_complex(const ExchangeGraph& g);
/// A cluster (as sorted variable ids) containing both variables.
std::optional<std::vector<std::size_t>> find_common_cluster(const ExchangeGraph& g, std::size_t a, std::size_t b);

/// X with X + {a} and X + {b} both clusters.
struct ExchangeWitness {
  std::vector<std::size_t> common;
  std::size_t seed_a;
  std::size_t seed_b;
};
std::optional<ExchangeWitness> find_exchange_witness(const ExchangeGraph& g, std::size_t a, std::size_t b);

std::string to_dot(const ExchangeGraph& g);
nlohmann::json to_json(const ExchangeGraph& g);
nlohmann::json to_json(const ClusterComplex& c);

}  // namespace cluster
