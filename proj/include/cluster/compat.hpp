#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/pattern.hpp"
#include "json.hpp"

namespace cluster {

/// The cluster variable x_{index; t(word)} (0-based index).
struct VariableRef {
  MutationWord word;
  std::size_t index = 0;

  bool operator==(const VariableRef&) const = default;
};

/// "2,1:1" style text, 1-based.
std::string to_string(const VariableRef& r);

/// F- and D-matrix entry (a.index, b.index) of x_b seen from the seed of a.
struct DegreeData {
  Int f = 0;
  Int d = 0;
};

/// Evolves B_{t(a)} along t(a) -> t0 -> t(b). The plain concatenation is the
/// default; the shared prefix may be elided.
DegreeData degree_data(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b,
                       bool elide_common_prefix = false);

/// (x_a || x_b): f-vector based compatibility degree.
Int compatibility_degree(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b,
                         bool elide_common_prefix = false);
/// (x_a || x_b)_d = [d entry]+.
Int d_compatibility_degree(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b,
                           bool elide_common_prefix = false);

/// Outcome of one property check, with the numbers that decided it.
struct PropertyReport {
  std::string property;
  bool holds = true;
  nlohmann::json details;
};

void to_json(nlohmann::json& j, const PropertyReport& r);

/// (x || x') = ((x')^v || x^v) where ^v moves refs into the pattern of -B^T;
/// for skew-symmetric B also (x || x') = (x' || x).
PropertyReport check_duality(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b);
/// s_i (x_{i;t} || x_{j;t'}) = s_j (x_{j;t'} || x_{i;t}).
PropertyReport check_symmetry_ratio(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b);
/// The degree computed in the principal submatrix B_J agrees with the full
/// pattern. Words and indices of a and b must lie in J (sorted, 0-based).
PropertyReport check_embedding(const ExchangeMatrix& b0, const std::vector<std::size_t>& j, const VariableRef& a,
                               const VariableRef& b);

/// Table of (refs[i] || refs[j]) for all ordered pairs, computed in parallel.
std::vector<std::vector<Int>> degree_table(const ExchangeMatrix& b0, const std::vector<VariableRef>& refs);
std::vector<std::vector<Int>> degree_table_serial(const ExchangeMatrix& b0, const std::vector<VariableRef>& refs);

}  // namespace cluster
