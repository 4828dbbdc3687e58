#pragma once

#include <string>
#include <vector>

#include "cluster/compat.hpp"
#include "cluster/int_matrix.hpp"
#include "cluster/laurent.hpp"
#include "json.hpp"

namespace cluster {

/// Matrix from a JSON array of rows, the text form "0 1; -1 0", or the path
/// of a file holding either.
IntMat parse_matrix(const std::string& source);
IntMat matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMat& m);

/// {"exponents": [...], "coefficient": "<decimal>"} per term, in display order.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j, std::size_t arity);

/// "2,1,2" (1-based) to a 0-based word; the empty string is the empty word.
MutationWord parse_word(const std::string& text);
std::string word_to_string(const MutationWord& w);
IntVec parse_int_list(const std::string& text);
/// "2,1:1" -> x_{1; t([2,1])}.
VariableRef parse_ref(const std::string& text);

/// Right-aligned columns, one matrix row per line.
std::string format_matrix(const IntMat& m, const std::string& indent = "");

}  // namespace cluster
