#include "cluster/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad integer '" + tok + "' in " + what);
  }
  if (used != tok.size()) throw InvalidArgument("bad integer '" + tok + "' in " + what);
  return v;
}

IntMat parse_matrix_text(const std::string& text) {
  std::vector<IntVec> rows;
  std::string row;
  std::stringstream all(text);
  while (std::getline(all, row, ';')) {
    std::stringstream lines(row);
    std::string line;
    while (std::getline(lines, line)) {
      line = trim(line);
      if (line.empty()) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::stringstream ls(line);
      IntVec r;
      std::string tok;
      while (ls >> tok) r.push_back(parse_int(tok, "matrix row " + std::to_string(rows.size() + 1)));
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) throw InvalidArgument("empty matrix");
  return IntMat::from_rows(rows);
}

}  // namespace

IntMat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidArgument("matrix row " + std::to_string(rows.size() + 1) + " is not an array");
    IntVec row;
    for (const auto& v : r) {
      if (!v.is_number_integer())
        throw InvalidArgument("non-integer entry in matrix row " + std::to_string(rows.size() + 1));
      row.push_back(v.get<Int>());
    }
    rows.push_back(std::move(row));
  }
  return IntMat::from_rows(rows);
}

IntMat parse_matrix(const std::string& source) {
  std::string text = source;
  std::error_code ec;
  if (!source.empty() && source.find(';') == std::string::npos && source.front() != '[' &&
      std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return parse_matrix_text(text);
}

nlohmann::json matrix_to_json(const IntMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : m.to_rows()) j.push_back(r);
  return j;
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : p.display_order()) j.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array of terms");
  LaurentPoly p(arity);
  for (const auto& t : j) {
    const auto e = t.at("exponents").get<Exponent>();
    if (e.size() != arity) throw InvalidArgument("exponent arity mismatch in polynomial JSON");
    mpz_class c;
    if (c.set_str(t.at("coefficient").get<std::string>(), 10) != 0) throw InvalidArgument("bad coefficient");
    p.add_term(e, c);
  }
  return p;
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(trim(tok), "list '" + text + "'"));
  return out;
}

MutationWord parse_word(const std::string& text) {
  MutationWord w;
  for (Int k : parse_int_list(text)) {
    if (k < 1) throw InvalidArgument("mutation directions are 1-based, got " + std::to_string(k));
    w.push_back(static_cast<std::size_t>(k - 1));
  }
  return w;
}

std::string word_to_string(const MutationWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i] + 1);
  }
  return s;
}

VariableRef parse_ref(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw InvalidArgument("variable reference '" + text + "' must look like word:index");
  const Int idx = parse_int(trim(text.substr(colon + 1)), "variable reference '" + text + "'");
  if (idx < 1) throw InvalidArgument("variable index is 1-based in '" + text + "'");
  return {parse_word(text.substr(0, colon)), static_cast<std::size_t>(idx - 1)};
}

std::string format_matrix(const IntMat& m, const std::string& indent) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string v = std::to_string(m(i, j));
      if (j) out += ' ';
      out += std::string(width - v.size(), ' ') + v;
    }
    out += '\n';
  }
  return out;
}

}  // namespace cluster
