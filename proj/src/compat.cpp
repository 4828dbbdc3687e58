#include "cluster/compat.hpp"

#include <algorithm>

#include "cluster/error.hpp"
#include "cluster/parallel.hpp"

namespace cluster {

std::string to_string(const VariableRef& r) {
  std::string s;
  for (std::size_t i = 0; i < r.word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.word[i] + 1);
  }
  return s + ":" + std::to_string(r.index + 1);
}

namespace {

void check_ref(const ExchangeMatrix& b0, const VariableRef& r) {
  check_word(r.word, b0.size());
  if (r.index >= b0.size()) throw InvalidArgument("variable index out of range in " + to_string(r));
}

nlohmann::json ref_json(const VariableRef& r) { return to_string(r); }

}  // namespace

DegreeData degree_data(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b, bool elide_common_prefix) {
  check_ref(b0, a);
  check_ref(b0, b);
  const ExchangeMatrix bt = b0.mutate_along(a.word);
  const MutationWord path = path_between(a.word, b.word, elide_common_prefix);
  const PatternState s = evolve(bt, path, {.polynomials = false});
  return {s.f(a.index, b.index), s.d(a.index, b.index)};
}

Int compatibility_degree(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b,
                         bool elide_common_prefix) {
  return degree_data(b0, a, b, elide_common_prefix).f;
}

Int d_compatibility_degree(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b,
                           bool elide_common_prefix) {
  return pos(degree_data(b0, a, b, elide_common_prefix).d);
}

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = {{"property", r.property}, {"holds", r.holds}, {"details", r.details}};
}

PropertyReport check_duality(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b) {
  const Int lhs = compatibility_degree(b0, a, b);
  const Int rhs = compatibility_degree(b0.dual(), b, a);
  PropertyReport r{"duality", lhs == rhs, {{"a", ref_json(a)}, {"b", ref_json(b)}, {"lhs", lhs}, {"rhs", rhs}}};
  if (b0.is_skew_symmetric()) {
    const Int rev = compatibility_degree(b0, b, a);
    r.details["reverse"] = rev;
    r.holds = r.holds && rev == lhs;
  }
  return r;
}

PropertyReport check_symmetry_ratio(const ExchangeMatrix& b0, const VariableRef& a, const VariableRef& b) {
  const Int ab = compatibility_degree(b0, a, b);
  const Int ba = compatibility_degree(b0, b, a);
  const Int si = b0.symmetrizer()[a.index], sj = b0.symmetrizer()[b.index];
  const bool holds = checked_mul(si, ab) == checked_mul(sj, ba) && ((ab == 0) == (ba == 0));
  return {"symmetry-ratio",
          holds,
          {{"a", ref_json(a)}, {"b", ref_json(b)}, {"ab", ab}, {"ba", ba}, {"s_i", si}, {"s_j", sj}}};
}

PropertyReport check_embedding(const ExchangeMatrix& b0, const std::vector<std::size_t>& j, const VariableRef& a,
                               const VariableRef& b) {
  if (j.empty() || !std::is_sorted(j.begin(), j.end()) || std::adjacent_find(j.begin(), j.end()) != j.end())
    throw InvalidArgument("index subset must be sorted and free of duplicates");
  if (j.back() >= b0.size()) throw InvalidArgument("index subset out of range");
  const auto local = [&](std::size_t k) {
    auto it = std::find(j.begin(), j.end(), k);
    if (it == j.end()) throw InvalidArgument("reference uses a direction outside the subset");
    return static_cast<std::size_t>(it - j.begin());
  };
  const auto restrict = [&](const VariableRef& r) {
    VariableRef out{{}, local(r.index)};
    for (std::size_t k : r.word) out.word.push_back(local(k));
    return out;
  };
  const VariableRef la = restrict(a), lb = restrict(b);
  const Int full = compatibility_degree(b0, a, b);
  const Int sub = compatibility_degree(b0.principal_submatrix(j), la, lb);
  return {"embedding", full == sub, {{"a", ref_json(a)}, {"b", ref_json(b)}, {"full", full}, {"sub", sub}}};
}

namespace {

template <class Loop>
std::vector<std::vector<Int>> table_with(const ExchangeMatrix& b0, const std::vector<VariableRef>& refs, Loop loop) {
  const std::size_t m = refs.size();
  std::vector<std::vector<Int>> t(m, std::vector<Int>(m, 0));
  loop(m * m, [&](std::size_t idx) {
    const std::size_t i = idx / m, j = idx % m;
    t[i][j] = compatibility_degree(b0, refs[i], refs[j]);
  });
  return t;
}

}  // namespace

std::vector<std::vector<Int>> degree_table(const ExchangeMatrix& b0, const std::vector<VariableRef>& refs) {
  return table_with(b0, refs, [](std::size_t n, auto&& f) { parallel_for(n, f); });
}

std::vector<std::vector<Int>> degree_table_serial(const ExchangeMatrix& b0, const std::vector<VariableRef>& refs) {
  return table_with(b0, refs, [](std::size_t n, auto&& f) { serial_for(n, f); });
}

}  // namespace cluster
