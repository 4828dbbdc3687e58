#include "cluster/verify.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cluster/compat.hpp"
#include "cluster/error.hpp"
#include "cluster/explorer.hpp"
#include "cluster/io.hpp"
#include "cluster/parallel.hpp"
#include "cluster/rank2.hpp"
#include "cluster/rootsys.hpp"

namespace cluster {

using json = nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Corpora

IntMat rows(std::initializer_list<std::initializer_list<Int>> r) { return IntMat(r); }

CorpusCase cartan_case(const std::string& id, const IntMat& c, std::size_t nvars, std::size_t nseeds) {
  CorpusCase k{.id = id, .b = CartanData(c).exchange_matrix()};
  k.policy = CorpusCase::Policy::explorer_complete;
  k.cartan = c;
  k.expect = {{"variables", nvars}, {"seeds", nseeds}};
  return k;
}

std::vector<CorpusCase> finite_cases() {
  return {
      cartan_case("A1", rows({{2}}), 2, 2),
      cartan_case("A2", rows({{2, -1}, {-1, 2}}), 5, 5),
      cartan_case("A3", rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 9, 14),
      cartan_case("A4", rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}), 14, 42),
      cartan_case("A1xA1", rows({{2, 0}, {0, 2}}), 4, 4),
      cartan_case("B2", rows({{2, -1}, {-2, 2}}), 6, 6),
      cartan_case("B3", rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}), 12, 20),
      cartan_case("C3", rows({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}), 12, 20),
      cartan_case("D4", rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}), 16, 50),
      cartan_case("G2", rows({{2, -1}, {-3, 2}}), 8, 8),
  };
}

// A2 along t0 -2- t1 -1- t2 -2- t3 -1- t4 -2- t5. Tropical entries are
// products of (sum of monomials)^exponent; cluster variables are
// numerator / (tropical denominator * x^xden).
json a2_rows() {
  auto x = [](const char* num, std::vector<const char*> den, std::vector<int> xden) {
    return json{{"num", num}, {"den", den}, {"xden", xden}};
  };
  auto y = [](std::vector<std::pair<const char*, int>> factors) {
    json j = json::array();
    for (auto& [p, e] : factors) j.push_back({p, e});
    return j;
  };
  const json x2_1 = x("x1*y2 + 1", {"y2 + 1"}, {0, 1});
  const json x1_2 = x("x1*y1*y2 + y1 + x2", {"y1*y2 + y1 + 1"}, {1, 1});
  const json x2_3 = x("y1 + x2", {"y1 + 1"}, {1, 0});
  return json::array({
      {{"word", ""},
       {"F", json::array({"1", "1"})},
       {"f", {{0, 0}, {0, 0}}},
       {"d", {{-1, 0}, {0, -1}}},
       {"c", {{1, 0}, {0, 1}}},
       {"g", {{1, 0}, {0, 1}}},
       {"x", json::array({"x1", "x2"})},
       {"y", {{1, 0}, {0, 1}}},
       {"trop_x", {x("x1", {}, {0, 0}), x("x2", {}, {0, 0})}},
       {"trop_y", {y({{"y1", 1}}), y({{"y2", 1}})}}},
      {{"word", "2"},
       {"F", json::array({"1", "y2 + 1"})},
       {"f", {{0, 0}, {0, 1}}},
       {"d", {{-1, 0}, {0, 1}}},
       {"c", {{1, 0}, {0, -1}}},
       {"g", {{1, 0}, {0, -1}}},
       {"x", json::array({"x1", "x1*y2*x2^-1 + x2^-1"})},
       {"y", {{1, 0}, {0, -1}}},
       {"trop_x", {x("x1", {}, {0, 0}), x2_1}},
       {"trop_y", {y({{"y1", 1}, {"y2 + 1", 1}}), y({{"y2", -1}})}}},
      {{"word", "2,1"},
       {"F", json::array({"y1*y2 + y1 + 1", "y2 + 1"})},
       {"f", {{1, 0}, {1, 1}}},
       {"d", {{1, 0}, {1, 1}}},
       {"c", {{-1, 0}, {0, -1}}},
       {"g", {{-1, 0}, {0, -1}}},
       {"x", json::array({"y1*y2*x2^-1 + y1*x1^-1*x2^-1 + x1^-1", "x1*y2*x2^-1 + x2^-1"})},
       {"y", {{-1, 0}, {0, -1}}},
       {"trop_x", {x1_2, x2_1}},
       {"trop_y", {y({{"y1", -1}, {"y2 + 1", -1}}), y({{"y1*y2 + y1 + 1", 1}, {"y2", -1}})}}},
      {{"word", "2,1,2"},
       {"F", json::array({"y1*y2 + y1 + 1", "y1 + 1"})},
       {"f", {{1, 1}, {1, 0}}},
       {"d", {{1, 1}, {1, 0}}},
       {"c", {{-1, 0}, {-1, 1}}},
       {"g", {{-1, -1}, {0, 1}}},
       {"x", json::array({"y1*y2*x2^-1 + y1*x1^-1*x2^-1 + x1^-1", "y1*x1^-1 + x2*x1^-1"})},
       {"y", {{-1, -1}, {0, 1}}},
       {"trop_x", {x1_2, x2_3}},
       {"trop_y", {y({{"y1 + 1", 1}, {"y1*y2", -1}}), y({{"y2", 1}, {"y1*y2 + y1 + 1", -1}})}}},
      {{"word", "2,1,2,1"},
       {"F", json::array({"1", "y1 + 1"})},
       {"f", {{0, 1}, {0, 0}}},
       {"d", {{0, 1}, {-1, 0}}},
       {"c", {{1, -1}, {1, 0}}},
       {"g", {{0, -1}, {1, 1}}},
       {"x", json::array({"x2", "y1*x1^-1 + x2*x1^-1"})},
       {"y", {{1, 1}, {-1, 0}}},
       {"trop_x", {x("x2", {}, {0, 0}), x2_3}},
       {"trop_y", {y({{"y1*y2", 1}, {"y1 + 1", -1}}), y({{"y1", -1}})}}},
      {{"word", "2,1,2,1,2"},
       {"F", json::array({"1", "1"})},
       {"f", {{0, 0}, {0, 0}}},
       {"d", {{0, -1}, {-1, 0}}},
       {"c", {{0, 1}, {1, 0}}},
       {"g", {{0, 1}, {1, 0}}},
       {"x", json::array({"x2", "x1"})},
       {"y", {{0, 1}, {1, 0}}},
       {"trop_x", {x("x2", {}, {0, 0}), x("x1", {}, {0, 0})}},
       {"trop_y", {y({{"y2", 1}}), y({{"y1", 1}})}}},
  });
}

Corpus make_a2_golden() {
  CorpusCase k{.id = "A2", .b = ExchangeMatrix(rows({{0, 1}, {-1, 0}}))};
  k.expect = {{"rows", a2_rows()}};
  for (const auto& r : k.expect["rows"]) k.words.push_back(parse_word(r["word"].get<std::string>()));
  return {"a2-golden", "A2 principal and general tropical tables", {k}};
}

CorpusCase rank2_case(Int b, Int c, std::int64_t max_n) {
  CorpusCase k{.id = "rank2(" + std::to_string(b) + "," + std::to_string(c) + ")", .b = rank2_matrix(b, c)};
  for (std::int64_t n = -max_n; n <= max_n; ++n) k.words.push_back(rank2_word(n));
  k.expect = {{"rank2", {b, c}}, {"max_n", max_n}};
  return k;
}

const IntMat kA2hat = rows({{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}});
const IntMat kD4hat =
    rows({{0, 1, 0, -1, 0}, {-1, 0, 1, 1, -1}, {0, -1, 0, 1, 0}, {1, -1, -1, 0, 1}, {0, 1, 0, -1, 0}});
const IntMat kEx418 = rows({{0, 0, -1, 0, 1, 0, 0},
                            {0, 0, -1, 0, 1, 0, 0},
                            {1, 1, 0, -1, -1, 1, 0},
                            {0, 0, 1, 0, 0, -1, 1},
                            {-1, -1, 1, 0, 0, -1, 1},
                            {0, 0, -1, 1, 1, 0, -1},
                            {0, 0, 0, -1, -1, 1, 0}});

CorpusCase counterexample_case(const std::string& id, const IntMat& b, const std::string& word, json expect) {
  CorpusCase k{.id = id, .b = ExchangeMatrix(b)};
  k.words = {parse_word(word)};
  k.expect = std::move(expect);
  return k;
}

Corpus make_random(std::size_t count, std::size_t depth) {
  Corpus c{"random-" + std::to_string(count), "bounded random skew-symmetrizable matrices", {}};
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = 0x5eed0000ULL + i;
    const std::size_t n = 2 + i % 3;
    CorpusCase k{.id = "random#" + std::to_string(i), .b = random_exchange_matrix(seed, n, 3)};
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::size_t> dir(0, n - 1);
    MutationWord w;
    while (w.size() < depth) {
      const std::size_t d = dir(rng);
      if (w.empty() || w.back() != d) {
        w.push_back(d);
        k.words.push_back(w);
      }
    }
    c.cases.push_back(std::move(k));
  }
  return c;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {
      "a2-golden",  "finite-type",          "b2-g2-depth8",         "a2hat-depth4", "rank2-2-2",
      "rank2-family", "a2hat-counterexample", "d4hat-counterexample", "ex418",        "random-200",
  };
  return n;
}

// ---------------------------------------------------------------------------
// Checks

struct Check {
  enum class Status { pass, fail, skip };
  Status status = Status::pass;
  json detail;
};

using Task = std::function<Check()>;
using Planner = std::function<std::vector<Task>(const CorpusCase&, const VerifyOptions&)>;

Check verdict(bool ok, json detail) { return {ok ? Check::Status::pass : Check::Status::fail, std::move(detail)}; }
Check skipped(json detail) { return {Check::Status::skip, std::move(detail)}; }

std::shared_ptr<const ExchangeGraph> complete_graph(const CorpusCase& c, const VerifyOptions& o) {
  auto g = std::make_shared<ExchangeGraph>(explore(c.b, {.parallel = o.parallel, .max_terms = 0}));
  if (!g->complete) throw RequiresComplete("exchange graph of " + c.id + " is not finite");
  return g;
}

std::vector<MutationWord> vertex_words(const CorpusCase& c, const VerifyOptions& o) {
  switch (c.policy) {
    case CorpusCase::Policy::words:
      return c.words;
    case CorpusCase::Policy::exhaustive:
      return reduced_words(c.b.size(), c.depth);
    case CorpusCase::Policy::explorer_complete: {
      const auto g = complete_graph(c, o);
      std::vector<MutationWord> out;
      for (const auto& s : g->seeds) out.push_back(s.word);
      return out;
    }
  }
  return {};
}

std::vector<VariableRef> case_refs(const CorpusCase& c, const VerifyOptions& o) {
  std::vector<VariableRef> out;
  if (c.policy == CorpusCase::Policy::explorer_complete) {
    const auto g = complete_graph(c, o);
    for (const auto& v : g->variables) out.push_back(v.ref);
    return out;
  }
  for (const auto& w : vertex_words(c, o))
    for (std::size_t i = 0; i < c.b.size(); ++i) out.push_back({w, i});
  return out;
}

json where(const CorpusCase& c, const MutationWord& w) { return {{"case", c.id}, {"word", word_to_string(w)}}; }
json where(const CorpusCase& c, const VariableRef& a, const VariableRef& b) {
  return {{"case", c.id}, {"a", to_string(a)}, {"b", to_string(b)}};
}

std::optional<PatternState> with_polynomials(const ExchangeMatrix& b, const MutationWord& w, const VerifyOptions& o,
                                             bool cluster_variables = false) {
  try {
    return evolve(b, w, {.polynomials = true, .cluster_variables = cluster_variables, .max_terms = o.max_terms});
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

PatternState integers(const ExchangeMatrix& b, const MutationWord& w) {
  return evolve(b, w, {.polynomials = false});
}

using VertexCheck = std::function<Check(const CorpusCase&, const MutationWord&, const VerifyOptions&)>;

Planner per_vertex(VertexCheck f) {
  return [f](const CorpusCase& c, const VerifyOptions& o) {
    std::vector<Task> tasks;
    for (auto& w : vertex_words(c, o)) tasks.push_back([f, &c, &o, w] { return f(c, w, o); });
    return tasks;
  };
}

using PairCheck = std::function<Check(const CorpusCase&, const VariableRef&, const VariableRef&)>;

Planner per_ref_pair(PairCheck f) {
  return [f](const CorpusCase& c, const VerifyOptions& o) {
    auto refs = std::make_shared<std::vector<VariableRef>>(case_refs(c, o));
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < refs->size(); ++i)
      for (std::size_t j = 0; j < refs->size(); ++j)
        tasks.push_back([f, &c, refs, i, j] { return f(c, (*refs)[i], (*refs)[j]); });
    return tasks;
  };
}

using GraphPairCheck =
    std::function<Check(const CorpusCase&, const ExchangeGraph&, std::size_t, std::size_t)>;

Planner per_variable_pair(GraphPairCheck f) {
  return [f](const CorpusCase& c, const VerifyOptions& o) {
    std::vector<Task> tasks;
    if (c.policy != CorpusCase::Policy::explorer_complete) return tasks;
    auto g = complete_graph(c, o);
    for (std::size_t a = 0; a < g->variables.size(); ++a)
      for (std::size_t b = 0; b < g->variables.size(); ++b) tasks.push_back([f, &c, g, a, b] { return f(c, *g, a, b); });
    return tasks;
  };
}

// --- vertex properties ------------------------------------------------------

LaurentPoly tropical_x(const json& e, const IntMat& p) {
  static const std::vector<std::string> xy = {"x1", "x2", "y1", "y2"};
  const std::size_t ell = p.rows();
  std::vector<Exponent> images;
  for (std::size_t i = 0; i < 2; ++i) {
    Exponent v(2 + ell, 0);
    v[i] = 1;
    images.push_back(v);
  }
  std::vector<IntVec> assignment;
  for (std::size_t j = 0; j < 2; ++j) {
    Exponent v(2 + ell, 0);
    for (std::size_t r = 0; r < ell; ++r) v[2 + r] = static_cast<int>(p(r, j));
    images.push_back(v);
    assignment.push_back(p.column(j));
  }
  LaurentPoly num = LaurentPoly::parse(e["num"].get<std::string>(), xy).substitute_monomials(2 + ell, images);
  Exponent shift(2 + ell, 0);
  for (const auto& d : e["den"]) {
    const IntVec t = tropical_eval(LaurentPoly::parse(d.get<std::string>(), 2), assignment);
    for (std::size_t r = 0; r < ell; ++r) shift[2 + r] -= static_cast<int>(t[r]);
  }
  for (std::size_t i = 0; i < 2; ++i) shift[i] -= e["xden"][i].get<int>();
  return num.shifted(shift);
}

IntVec tropical_y(const json& e, const IntMat& p) {
  const std::vector<IntVec> assignment = {p.column(0), p.column(1)};
  IntVec out(p.rows(), 0);
  for (const auto& f : e) {
    const IntVec t = tropical_eval(LaurentPoly::parse(f[0].get<std::string>(), 2), assignment);
    out = vec_add(out, vec_scale(f[1].get<Int>(), t));
  }
  return out;
}

std::vector<Task> plan_a2_golden(const CorpusCase& c, const VerifyOptions&) {
  std::vector<Task> tasks;
  if (!c.expect.contains("rows")) return tasks;
  const auto xy = std::vector<std::string>{"x1", "x2", "y1", "y2"};
  for (const auto& row : c.expect["rows"]) {
    tasks.push_back([&c, &row, xy] {
      const MutationWord w = parse_word(row["word"].get<std::string>());
      json detail = where(c, w);
      json bad = json::array();
      const PatternState s = evolve(c.b, w, {.polynomials = true, .cluster_variables = true});
      for (std::size_t j = 0; j < 2; ++j)
        if (s.fpolys[j] != LaurentPoly::parse(row["F"][j].get<std::string>(), 2))
          bad.push_back({{"F", j + 1}, {"got", s.fpolys[j].to_string()}});
      for (const char* m : {"f", "d", "c", "g"}) {
        const IntMat& got = *m == 'f' ? s.f : *m == 'd' ? s.d : *m == 'c' ? s.c : s.g;
        if (got != matrix_from_json(row[m])) bad.push_back({{m, got.to_string()}});
      }
      const auto principal = CoefficientSpec::principal(2);
      const Seed seed = mutate_seed_along(initial_seed(c.b, principal), w);
      for (std::size_t j = 0; j < 2; ++j) {
        const LaurentPoly x = LaurentPoly::parse(row["x"][j].get<std::string>(), xy);
        const IntVec y = row["y"][j].get<IntVec>();
        if (seed.x[j] != x || s.xvars[j] != x || separation_x(s.g.column(j), s.fpolys[j], c.b, principal) != x)
          bad.push_back({{"x", j + 1}, {"got", seed.x[j].to_string(xy)}});
        if (seed.y[j] != y || separation_y(j, s.c, s.fpolys, s.b, principal) != y)
          bad.push_back({{"y", j + 1}, {"got", seed.y[j]}});
      }
      // general tropical coefficients with two generators
      std::mt19937_64 rng(0xa2);
      std::uniform_int_distribution<int> dist(-4, 4);
      for (int trial = 0; trial < 25; ++trial) {
        IntMat p(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t q = 0; q < 2; ++q) p(r, q) = dist(rng);
        const auto spec = CoefficientSpec::tropical(p);
        const Seed st = mutate_seed_along(initial_seed(c.b, spec), w);
        for (std::size_t j = 0; j < 2; ++j) {
          if (st.y[j] != tropical_y(row["trop_y"][j], p) || separation_y(j, s.c, s.fpolys, s.b, spec) != st.y[j])
            bad.push_back({{"tropical_y", j + 1}, {"P", p.to_string()}, {"got", st.y[j]}});
          const LaurentPoly x = tropical_x(row["trop_x"][j], p);
          if (st.x[j] != x || separation_x(s.g.column(j), s.fpolys[j], c.b, spec) != x)
            bad.push_back({{"tropical_x", j + 1}, {"P", p.to_string()}, {"got", st.x[j].to_string()}});
        }
      }
      detail["mismatches"] = bad;
      return verdict(bad.empty(), detail);
    });
  }
  return tasks;
}

Check constant_term_one(const CorpusCase& c, const MutationWord& w, const VerifyOptions& o) {
  json detail = where(c, w);
  std::vector<mpz_class> constants;
  if (auto s = with_polynomials(c.b, w, o)) {
    detail["route"] = "polynomials";
    for (const auto& f : s->fpolys) constants.push_back(f.constant_term());
  } else {
    detail["route"] = "jets";
    for (const auto& f : evolve_jets(c.b, w, 1)) constants.push_back(f.constant_term());
  }
  bool ok = true;
  json values = json::array();
  for (const auto& v : constants) {
    ok = ok && v == 1;
    values.push_back(v.get_str());
  }
  detail["constant_terms"] = values;
  return verdict(ok, detail);
}

Check sign_coherence(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState s = integers(c.b, w);
  bool ok = true;
  for (std::size_t i = 0; i < s.rank(); ++i)
    ok = ok && sign_coherent_nonzero(s.c.column(i)) && sign_coherent_nonzero(s.g.row(i));
  json detail = where(c, w);
  detail["C"] = s.c.to_string();
  detail["G"] = s.g.to_string();
  return verdict(ok, detail);
}

Check f_equals_dplus(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState s = integers(c.b, w);
  json detail = where(c, w);
  detail["F"] = s.f.to_string();
  detail["D"] = s.d.to_string();
  return verdict(s.f == s.d.positive_part(), detail);
}

Check f_nonzero(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState s = integers(c.b, w);
  bool ok = true;
  for (std::size_t j = 0; j < s.rank(); ++j) {
    const IntVec d = s.d.column(j), f = s.f.column(j);
    const bool initial = std::any_of(d.begin(), d.end(), [](Int v) { return v < 0; });
    const bool zero = std::all_of(f.begin(), f.end(), [](Int v) { return v == 0; });
    ok = ok && initial == zero;
  }
  json detail = where(c, w);
  detail["F"] = s.f.to_string();
  detail["D"] = s.d.to_string();
  return verdict(ok, detail);
}

Check f_negation(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  json detail = where(c, w);
  const PatternState a = integers(c.b, w), b = integers(c.b.negated(), w);
  detail["F"] = a.f.to_string();
  detail["F(-B)"] = b.f.to_string();
  return verdict(a.f == b.f, detail);
}

Check f_symmetrizer(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState a = integers(c.b, w), b = integers(c.b.dual(), w);
  const IntVec& s = c.b.symmetrizer();
  bool ok = true;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) ok = ok && s[i] * a.f(i, j) == b.f(i, j) * s[j];
  json detail = where(c, w);
  detail["F"] = a.f.to_string();
  detail["F(-B^T)"] = b.f.to_string();
  detail["S"] = s;
  return verdict(ok, detail);
}

Check f_self_duality(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState a = integers(c.b, w);
  const PatternState back = integers(a.b.transposed(), reversed(w));
  json detail = where(c, w);
  detail["F^T"] = a.f.transpose().to_string();
  detail["F back"] = back.f.to_string();
  return verdict(a.f.transpose() == back.f, detail);
}

Check h_matrix_check(const CorpusCase& c, const MutationWord& w, const VerifyOptions& o) {
  const PatternState s = integers(c.b, w);
  const IntMat expect = -((-s.g).positive_part());
  IntMat h = h_matrix(s);
  json detail = where(c, w);
  detail["H"] = h.to_string();
  detail["-[-G]+"] = expect.to_string();
  bool ok = h == expect;
  if (auto p = with_polynomials(c.b, w, o)) {
    detail["polynomials"] = true;
    ok = ok && h_matrix(*p) == expect;
  }
  return verdict(ok, detail);
}

Check initial_mutation(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  const PatternState s = integers(c.b, w);
  json detail = where(c, w);
  json bad = json::array();
  for (std::size_t k = 0; k < s.rank(); ++k) {
    MutationWord rerooted{k};
    rerooted.insert(rerooted.end(), w.begin(), w.end());
    const IntMat oracle = integers(c.b.mutate(k), rerooted).f;
    const IntMat plus = initial_mutation_F(s, k, 1), minus = initial_mutation_F(s, k, -1);
    if (plus != minus || plus != oracle)
      bad.push_back({{"k", k + 1}, {"eps+", plus.to_string()}, {"eps-", minus.to_string()}, {"oracle", oracle.to_string()}});
  }
  detail["mismatches"] = bad;
  return verdict(bad.empty(), detail);
}

Check d_vector_laurent(const CorpusCase& c, const MutationWord& w, const VerifyOptions& o) {
  json detail = where(c, w);
  if (!with_polynomials(c.b, w, o)) return skipped(detail);
  const Seed seed = mutate_seed_along(initial_seed(c.b, CoefficientSpec::trivial(c.b.size())), w);
  const IntMat laurent = denominator_matrix(seed.x, c.b.size());
  const IntMat rec = integers(c.b, w).d;
  detail["D"] = rec.to_string();
  detail["denominators"] = laurent.to_string();
  return verdict(rec == laurent, detail);
}

Check separation(const CorpusCase& c, const MutationWord& w, const VerifyOptions& o) {
  json detail = where(c, w);
  auto s = with_polynomials(c.b, w, o, true);
  if (!s) return skipped(detail);
  const auto spec = CoefficientSpec::principal(c.b.size());
  const Seed seed = mutate_seed_along(initial_seed(c.b, spec), w);
  bool ok = true;
  for (std::size_t j = 0; j < c.b.size(); ++j) {
    ok = ok && separation_x(s->g.column(j), s->fpolys[j], c.b, spec) == seed.x[j] && s->xvars[j] == seed.x[j];
    ok = ok && separation_y(j, s->c, s->fpolys, s->b, spec) == seed.y[j] && s->c.column(j) == seed.y[j];
  }
  return verdict(ok, detail);
}

std::optional<std::pair<Int, Int>> rank2_params(const CorpusCase& c) {
  if (!c.expect.contains("rank2")) return std::nullopt;
  return std::make_pair(c.expect["rank2"][0].get<Int>(), c.expect["rank2"][1].get<Int>());
}

Check rank2_closed_form(const CorpusCase& c, const MutationWord& w, const VerifyOptions&) {
  json detail = where(c, w);
  const auto bc = rank2_params(c);
  if (!bc || bc->first * bc->second < 4) return skipped(detail);
  const std::int64_t n = rank2_vertex(w);
  const IntMat closed = closed_form_F(bc->first, bc->second, n);
  const IntMat rec = integers(c.b, w).f;
  detail["n"] = n;
  detail["closed"] = closed.to_string();
  detail["recursion"] = rec.to_string();
  return verdict(closed == rec, detail);
}

std::vector<Task> plan_chebyshev(const CorpusCase& c, const VerifyOptions&) {
  const auto bc = rank2_params(c);
  if (!bc || bc->first * bc->second < 4) return {};
  return {[&c, bc] {
    const int max_p = 2 * static_cast<int>(c.expect.value("max_n", 12)) + 2;
    const ChebyshevTable s(bc->first * bc->second - 2, max_p);
    int first_bad = -2;
    for (int p = 0; p <= max_p && first_bad == -2; ++p)
      if (!(s(p) > s(p - 1))) first_bad = p;
    return verdict(first_bad == -2, {{"case", c.id}, {"u", s.u()}, {"max_p", max_p}, {"first_violation", first_bad}});
  }};
}

// --- pair properties ---------------------------------------------------------

Check duality(const CorpusCase& c, const VariableRef& a, const VariableRef& b) {
  const PropertyReport r = check_duality(c.b, a, b);
  json detail = where(c, a, b);
  detail["report"] = r;
  return verdict(r.holds, detail);
}

Check symmetry_ratio(const CorpusCase& c, const VariableRef& a, const VariableRef& b) {
  const PropertyReport r = check_symmetry_ratio(c.b, a, b);
  json detail = where(c, a, b);
  detail["report"] = r;
  return verdict(r.holds, detail);
}

std::vector<Task> plan_embedding(const CorpusCase& c, const VerifyOptions&) {
  const std::size_t n = c.b.size();
  if (n < 2) return {};
  std::vector<std::size_t> subset;
  std::size_t depth = 4;
  if (c.expect.contains("embedding")) {
    for (Int j : c.expect["embedding"]["subset"].get<IntVec>()) subset.push_back(static_cast<std::size_t>(j - 1));
    depth = c.expect["embedding"]["depth"].get<std::size_t>();
  } else {
    for (std::size_t j = 0; j + 1 < n; ++j) subset.push_back(j);
  }
  auto refs = std::make_shared<std::vector<VariableRef>>();
  for (const auto& local : reduced_words(subset.size(), depth)) {
    MutationWord w;
    for (std::size_t k : local) w.push_back(subset[k]);
    for (std::size_t i : subset) refs->push_back({w, i});
  }
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < refs->size(); ++i)
    for (std::size_t j = 0; j < refs->size(); ++j)
      tasks.push_back([&c, refs, subset, i, j] {
        const PropertyReport r = check_embedding(c.b, subset, (*refs)[i], (*refs)[j]);
        json detail = where(c, (*refs)[i], (*refs)[j]);
        detail["report"] = r;
        return verdict(r.holds, detail);
      });
  return tasks;
}

std::vector<Task> plan_well_defined(const CorpusCase& c, const VerifyOptions& o) {
  std::vector<Task> tasks;
  if (c.policy != CorpusCase::Policy::explorer_complete) return tasks;
  auto g = complete_graph(c, o);
  auto occ = std::make_shared<std::vector<std::vector<VariableRef>>>(g->variables.size());
  for (const auto& s : g->seeds)
    for (std::size_t i = 0; i < s.vars.size(); ++i)
      if ((*occ)[s.vars[i]].size() < 3) (*occ)[s.vars[i]].push_back({s.word, i});
  for (std::size_t a = 0; a < occ->size(); ++a)
    for (std::size_t b = 0; b < occ->size(); ++b)
      tasks.push_back([&c, occ, a, b] {
        std::set<Int> fs, ds;
        for (const auto& ra : (*occ)[a])
          for (const auto& rb : (*occ)[b]) {
            const DegreeData dd = degree_data(c.b, ra, rb);
            fs.insert(dd.f);
            ds.insert(dd.d);
          }
        json detail = where(c, (*occ)[a][0], (*occ)[b][0]);
        detail["f_values"] = fs;
        detail["d_values"] = ds;
        return verdict(fs.size() == 1 && ds.size() == 1, detail);
      });
  return tasks;
}

Check compatibility_property(const CorpusCase& c, const ExchangeGraph& g, std::size_t a, std::size_t b) {
  const VariableRef& ra = g.variables[a].ref;
  const VariableRef& rb = g.variables[b].ref;
  const Int deg = compatibility_degree(c.b, ra, rb);
  const bool common = find_common_cluster(g, a, b).has_value();
  json detail = where(c, ra, rb);
  detail["degree"] = deg;
  detail["common_cluster"] = common;
  return verdict((deg == 0) == common, detail);
}

Int degree(const ExchangeMatrix& b, const VariableRef& x, const VariableRef& y, bool use_d) {
  return use_d ? d_compatibility_degree(b, x, y) : compatibility_degree(b, x, y);
}

Planner exchangeability(bool use_d) {
  return [use_d](const CorpusCase& c, const VerifyOptions& o) {
    std::vector<Task> tasks;
    if (c.policy == CorpusCase::Policy::explorer_complete) {
      auto g = complete_graph(c, o);
      for (std::size_t a = 0; a < g->variables.size(); ++a)
        for (std::size_t b = 0; b < g->variables.size(); ++b) {
          if (a == b) continue;
          tasks.push_back([&c, g, a, b, use_d] {
            const VariableRef& ra = g->variables[a].ref;
            const VariableRef& rb = g->variables[b].ref;
            const Int ab = degree(c.b, ra, rb, use_d), ba = degree(c.b, rb, ra, use_d);
            const bool witness = find_exchange_witness(*g, a, b).has_value();
            json detail = where(c, ra, rb);
            detail["degrees"] = {ab, ba};
            detail["exchangeable"] = witness;
            return verdict((ab == 1 && ba == 1) == witness, detail);
          });
        }
    } else if (const auto bc = rank2_params(c)) {
      for (std::int64_t m1 = -6; m1 <= 6; ++m1)
        for (std::int64_t m2 = -6; m2 <= 6; ++m2)
          tasks.push_back([&c, bc, m1, m2, use_d] {
            const VariableRef ra = rank2_line_ref(m1), rb = rank2_line_ref(m2);
            const Rank2Exchangeability r = rank2_exchangeability(bc->first, bc->second, ra, rb);
            const Int ab = use_d ? d_compatibility_degree(c.b, ra, rb) : r.degree_ab;
            const Int ba = use_d ? d_compatibility_degree(c.b, rb, ra) : r.degree_ba;
            json detail = where(c, ra, rb);
            detail["degrees"] = {ab, ba};
            detail["exchangeable"] = r.exchangeable;
            return verdict((ab == 1 && ba == 1) == r.exchangeable, detail);
          });
    } else if (c.expect.contains("pair")) {
      tasks.push_back([&c, use_d] {
        const json& p = c.expect["pair"];
        const VariableRef ra = parse_ref(p["a"].get<std::string>()), rb = parse_ref(p["b"].get<std::string>());
        const Int ab = degree(c.b, ra, rb, use_d), ba = degree(c.b, rb, ra, use_d);
        const bool exchangeable = p["exchangeable"].get<bool>();
        json detail = where(c, ra, rb);
        detail["degrees"] = {ab, ba};
        detail["exchangeable"] = exchangeable;
        return verdict((ab == 1 && ba == 1) == exchangeable, detail);
      });
    }
    return tasks;
  };
}

std::vector<Task> plan_d_symmetry(const CorpusCase& c, const VerifyOptions& o) {
  std::vector<Task> tasks;
  if (!c.b.is_skew_symmetric()) return tasks;
  auto check = [&c](const VariableRef& a, const VariableRef& b) {
    const Int ab = d_compatibility_degree(c.b, a, b), ba = d_compatibility_degree(c.b, b, a);
    json detail = where(c, a, b);
    detail["d_degrees"] = {ab, ba};
    return verdict(ab == ba, detail);
  };
  if (c.expect.contains("pair")) {
    tasks.push_back([check, &c] { return check(parse_ref(c.expect["pair"]["a"].get<std::string>()), parse_ref(c.expect["pair"]["b"].get<std::string>())); });
    return tasks;
  }
  auto refs = std::make_shared<std::vector<VariableRef>>(case_refs(c, o));
  for (std::size_t i = 0; i < refs->size(); ++i)
    for (std::size_t j = i + 1; j < refs->size(); ++j)
      tasks.push_back([check, refs, i, j] { return check((*refs)[i], (*refs)[j]); });
  return tasks;
}

std::vector<Task> plan_classical(const CorpusCase& c, const VerifyOptions& o) {
  std::vector<Task> tasks;
  if (!c.cartan) return tasks;
  auto cd = std::make_shared<CartanData>(*c.cartan);
  auto g = std::make_shared<ExchangeGraph>(explore(cd->exchange_matrix(), {.parallel = o.parallel}));
  auto roots = std::make_shared<std::vector<Root>>(enumerate_almost_positive_roots(*cd));
  auto ids = std::make_shared<std::vector<std::size_t>>();
  for (const auto& r : *roots) ids->push_back(root_to_variable(*g, r));
  for (std::size_t i = 0; i < roots->size(); ++i)
    for (std::size_t j = 0; j < roots->size(); ++j)
      tasks.push_back([&c, cd, g, roots, ids, i, j] {
        const Int cl = classical_degree(*cd, (*roots)[i], (*roots)[j]);
        const VariableRef& ra = g->variables[(*ids)[i]].ref;
        const VariableRef& rb = g->variables[(*ids)[j]].ref;
        const Int f = compatibility_degree(cd->exchange_matrix(), ra, rb);
        json detail = where(c, ra, rb);
        detail["alpha"] = (*roots)[i];
        detail["beta"] = (*roots)[j];
        detail["classical"] = cl;
        detail["f_degree"] = f;
        return verdict(cl == f, detail);
      });
  return tasks;
}

std::vector<Task> plan_exchange_graph(const CorpusCase& c, const VerifyOptions& o) {
  if (c.policy != CorpusCase::Policy::explorer_complete) return {};
  auto g = complete_graph(c, o);
  return {[&c, g] {
    const std::size_t n = c.b.size();
    json bad = json::array();
    if (c.expect.contains("variables") && g->variables.size() != c.expect["variables"].get<std::size_t>())
      bad.push_back({{"variables", g->variables.size()}});
    if (c.expect.contains("seeds") && g->seeds.size() != c.expect["seeds"].get<std::size_t>())
      bad.push_back({{"seeds", g->seeds.size()}});
    for (std::size_t s = 0; s < g->seeds.size(); ++s) {
      const SeedNode& node = g->seeds[s];
      std::set<std::size_t> vars(node.vars.begin(), node.vars.end());
      std::set<std::size_t> nbrs(node.neighbors.begin(), node.neighbors.end());
      if (vars.size() != n || nbrs.size() != n || nbrs.count(ExchangeGraph::npos))
        bad.push_back({{"seed", s}, {"reason", "degree"}});
      for (std::size_t k = 0; k < n; ++k) {
        const IntVec row = node.f.row(k);
        const bool zero = std::all_of(row.begin(), row.end(), [](Int v) { return v == 0; });
        if (zero != (vars.count(k) > 0)) bad.push_back({{"seed", s}, {"row", k + 1}, {"reason", "F row"}});
      }
    }
    return verdict(bad.empty(), {{"case", c.id}, {"mismatches", bad}});
  }};
}

std::vector<Task> plan_counterexample(const CorpusCase& c, const VerifyOptions&) {
  std::vector<Task> tasks;
  if (c.expect.contains("vertex"))
    tasks.push_back([&c] {
      const json& v = c.expect["vertex"];
      const MutationWord w = parse_word(v["word"].get<std::string>());
      const PatternState s = integers(c.b, w);
      const std::size_t col = v["column"].get<std::size_t>() - 1;
      json detail = where(c, w);
      detail["f"] = s.f.column(col);
      detail["d"] = s.d.column(col);
      return verdict(s.f.column(col) == v["f"].get<IntVec>() && s.d.column(col) == v["d"].get<IntVec>(), detail);
    });
  if (c.expect.contains("pair"))
    tasks.push_back([&c] {
      const json& p = c.expect["pair"];
      const VariableRef a = parse_ref(p["a"].get<std::string>()), b = parse_ref(p["b"].get<std::string>());
      json detail = where(c, a, b);
      bool ok = true;
      if (p.contains("f_degrees")) {
        const IntVec f = {compatibility_degree(c.b, a, b), compatibility_degree(c.b, b, a)};
        detail["f_degrees"] = f;
        ok = ok && f == p["f_degrees"].get<IntVec>();
      }
      if (p.contains("d_degrees")) {
        const IntVec d = {d_compatibility_degree(c.b, a, b), d_compatibility_degree(c.b, b, a)};
        detail["d_degrees"] = d;
        ok = ok && d == p["d_degrees"].get<IntVec>();
      }
      return verdict(ok, detail);
    });
  return tasks;
}

// ---------------------------------------------------------------------------
// Registry

struct SuiteDef {
  SuiteInfo info;
  Planner plan;
};

const std::vector<SuiteDef>& registry() {
  const std::vector<std::string> structural = {"finite-type", "rank2-family", "random-200"};
  static const std::vector<SuiteDef> defs = {
      {{"a2-golden", "A2 tables: principal and tropical seeds, F-polynomials, F/D/C/G", {"a2-golden"}, {}},
       plan_a2_golden},
      {{"constant-term-1", "every F-polynomial has constant term 1",
        {"a2-golden", "finite-type", "rank2-2-2", "random-200"}, {}},
       per_vertex(constant_term_one)},
      {{"sign-coherence", "c-vectors and rows of G are sign-coherent",
        {"finite-type", "rank2-family", "a2hat-depth4", "random-200"}, {}},
       per_vertex(sign_coherence)},
      {{"f-equals-dplus", "f = [d]+ columnwise",
        {"finite-type", "rank2-2-2", "a2hat-counterexample"}, {"a2hat-counterexample"}},
       per_vertex(f_equals_dplus)},
      {{"f-nonzero", "f-vector vanishes exactly on initial variables",
        {"finite-type", "rank2-family", "a2hat-depth4", "random-200"}, {}},
       per_vertex(f_nonzero)},
      {{"F-negation", "F-matrices of B and -B agree", structural, {}}, per_vertex(f_negation)},
      {{"F-symmetrizer", "s_i f_ij(B) = f_ij(-B^T) s_j", structural, {}}, per_vertex(f_symmetrizer)},
      {{"F-self-duality", "F^T equals the F-matrix of B_t^T read back to the root", structural, {}},
       per_vertex(f_self_duality)},
      {{"h-matrix", "H = -[-G]+", structural, {}}, per_vertex(h_matrix_check)},
      {{"initial-F-mutation", "initial-seed mutation of F is sign independent and matches re-rooting", structural,
        {}},
       per_vertex(initial_mutation)},
      {{"d-vector-laurent", "d-vector recursion matches Laurent denominators",
        {"a2-golden", "finite-type", "rank2-2-2", "a2hat-counterexample"}, {}},
       per_vertex(d_vector_laurent)},
      {{"separation", "x and y rebuilt from g, c and F agree with direct mutation",
        {"a2-golden", "finite-type", "rank2-2-2"}, {}},
       per_vertex(separation)},
      {{"rank2-closed-form", "Chebyshev closed forms equal the F-matrix recursion", {"rank2-family"}, {}},
       per_vertex(rank2_closed_form)},
      {{"chebyshev-monotone", "S_p(u) is strictly increasing for u = bc - 2 >= 2", {"rank2-family"}, {}},
       plan_chebyshev},
      {{"compat-well-defined", "degrees do not depend on the seeds chosen", {"finite-type"}, {}},
       plan_well_defined},
      {{"duality", "(x || x') = (x'^v || x^v), symmetric when B is skew-symmetric",
        {"finite-type", "b2-g2-depth8", "a2hat-depth4"}, {}},
       per_ref_pair(duality)},
      {{"symmetry-ratio", "s_i (x || x') = s_j (x' || x)", {"finite-type", "b2-g2-depth8"}, {}},
       per_ref_pair(symmetry_ratio)},
      {{"embedding", "degrees of a principal submatrix agree with the full pattern",
        {"a2hat-counterexample", "finite-type"}, {}},
       plan_embedding},
      {{"compatibility-property", "degree 0 iff a common cluster exists", {"finite-type"}, {}},
       per_variable_pair(compatibility_property)},
      {{"f-exchangeability", "f-degrees (1,1) iff exchangeable",
        {"finite-type", "rank2-family", "a2hat-counterexample", "d4hat-counterexample"}, {}},
       exchangeability(false)},
      {{"d-exchangeability", "d-degrees (1,1) iff exchangeable",
        {"finite-type", "rank2-family", "a2hat-counterexample", "d4hat-counterexample"},
        {"a2hat-counterexample", "d4hat-counterexample"}},
       exchangeability(true)},
      {{"d-symmetry", "d-degree is symmetric for skew-symmetric B", {"finite-type", "ex418"}, {"ex418"}},
       plan_d_symmetry},
      {{"classical-degree", "classical compatibility degree equals the f-degree", {"finite-type"}, {}},
       plan_classical},
      {{"exchange-graph", "seed and variable counts, n-regularity, F rows of initial variables", {"finite-type"}, {}},
       plan_exchange_graph},
      {{"counterexample-values", "f-, d-vectors and degrees of the known counterexamples",
        {"a2hat-counterexample", "d4hat-counterexample", "ex418"}, {}},
       plan_counterexample},
  };
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& d : registry())
    if (d.info.name == name) return d;
  throw UnknownSuite("unknown suite '" + name + "'");
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> corpus_names() { return names(); }

Corpus builtin_corpus(const std::string& name) {
  if (name == "a2-golden") return make_a2_golden();
  if (name == "finite-type") return {name, "Cartan matrices of finite type", finite_cases()};
  if (name == "b2-g2-depth8") {
    Corpus c{name, "B2 and G2 patterns to depth 8", {}};
    for (const auto& k : finite_cases())
      if (k.id == "B2" || k.id == "G2") {
        CorpusCase e{.id = k.id, .b = k.b, .policy = CorpusCase::Policy::exhaustive, .depth = 8};
        c.cases.push_back(e);
      }
    return c;
  }
  if (name == "a2hat-depth4")
    return {name,
            "affine A2 pattern to depth 4",
            {{.id = "A2hat", .b = ExchangeMatrix(kA2hat), .policy = CorpusCase::Policy::exhaustive, .depth = 4}}};
  if (name == "rank2-2-2") return {name, "Kronecker pattern, |n| <= 10", {rank2_case(2, 2, 10)}};
  if (name == "rank2-family")
    return {name,
            "infinite rank-2 patterns, |n| <= 12",
            {rank2_case(2, 2, 12), rank2_case(1, 4, 12), rank2_case(2, 3, 12), rank2_case(3, 3, 12)}};
  if (name == "a2hat-counterexample")
    return {name,
            "affine A2 pair with d-degrees (1,1) that is not exchangeable",
            {counterexample_case("A2hat", kA2hat, "3,2,1",
                                 {{"vertex", {{"word", "3,2,1"}, {"column", 1}, {"f", {1, 1, 2}}, {"d", {1, 1, 1}}}},
                                  {"pair",
                                   {{"a", ":3"},
                                    {"b", "3,2,1:1"},
                                    {"f_degrees", {2, 2}},
                                    {"d_degrees", {1, 1}},
                                    {"exchangeable", false}}},
                                  {"embedding", {{"subset", {1, 2}}, {"depth", 6}}}})}};
  if (name == "d4hat-counterexample")
    return {name,
            "affine D4 pair with d-degrees (1,1) that is not exchangeable",
            {counterexample_case(
                "D4hat", kD4hat, "1,2,3,4",
                {{"pair",
                  {{"a", ":1"}, {"b", "1,2,3,4:4"}, {"f_degrees", {2, 2}}, {"d_degrees", {1, 1}}, {"exchangeable", false}}}})}};
  if (name == "ex418")
    return {name,
            "7x7 surface-type matrix with asymmetric d-degrees",
            {counterexample_case("ex418", kEx418, "2,3,4,5,7",
                                 {{"pair", {{"a", ":2"}, {"b", "2,3,4,5,7:7"}, {"d_degrees", {2, 1}}}}})}};
  if (name == "random-200") return make_random(200, 6);
  throw NotFound("unknown corpus '" + name + "'");
}

std::vector<Corpus> builtin_corpora() {
  std::vector<Corpus> out;
  for (const auto& n : names()) out.push_back(builtin_corpus(n));
  return out;
}

ExchangeMatrix random_exchange_matrix(std::uint64_t seed, std::size_t n, Int max_entry) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> sdist(1, 3), mdist(-max_entry, max_entry);
  for (;;) {
    IntVec s(n);
    for (auto& v : s) v = sdist(rng);
    IntMat b(n, n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        const Int m = mdist(rng);
        const Int g = std::gcd(s[i], s[j]);
        b(i, j) = m * s[j] / g;
        b(j, i) = -m * s[i] / g;
        ok = std::abs(b(i, j)) <= max_entry && std::abs(b(j, i)) <= max_entry;
      }
    if (ok) return ExchangeMatrix(b);
  }
}

std::vector<MutationWord> reduced_words(std::size_t n, std::size_t depth) {
  std::vector<MutationWord> out{{}};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (out[start].size() == depth) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!out[start].empty() && out[start].back() == k) continue;
      MutationWord w = out[start];
      w.push_back(k);
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string SuiteRun::outcome() const {
  if (checks() == 0) return "empty";
  return failed == 0 ? "pass" : "fail";
}

bool SuiteRun::met() const { return outcome() == (expect_pass ? "pass" : "fail"); }

bool VerifyReport::ok() const {
  return std::all_of(runs.begin(), runs.end(), [](const SuiteRun& r) { return r.met(); });
}

std::vector<SuiteInfo> suite_catalog() {
  std::vector<SuiteInfo> out;
  for (const auto& d : registry()) out.push_back(d.info);
  return out;
}

SuiteRun run_suite_on(const std::string& suite, const Corpus& corpus, const VerifyOptions& opts) {
  const SuiteDef& def = find_suite(suite);
  SuiteRun run{.suite = suite, .corpus = corpus.name};
  const auto& xf = def.info.expected_failures;
  run.expect_pass = std::find(xf.begin(), xf.end(), corpus.name) == xf.end();

  std::vector<Task> tasks;
  std::vector<Check> planning_errors;
  for (const auto& c : corpus.cases) {
    try {
      for (auto& t : def.plan(c, opts)) tasks.push_back(std::move(t));
    } catch (const Error& e) {
      planning_errors.push_back({Check::Status::fail, {{"case", c.id}, {"error", e.what()}}});
    }
  }
  std::vector<Check> results(tasks.size());
  auto body = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const Error& e) {
      results[i] = {Check::Status::fail, {{"error", e.what()}}};
    }
  };
  if (opts.parallel)
    parallel_for(tasks.size(), body);
  else
    serial_for(tasks.size(), body);
  results.insert(results.begin(), planning_errors.begin(), planning_errors.end());

  for (const auto& r : results) {
    switch (r.status) {
      case Check::Status::pass: ++run.passed; break;
      case Check::Status::skip: ++run.skipped; break;
      case Check::Status::fail:
        ++run.failed;
        if (run.failures.size() < opts.max_failures_reported) run.failures.push_back(r.detail);
        break;
    }
  }
  return run;
}

VerifyReport run_suite(const std::string& suite, const std::optional<std::string>& corpus, const VerifyOptions& opts) {
  std::vector<const SuiteDef*> suites;
  if (suite == "all") {
    for (const auto& d : registry()) suites.push_back(&d);
  } else {
    suites.push_back(&find_suite(suite));
  }
  std::optional<Corpus> only;
  if (corpus) only = builtin_corpus(*corpus);
  std::map<std::string, Corpus> cache;
  VerifyReport report;
  for (const SuiteDef* d : suites) {
    if (only) {
      const auto& dc = d->info.default_corpora;
      if (suite == "all" && std::find(dc.begin(), dc.end(), only->name) == dc.end()) continue;
      report.runs.push_back(run_suite_on(d->info.name, *only, opts));
      continue;
    }
    for (const auto& name : d->info.default_corpora) {
      auto it = cache.find(name);
      if (it == cache.end()) it = cache.emplace(name, builtin_corpus(name)).first;
      report.runs.push_back(run_suite_on(d->info.name, it->second, opts));
    }
  }
  return report;
}

json to_json(const SuiteRun& r) {
  return {{"suite", r.suite},     {"corpus", r.corpus},   {"expected", r.expect_pass ? "pass" : "fail"},
          {"outcome", r.outcome()}, {"met", r.met()},       {"passed", r.passed},
          {"failed", r.failed},   {"skipped", r.skipped}, {"failures", r.failures}};
}

json to_json(const VerifyReport& r) {
  json runs = json::array();
  std::size_t met = 0;
  for (const auto& s : r.runs) {
    runs.push_back(to_json(s));
    met += s.met();
  }
  return {{"ok", r.ok()}, {"runs", runs}, {"summary", {{"runs", r.runs.size()}, {"met", met}, {"unmet", r.runs.size() - met}}}};
}

std::string to_junit(const VerifyReport& r) {
  std::map<std::string, std::vector<const SuiteRun*>> by_suite;
  std::vector<std::string> order;
  for (const auto& s : r.runs) {
    if (!by_suite.count(s.suite)) order.push_back(s.suite);
    by_suite[s.suite].push_back(&s);
  }
  std::size_t total_failures = 0;
  for (const auto& s : r.runs) total_failures += !s.met();
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<testsuites name=\"cluster-lab verify\" tests=\"" + std::to_string(r.runs.size()) + "\" failures=\"" +
         std::to_string(total_failures) + "\">\n";
  for (const auto& name : order) {
    const auto& runs = by_suite[name];
    std::size_t failures = 0;
    for (const auto* s : runs) failures += !s->met();
    out += "  <testsuite name=\"" + xml_escape(name) + "\" tests=\"" + std::to_string(runs.size()) + "\" failures=\"" +
           std::to_string(failures) + "\">\n";
    for (const auto* s : runs) {
      out += "    <testcase classname=\"" + xml_escape(name) + "\" name=\"" + xml_escape(s->corpus) + "\">\n";
      out += "      <system-out>" +
             xml_escape("expected " + std::string(s->expect_pass ? "pass" : "fail") + ", outcome " + s->outcome() +
                        ", passed " + std::to_string(s->passed) + ", failed " + std::to_string(s->failed) +
                        ", skipped " + std::to_string(s->skipped)) +
             "</system-out>\n";
      if (!s->met())
        out += "      <failure message=\"expected " + std::string(s->expect_pass ? "pass" : "fail") + ", got " +
               s->outcome() + "\">" + xml_escape(json(s->failures).dump()) + "</failure>\n";
      out += "    </testcase>\n";
    }
    out += "  </testsuite>\n";
  }
  out += "</testsuites>\n";
  return out;
}

}  // namespace cluster
