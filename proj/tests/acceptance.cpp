// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <string>

#include "cluster/compat.hpp"
#include "cluster/error.hpp"
#include "cluster/explorer.hpp"
#include "cluster/io.hpp"
#include "cluster/pattern.hpp"
#include "cluster/rank2.hpp"
#include "cluster/rootsys.hpp"
#include "cluster/verify.hpp"

using namespace cluster;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  std::size_t checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

const ExchangeMatrix A2(IntMat{{0, 1}, {-1, 0}});
const IntMat CA2{{2, -1}, {-1, 2}};
const IntMat CA3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
const IntMat CB2{{2, -1}, {-2, 2}};
const IntMat CC3{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
const IntMat CG2{{2, -1}, {-3, 2}};

ExchangeMatrix from_cartan(const IntMat& c) { return CartanData(c).exchange_matrix(); }

// ---------------------------------------------------------------------------

Outcome a2_golden() {
  Outcome o;
  struct Row {
    MutationWord w;
    const char *f1, *f2, *x1, *x2;
    IntVec y1, y2;
    IntMat f, d, c, g;
  };
  const std::vector<Row> rows = {
      {{}, "1", "1", "x1", "x2", {1, 0}, {0, 1}, {{0, 0}, {0, 0}}, {{-1, 0}, {0, -1}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}},
      {{1}, "1", "y2 + 1", "x1", "x1*y2*x2^-1 + x2^-1", {1, 0}, {0, -1}, {{0, 0}, {0, 1}}, {{-1, 0}, {0, 1}},
       {{1, 0}, {0, -1}}, {{1, 0}, {0, -1}}},
      {{1, 0}, "y1*y2 + y1 + 1", "y2 + 1", "y1*y2*x2^-1 + y1*x1^-1*x2^-1 + x1^-1", "x1*y2*x2^-1 + x2^-1", {-1, 0},
       {0, -1}, {{1, 0}, {1, 1}}, {{1, 0}, {1, 1}}, {{-1, 0}, {0, -1}}, {{-1, 0}, {0, -1}}},
      {{1, 0, 1}, "y1*y2 + y1 + 1", "y1 + 1", "y1*y2*x2^-1 + y1*x1^-1*x2^-1 + x1^-1", "y1*x1^-1 + x2*x1^-1",
       {-1, -1}, {0, 1}, {{1, 1}, {1, 0}}, {{1, 1}, {1, 0}}, {{-1, 0}, {-1, 1}}, {{-1, -1}, {0, 1}}},
      {{1, 0, 1, 0}, "1", "y1 + 1", "x2", "y1*x1^-1 + x2*x1^-1", {1, 1}, {-1, 0}, {{0, 1}, {0, 0}},
       {{0, 1}, {-1, 0}}, {{1, -1}, {1, 0}}, {{0, -1}, {1, 1}}},
      {{1, 0, 1, 0, 1}, "1", "1", "x2", "x1", {0, 1}, {1, 0}, {{0, 0}, {0, 0}}, {{0, -1}, {-1, 0}}, {{0, 1}, {1, 0}},
       {{0, 1}, {1, 0}}},
  };
  const std::vector<std::string> xy = {"x1", "x2", "y1", "y2"};
  const auto principal = CoefficientSpec::principal(2);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& r = rows[t];
    const std::string at = " at t" + std::to_string(t);
    const PatternState s = evolve(A2, r.w, {.polynomials = true, .cluster_variables = true});
    o.expect(s.fpolys[0] == LaurentPoly::parse(r.f1, 2) && s.fpolys[1] == LaurentPoly::parse(r.f2, 2),
             "F-polynomials" + at);
    o.expect(s.f == r.f && s.d == r.d && s.c == r.c && s.g == r.g, "F/D/C/G" + at);
    const Seed seed = mutate_seed_along(initial_seed(A2, principal), r.w);
    o.expect(seed.x[0] == LaurentPoly::parse(r.x1, xy) && seed.x[1] == LaurentPoly::parse(r.x2, xy),
             "cluster variables" + at);
    o.expect(s.xvars == seed.x, "pattern cluster variables" + at);
    o.expect(seed.y[0] == r.y1 && seed.y[1] == r.y2, "coefficients" + at);
  }
  // Coefficients over Trop(u1, u2) with y1 = u^p1, y2 = u^p2.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntVec p1{dist(rng), dist(rng)}, p2{dist(rng), dist(rng)};
    IntMat p(2, 2);
    p.set_column(0, p1);
    p.set_column(1, p2);
    const IntVec zero{0, 0};
    const auto add = [](const IntVec& a, const IntVec& b) { return vec_add(a, b); };
    const auto neg = [](const IntVec& a) { return vec_neg(a); };
    const IntVec y2o1 = vec_min(p2, zero), y1o1 = vec_min(p1, zero);
    const IntVec big = vec_min(vec_min(add(p1, p2), p1), zero);
    const std::vector<std::pair<IntVec, IntVec>> table = {
        {p1, p2},
        {add(p1, y2o1), neg(p2)},
        {neg(add(p1, y2o1)), add(big, neg(p2))},
        {add(y1o1, neg(add(p1, p2))), add(p2, neg(big))},
        {add(add(p1, p2), neg(y1o1)), neg(p1)},
        {p2, p1}};
    const Seed s0 = initial_seed(A2, CoefficientSpec::tropical(p));
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const Seed st = mutate_seed_along(s0, rows[t].w);
      o.expect(st.y[0] == table[t].first && st.y[1] == table[t].second,
               "tropical coefficients at t" + std::to_string(t));
    }
  }
  return o;
}

// ---------------------------------------------------------------------------

void graph_consistency(Outcome& o, const ExchangeGraph& g, const std::string& name) {
  const std::size_t n = g.initial.size();
  o.expect(g.complete, name + " graph incomplete");
  const ClusterComplex cx = cluster_complex(g);
  std::set<std::vector<std::size_t>> facets(cx.facets.begin(), cx.facets.end());
  o.expect(facets.size() == cx.facets.size(), name + " repeated cluster");
  for (std::size_t s = 0; s < g.seeds.size(); ++s) {
    o.expect(cx.facets[s].size() == n, name + " facet size");
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t nb = g.seeds[s].neighbors[k];
      o.expect(nb != ExchangeGraph::npos && nb < g.seeds.size(), name + " missing neighbor");
      if (nb >= g.seeds.size()) continue;
      std::vector<std::size_t> shared;
      std::set_intersection(cx.facets[s].begin(), cx.facets[s].end(), cx.facets[nb].begin(), cx.facets[nb].end(),
                            std::back_inserter(shared));
      o.expect(shared.size() == n - 1, name + " neighbor is not one exchange away");
    }
  }
  // every seed reached along its word gives back its cluster
  for (const auto& seed : g.seeds) {
    const PatternState s = evolve(g.initial, seed.word);
    for (std::size_t i = 0; i < n; ++i)
      o.expect(variable_key(s.g.column(i), s.fpolys[i]) == g.variables[seed.vars[i]].key, name + " closure");
  }
}

Outcome explorer_counts() {
  Outcome o;
  const ExchangeGraph a2 = explore(A2);
  o.expect(a2.seeds.size() == 5 && a2.variables.size() == 5 && a2.edges.size() == 5, "A2 pentagon");
  graph_consistency(o, a2, "A2");
  const ExchangeGraph a3 = explore(from_cartan(CA3));
  o.expect(a3.variables.size() == 9, "A3 variables");
  o.expect(cluster_complex(a3).facets.size() == 14, "A3 clusters");
  graph_consistency(o, a3, "A3");
  return o;
}

// ---------------------------------------------------------------------------

Outcome f_equals_dplus() {
  Outcome o;
  for (const auto* c : {&CA2, &CA3, &CB2, &CG2}) {
    const ExchangeGraph g = explore(from_cartan(*c));
    o.expect(g.complete, "graph incomplete");
    for (const auto& s : g.seeds) o.expect(s.f == s.d.positive_part(), "f != [d]+ at " + word_to_string(s.word));
  }
  const ExchangeMatrix k = rank2_matrix(2, 2);
  for (std::int64_t n = -10; n <= 10; ++n) {
    const PatternState s = evolve(k, rank2_word(n), {.polynomials = false});
    o.expect(s.f == s.d.positive_part(), "rank 2 f != [d]+ at n=" + std::to_string(n));
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome classical_vs_f() {
  Outcome o;
  for (const auto* c : {&CA2, &CA3, &CB2, &CC3, &CG2}) {
    const CartanData cd(*c);
    const ExchangeGraph g = explore(cd.exchange_matrix());
    const auto roots = enumerate_almost_positive_roots(cd);
    o.expect(roots.size() == g.variables.size(), "root count differs from variable count");
    std::vector<VariableRef> refs;
    std::set<std::size_t> ids;
    for (const auto& r : roots) {
      const std::size_t id = root_to_variable(g, r);
      ids.insert(id);
      refs.push_back(g.variables[id].ref);
    }
    o.expect(ids.size() == roots.size(), "d-vector map is not a bijection");
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = 0; j < roots.size(); ++j)
        o.expect(classical_degree(cd, roots[i], roots[j]) == compatibility_degree(cd.exchange_matrix(), refs[i], refs[j]),
                 "classical and f-degree differ");
  }
  return o;
}

// ---------------------------------------------------------------------------

std::vector<VariableRef> all_refs(const ExchangeMatrix& b, const std::vector<MutationWord>& words) {
  std::vector<VariableRef> out;
  for (const auto& w : words)
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back({w, i});
  return out;
}

Outcome duality_symmetry_embedding() {
  Outcome o;
  const ExchangeMatrix a2hat(IntMat{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}});
  // (1) duality: skew-symmetric patterns and B2, G2
  std::vector<std::pair<ExchangeMatrix, std::vector<VariableRef>>> dual_cases;
  for (const auto* c : {&CA2, &CA3, &CB2, &CG2}) {
    const ExchangeGraph g = explore(from_cartan(*c));
    std::vector<VariableRef> refs;
    for (const auto& v : g.variables) refs.push_back(v.ref);
    dual_cases.push_back({g.initial, refs});
  }
  dual_cases.push_back({a2hat, all_refs(a2hat, reduced_words(3, 4))});
  for (const auto& [b, refs] : dual_cases)
    for (const auto& x : refs)
      for (const auto& y : refs) o.expect(check_duality(b, x, y).holds, "duality " + to_string(x) + " " + to_string(y));
  // (2) symmetrizer ratio to depth 8
  for (const auto* c : {&CB2, &CG2}) {
    const ExchangeMatrix b = from_cartan(*c);
    const auto refs = all_refs(b, reduced_words(2, 8));
    for (const auto& x : refs)
      for (const auto& y : refs)
        o.expect(b.symmetrizer()[x.index] * compatibility_degree(b, x, y) ==
                     b.symmetrizer()[y.index] * compatibility_degree(b, y, x),
                 "symmetry ratio");
  }
  // (3) principal submatrix J = {1, 2} of the affine A2 matrix to depth 6
  const std::vector<std::size_t> j = {0, 1};
  const auto refs = all_refs(a2hat.principal_submatrix(j), reduced_words(2, 6));
  const ExchangeMatrix sub = a2hat.principal_submatrix(j);
  for (const auto& x : refs)
    for (const auto& y : refs)
      o.expect(compatibility_degree(sub, x, y) == compatibility_degree(a2hat, x, y), "embedding");
  return o;
}

// ---------------------------------------------------------------------------

Outcome compatibility_and_exchange() {
  Outcome o;
  for (const auto* c : {&CA2, &CA3, &CB2, &CG2}) {
    const ExchangeGraph g = explore(from_cartan(*c));
    const ClusterComplex cx = cluster_complex(g);
    const std::size_t m = g.variables.size();
    // oracle: pairs inside a common facet, and pairs swapped along an edge
    std::vector<std::vector<bool>> together(m, std::vector<bool>(m, false)), swapped = together;
    for (const auto& f : cx.facets)
      for (std::size_t a : f)
        for (std::size_t b : f) together[a][b] = true;
    for (const auto& e : g.edges) {
      const auto& u = g.seeds[e.from].vars;
      const auto& v = g.seeds[e.to].vars;
      std::set<std::size_t> su(u.begin(), u.end()), sv(v.begin(), v.end());
      for (std::size_t a : su)
        if (!sv.count(a))
          for (std::size_t b : sv)
            if (!su.count(b)) swapped[a][b] = swapped[b][a] = true;
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const Int ab = compatibility_degree(g.initial, g.variables[a].ref, g.variables[b].ref);
        const Int ba = compatibility_degree(g.initial, g.variables[b].ref, g.variables[a].ref);
        o.expect((ab == 0) == together[a][b], "compatibility property");
        o.expect((ab == 0) == find_common_cluster(g, a, b).has_value(), "common cluster search");
        if (a == b) continue;
        o.expect((ab == 1 && ba == 1) == swapped[a][b], "exchangeability");
        o.expect(swapped[a][b] == find_exchange_witness(g, a, b).has_value(), "exchange witness search");
      }
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome rank2_closed_forms() {
  Outcome o;
  for (auto [b, c] : std::vector<std::pair<Int, Int>>{{2, 2}, {1, 4}, {2, 3}, {3, 3}}) {
    for (std::int64_t n = -12; n <= 12; ++n)
      o.expect(closed_form_F(b, c, n) == evolve(rank2_matrix(b, c), rank2_word(n), {.polynomials = false}).f,
               "closed form (" + std::to_string(b) + "," + std::to_string(c) + ") n=" + std::to_string(n));
    const int max_p = 30;
    const ChebyshevTable s(b * c - 2, max_p);
    for (int p = 0; p <= max_p; ++p) o.expect(s(p) > s(p - 1), "Chebyshev chain");
  }
  return o;
}

// ---------------------------------------------------------------------------

Outcome counterexamples() {
  Outcome o;
  const ExchangeMatrix a2hat(IntMat{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}});
  const PatternState s = evolve(a2hat, {2, 1, 0}, {.polynomials = false});
  o.expect(s.f.column(0) == IntVec{1, 1, 2}, "affine A2 f-vector");
  o.expect(s.d.column(0) == IntVec{1, 1, 1}, "affine A2 d-vector");
  const VariableRef x3{{}, 2}, x1t3{{2, 1, 0}, 0};
  o.expect(compatibility_degree(a2hat, x3, x1t3) == 2 && compatibility_degree(a2hat, x1t3, x3) == 2,
           "affine A2 f-degrees");
  o.expect(d_compatibility_degree(a2hat, x3, x1t3) == 1 && d_compatibility_degree(a2hat, x1t3, x3) == 1,
           "affine A2 d-degrees");

  const ExchangeMatrix d4hat(
      IntMat{{0, 1, 0, -1, 0}, {-1, 0, 1, 1, -1}, {0, -1, 0, 1, 0}, {1, -1, -1, 0, 1}, {0, 1, 0, -1, 0}});
  const VariableRef x1{{}, 0}, x4{{0, 1, 2, 3}, 3};
  o.expect(d_compatibility_degree(d4hat, x1, x4) == 1 && d_compatibility_degree(d4hat, x4, x1) == 1,
           "affine D4 d-degrees");
  o.expect(compatibility_degree(d4hat, x1, x4) == 2 && compatibility_degree(d4hat, x4, x1) == 2,
           "affine D4 f-degrees");

  const ExchangeMatrix surf(IntMat{{0, 0, -1, 0, 1, 0, 0},
                                   {0, 0, -1, 0, 1, 0, 0},
                                   {1, 1, 0, -1, -1, 1, 0},
                                   {0, 0, 1, 0, 0, -1, 1},
                                   {-1, -1, 1, 0, 0, -1, 1},
                                   {0, 0, -1, 1, 1, 0, -1},
                                   {0, 0, 0, -1, -1, 1, 0}});
  const VariableRef x2{{}, 1}, x7{{1, 2, 3, 4, 6}, 6};
  o.expect(d_compatibility_degree(surf, x2, x7) == 2, "7x7 (x2 || x7')_d");
  o.expect(d_compatibility_degree(surf, x7, x2) == 1, "7x7 (x7' || x2)_d");
  return o;
}

// ---------------------------------------------------------------------------

Outcome structural_random() {
  Outcome o;
  const Corpus corpus = builtin_corpus("random-200");
  o.expect(corpus.cases.size() == 200, "corpus size");
  for (const auto& c : corpus.cases) {
    o.expect(c.b.size() <= 4, "rank bound");
    for (std::size_t i = 0; i < c.b.size(); ++i)
      for (std::size_t j = 0; j < c.b.size(); ++j) o.expect(std::abs(c.b(i, j)) <= 3, "entry bound");
    for (const auto& w : c.words) o.expect(w.size() <= 6, "depth bound");
  }
  for (const char* suite : {"constant-term-1", "sign-coherence", "F-negation", "F-symmetrizer", "F-self-duality",
                            "h-matrix", "initial-F-mutation"}) {
    const SuiteRun r = run_suite_on(suite, corpus);
    o.expect(r.failed == 0, std::string(suite) + " has failures");
    o.expect(r.passed > 0, std::string(suite) + " checked nothing");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "A2 golden tables", 1, a2_golden},
      {2, "explorer: A2 pentagon, A3 9 variables / 14 clusters", 5, explorer_counts},
      {3, "f = [d]+ on A2, A3, B2, G2 and rank 2 (2,2)", 30, f_equals_dplus},
      {4, "classical degree = f-degree on A2, A3, B2, C3, G2", 60, classical_vs_f},
      {5, "duality, symmetrizer ratio, embedding", 0, duality_symmetry_embedding},
      {6, "compatibility property and exchangeability on A2, A3, B2, G2", 60, compatibility_and_exchange},
      {7, "rank-2 closed forms and Chebyshev chain", 0, rank2_closed_forms},
      {8, "counterexample degrees", 0, counterexamples},
      {9, "structural suites on 200 random matrices", 0, structural_random},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit == 0 || dt < c.limit;
    const bool pass = o.ok && in_time;
    all = all && pass;
    char timing[64];
    if (c.limit > 0)
      std::snprintf(timing, sizeof timing, "%zu checks, %.3fs < %.0fs", o.checks, dt, c.limit);
    else
      std::snprintf(timing, sizeof timing, "%zu checks, %.3fs", o.checks, dt);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << timing << ")";
    if (!o.ok) std::cout << " [" << o.note << "]";
    if (!in_time) std::cout << " [time limit exceeded]";
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
