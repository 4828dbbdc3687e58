#include "cluster/pattern.hpp"

#include <algorithm>

#include "cluster/error.hpp"

namespace cluster {

void check_word(const MutationWord& w, std::size_t n) {
  for (std::size_t k : w)
    if (k >= n) throw InvalidArgument("mutation direction " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
}

MutationWord reduce_word(const MutationWord& w) {
  MutationWord r;
  for (std::size_t k : w) {
    if (!r.empty() && r.back() == k)
      r.pop_back();
    else
      r.push_back(k);
  }
  return r;
}

MutationWord reversed(const MutationWord& w) { return MutationWord(w.rbegin(), w.rend()); }

MutationWord path_between(const MutationWord& a, const MutationWord& b, bool elide_common_prefix) {
  std::size_t common = 0;
  if (elide_common_prefix)
    while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
  MutationWord p(a.rbegin(), a.rend() - static_cast<std::ptrdiff_t>(common));
  p.insert(p.end(), b.begin() + static_cast<std::ptrdiff_t>(common), b.end());
  return p;
}

CoefficientSpec CoefficientSpec::principal(std::size_t n) {
  std::vector<IntVec> y(n, IntVec(n, 0));
  for (std::size_t j = 0; j < n; ++j) y[j][j] = 1;
  return {Kind::principal, n, n, std::move(y)};
}

CoefficientSpec CoefficientSpec::trivial(std::size_t n) { return {Kind::trivial, n, 0, std::vector<IntVec>(n)}; }

CoefficientSpec CoefficientSpec::tropical(const IntMat& p) {
  std::vector<IntVec> y;
  for (std::size_t j = 0; j < p.cols(); ++j) y.push_back(p.column(j));
  return {Kind::tropical, p.cols(), p.rows(), std::move(y)};
}

std::vector<std::string> CoefficientSpec::generator_names() const {
  return indexed_names(kind_ == Kind::principal ? 'y' : 'u', ell_);
}

namespace {

// Exchange relation in Z[x^+-, u^+-] (n cluster variables, ell generators):
//   (y_k prod x_i^[b_ik]+ + prod x_i^[-b_ik]+) / ((y_k (+) 1) x_k)
LaurentPoly exchange(const std::vector<LaurentPoly>& x, const IntMat& b, const IntVec& yk, std::size_t k) {
  const std::size_t n = b.rows();
  const std::size_t ell = yk.size();
  const std::size_t arity = n + ell;
  LaurentPoly plus = LaurentPoly::one(arity);
  LaurentPoly minus = LaurentPoly::one(arity);
  for (std::size_t i = 0; i < n; ++i) {
    const Int bik = b(i, k);
    if (bik > 0) plus = plus * x[i].pow(static_cast<unsigned>(bik));
    if (bik < 0) minus = minus * x[i].pow(static_cast<unsigned>(-bik));
  }
  Exponent ymono(arity, 0), yplus1(arity, 0);
  for (std::size_t j = 0; j < ell; ++j) {
    ymono[n + j] = static_cast<int>(yk[j]);
    yplus1[n + j] = static_cast<int>(std::min<Int>(yk[j], 0));
  }
  const LaurentPoly numerator = plus.shifted(ymono) + minus;
  const LaurentPoly denominator = x[k].shifted(yplus1);
  return exact_div_laurent(numerator, denominator);
}

IntVec y_after_mutation(const IntVec& yj, const IntVec& yk, Int bkj) {
  IntVec r(yj.size());
  for (std::size_t a = 0; a < yj.size(); ++a)
    r[a] = checked_add(yj[a], checked_sub(checked_mul(pos(bkj), yk[a]), checked_mul(bkj, std::min<Int>(yk[a], 0))));
  return r;
}

}  // namespace

PatternState initial_state(const ExchangeMatrix& b0, const EvolveOptions& opts) {
  const std::size_t n = b0.size();
  PatternState s{b0, b0, IntMat::identity(n), IntMat::identity(n), -IntMat::identity(n), IntMat(n, n), {}, {}, {}};
  if (opts.polynomials || opts.cluster_variables) s.fpolys.assign(n, MultiPoly::one(n));
  if (opts.cluster_variables)
    for (std::size_t i = 0; i < n; ++i) s.xvars.push_back(LaurentPoly::variable(2 * n, i));
  return s;
}

PatternState step(const PatternState& s, std::size_t k, std::size_t max_terms) {
  const std::size_t n = s.rank();
  if (k >= n) throw InvalidArgument("mutation direction out of range");
  const IntMat& b = s.b.matrix();
  const IntMat& b0 = s.initial.matrix();
  const IntVec ck = s.c.column(k);
  const IntVec ck_pos = vec_pos(ck);
  const IntVec ck_neg = vec_pos(vec_neg(ck));

  PatternState t = s;
  t.b = s.b.mutate(k);
  t.word.push_back(k);

  // c-vectors
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      t.c.set_column(j, vec_neg(ck));
      continue;
    }
    const Int bkj = b(k, j);
    if (bkj == 0) continue;
    IntVec cj = s.c.column(j);
    cj = vec_add(cj, vec_scale(pos(bkj), ck));
    cj = vec_add(cj, vec_scale(bkj, ck_neg));
    t.c.set_column(j, cj);
  }

  // g-, d- and f-vectors change only in column k.
  IntVec g_new = vec_neg(s.g.column(k));
  IntVec d_plus(n, 0), d_minus(n, 0);
  IntVec f_plus = ck_pos, f_minus = ck_neg;
  for (std::size_t i = 0; i < n; ++i) {
    const Int bik = b(i, k);
    if (bik > 0) {
      g_new = vec_add(g_new, vec_scale(bik, s.g.column(i)));
      d_plus = vec_add(d_plus, vec_scale(bik, s.d.column(i)));
      f_plus = vec_add(f_plus, vec_scale(bik, s.f.column(i)));
    } else if (bik < 0) {
      d_minus = vec_add(d_minus, vec_scale(-bik, s.d.column(i)));
      f_minus = vec_add(f_minus, vec_scale(-bik, s.f.column(i)));
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (ck[j] > 0) g_new = vec_add(g_new, vec_scale(checked_neg(ck[j]), b0.column(j)));
  t.g.set_column(k, g_new);
  t.d.set_column(k, vec_add(vec_neg(s.d.column(k)), vec_max(d_plus, d_minus)));
  t.f.set_column(k, vec_add(vec_neg(s.f.column(k)), vec_max(f_plus, f_minus)));

  if (s.has_polynomials()) {
    if (max_terms) {
      // The numerator has degree f'_k + f_k, so its support fits in this box.
      double box = 1;
      for (std::size_t i = 0; i < n; ++i) box *= static_cast<double>(t.f(i, k) + s.f(i, k) + 1);
      if (box > static_cast<double>(max_terms))
        throw BudgetExceeded("F-polynomial numerator exceeds the size budget of " + std::to_string(max_terms));
    }
    Exponent yp(n), ym(n);
    for (std::size_t i = 0; i < n; ++i) {
      yp[i] = static_cast<int>(ck_pos[i]);
      ym[i] = static_cast<int>(ck_neg[i]);
    }
    MultiPoly plus = MultiPoly::monomial(yp);
    MultiPoly minus = MultiPoly::monomial(ym);
    for (std::size_t i = 0; i < n; ++i) {
      const Int bik = b(i, k);
      if (bik > 0) plus = plus * s.fpolys[i].pow(static_cast<unsigned>(bik));
      if (bik < 0) minus = minus * s.fpolys[i].pow(static_cast<unsigned>(-bik));
    }
    t.fpolys[k] = exact_div(plus + minus, s.fpolys[k]);
  }

  if (!s.xvars.empty()) t.xvars[k] = exchange(s.xvars, b, ck, k);
  return t;
}

PatternState evolve(const ExchangeMatrix& b0, const MutationWord& w, const EvolveOptions& opts) {
  check_word(w, b0.size());
  PatternState s = initial_state(b0, opts);
  for (std::size_t k : w) s = step(s, k, opts.max_terms);
  return s;
}

std::vector<IntVec> tropical_F(const ExchangeMatrix& b0, const MutationWord& w, const std::vector<IntVec>& assignment) {
  const std::size_t n = b0.size();
  check_word(w, n);
  if (assignment.size() != n) throw InvalidArgument("tropical evaluation needs one value per variable");
  const std::size_t ell = assignment.front().size();
  std::vector<IntVec> v(n, IntVec(ell, 0));
  PatternState s = initial_state(b0, {.polynomials = false});
  for (std::size_t k : w) {
    const IntMat& b = s.b.matrix();
    IntVec plus(ell, 0), minus(ell, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Int cik = s.c(i, k), bik = b(i, k);
      if (cik > 0) plus = vec_add(plus, vec_scale(cik, assignment[i]));
      if (cik < 0) minus = vec_add(minus, vec_scale(-cik, assignment[i]));
      if (bik > 0) plus = vec_add(plus, vec_scale(bik, v[i]));
      if (bik < 0) minus = vec_add(minus, vec_scale(-bik, v[i]));
    }
    v[k] = vec_add(vec_min(plus, minus), vec_neg(v[k]));
    s = step(s, k);
  }
  return v;
}

std::vector<MultiPoly> evolve_jets(const ExchangeMatrix& b0, const MutationWord& w, int degree) {
  const std::size_t n = b0.size();
  check_word(w, n);
  std::vector<MultiPoly> f(n, MultiPoly::one(n));
  PatternState s = initial_state(b0, {.polynomials = false});
  for (std::size_t k : w) {
    const IntMat& b = s.b.matrix();
    Exponent yp(n), ym(n);
    for (std::size_t i = 0; i < n; ++i) {
      yp[i] = static_cast<int>(pos(s.c(i, k)));
      ym[i] = static_cast<int>(pos(-s.c(i, k)));
    }
    MultiPoly plus = truncated(MultiPoly::monomial(yp), degree);
    MultiPoly minus = truncated(MultiPoly::monomial(ym), degree);
    for (std::size_t i = 0; i < n; ++i) {
      const Int bik = b(i, k);
      for (Int r = 0; r < pos(bik); ++r) plus = mul_truncated(plus, f[i], degree);
      for (Int r = 0; r < pos(-bik); ++r) minus = mul_truncated(minus, f[i], degree);
    }
    f[k] = mul_truncated(plus + minus, series_inverse(f[k], degree), degree);
    s = step(s, k);
  }
  return f;
}

std::vector<std::string> Seed::variable_names() const {
  std::vector<std::string> names = indexed_names('x', rank());
  for (auto& g : spec.generator_names()) names.push_back(g);
  return names;
}

Seed initial_seed(const ExchangeMatrix& b0, const CoefficientSpec& spec) {
  const std::size_t n = b0.size();
  if (spec.rank() != n) throw InvalidArgument("coefficient spec rank does not match the exchange matrix");
  Seed s{b0, spec, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    s.x.push_back(LaurentPoly::variable(n + spec.generators(), i));
    s.y.push_back(spec.initial_y(i));
  }
  return s;
}

Seed mutate_seed_direct(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k >= n) throw InvalidArgument("mutation direction out of range");
  const IntMat& b = s.b.matrix();
  Seed t = s;
  t.b = s.b.mutate(k);
  t.x[k] = exchange(s.x, b, s.y[k], k);
  for (std::size_t j = 0; j < n; ++j)
    t.y[j] = j == k ? vec_neg(s.y[k]) : y_after_mutation(s.y[j], s.y[k], b(k, j));
  return t;
}

Seed mutate_seed_along(const Seed& s, const MutationWord& w) {
  check_word(w, s.rank());
  Seed t = s;
  for (std::size_t k : w) t = mutate_seed_direct(t, k);
  return t;
}

LaurentPoly separation_x(const IntVec& g, const MultiPoly& f, const ExchangeMatrix& b0, const CoefficientSpec& spec) {
  const std::size_t n = b0.size();
  const std::size_t ell = spec.generators();
  const std::size_t arity = n + ell;
  std::vector<Exponent> yhat(n, Exponent(arity, 0));
  std::vector<IntVec> trop_args(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) yhat[i][j] = static_cast<int>(b0(j, i));
    for (std::size_t a = 0; a < ell; ++a) yhat[i][n + a] = static_cast<int>(spec.initial_y(i)[a]);
    trop_args[i] = spec.initial_y(i);
  }
  const IntVec denom = tropical_eval(f, trop_args);
  Exponent shift(arity, 0);
  for (std::size_t j = 0; j < n; ++j) shift[j] = static_cast<int>(g[j]);
  for (std::size_t a = 0; a < ell; ++a) shift[n + a] = static_cast<int>(-denom[a]);
  return f.substitute_monomials(arity, yhat).shifted(shift);
}

IntVec separation_y(std::size_t j, const IntMat& c, const std::vector<MultiPoly>& fpolys, const ExchangeMatrix& bt,
                    const CoefficientSpec& spec) {
  const std::size_t n = bt.size();
  std::vector<IntVec> trop_args(n);
  for (std::size_t i = 0; i < n; ++i) trop_args[i] = spec.initial_y(i);
  IntVec out(spec.generators(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    out = vec_add(out, vec_scale(c(k, j), spec.initial_y(k)));
    if (bt(k, j) != 0) out = vec_add(out, vec_scale(bt(k, j), tropical_eval(fpolys[k], trop_args)));
  }
  return out;
}

IntVec denominator_vector(const LaurentPoly& x, std::size_t n) {
  const Exponent m = x.min_exponents();
  IntVec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = -m[i];
  return d;
}

IntMat denominator_matrix(const std::vector<LaurentPoly>& x, std::size_t n) {
  IntMat d(n, n);
  for (std::size_t j = 0; j < n; ++j) d.set_column(j, denominator_vector(x[j], n));
  return d;
}

namespace {
std::vector<IntVec> h_assignment(const IntMat& b0, std::size_t i) {
  std::vector<IntVec> args(b0.rows());
  for (std::size_t m = 0; m < b0.rows(); ++m) args[m] = {m == i ? -1 : pos(-b0(i, m))};
  return args;
}
}  // namespace

IntMat h_matrix_by_recursion(const PatternState& s) {
  const std::size_t n = s.rank();
  IntMat h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = tropical_F(s.initial, s.word, h_assignment(s.initial.matrix(), i));
    for (std::size_t j = 0; j < n; ++j) h(i, j) = v[j][0];
  }
  return h;
}

IntMat h_matrix(const PatternState& s) {
  if (!s.has_polynomials()) return h_matrix_by_recursion(s);
  const std::size_t n = s.rank();
  const IntMat& b0 = s.initial.matrix();
  IntMat h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto args = h_assignment(b0, i);
    for (std::size_t j = 0; j < n; ++j) h(i, j) = tropical_eval(s.fpolys[j], args)[0];
  }
  return h;
}

IntMat initial_mutation_F(const PatternState& s, std::size_t k, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("eps must be +1 or -1");
  const std::size_t n = s.rank();
  if (k >= n) throw InvalidArgument("mutation direction out of range");
  const IntMat& b = s.initial.matrix();
  const IntMat g_neg = evolve(s.initial.negated(), s.word, {.polynomials = false}).g;
  const IntMat eps_b = eps == 1 ? b : -b;
  const IntMat lhs = IntMat::sign_flip_diag(n, k) + eps_b.positive_part().row_mask(k);
  const IntMat term_neg = (eps == 1 ? -g_neg : g_neg).positive_part().row_mask(k);
  const IntMat term_pos = (eps == 1 ? s.g : -s.g).positive_part().row_mask(k);
  return lhs * s.f + term_neg + term_pos;
}

}  // namespace cluster
