#include "cluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

LaurentPoly LaurentPoly::constant(std::size_t arity, const mpz_class& c) {
  LaurentPoly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t i) {
  if (i >= arity) throw InvalidArgument("variable index out of range");
  Exponent e(arity, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

LaurentPoly LaurentPoly::monomial(Exponent e, const mpz_class& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int v) { return v >= 0; });
  });
}

mpz_class LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (e.size() != arity_) throw InvalidArgument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_arity(const LaurentPoly& o) const {
  if (arity_ != o.arity_) throw InvalidArgument("polynomial arity mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_arity(o);
  LaurentPoly r(arity_);
  Exponent e(arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = one(arity_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != arity_) throw InvalidArgument("shift arity mismatch");
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < arity_; ++i) f[i] += shift[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw InvalidArgument("min_exponents of the zero polynomial");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) throw InvalidArgument("max_exponents of the zero polynomial");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

LaurentPoly LaurentPoly::substitute_monomials(std::size_t new_arity, const std::vector<Exponent>& images) const {
  if (images.size() != arity_) throw InvalidArgument("substitution needs one image per variable");
  LaurentPoly r(new_arity);
  Exponent f(new_arity);
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < new_arity; ++j) f[j] += e[i] * images[i][j];
    }
    r.add_term(f, c);
  }
  return r;
}

std::vector<std::pair<Exponent, mpz_class>> LaurentPoly::display_order() const {
  std::vector<std::pair<Exponent, mpz_class>> v(terms_.begin(), terms_.end());
  auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); };
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    const long da = degree(a.first), db = degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

std::vector<std::string> indexed_names(char prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, prefix) + std::to_string(i + 1));
  return names;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names_in) const {
  const std::vector<std::string> names = names_in.empty() ? indexed_names('y', arity_) : names_in;
  if (names.size() != arity_) throw InvalidArgument("need one name per variable");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : display_order()) {
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t arity, char prefix) {
  return parse(text, indexed_names(prefix, arity));
}

LaurentPoly LaurentPoly::parse(const std::string& text, const std::vector<std::string>& names) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  const std::size_t arity = names.size();
  LaurentPoly result(arity);
  if (s == "0") return result;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("cannot parse polynomial '" + text + "': " + why + " at offset " + std::to_string(pos));
  };
  auto read_int = [&]() -> std::string {
    const std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected integer");
    return s.substr(start, pos - start);
  };
  if (s.empty()) fail("empty input");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    mpz_class coeff = sign;
    Exponent e(arity, 0);
    bool any = false;
    while (true) {
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= mpz_class(read_int());
      } else {
        std::size_t best = arity;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < arity; ++i)
          if (s.compare(pos, names[i].size(), names[i]) == 0 && names[i].size() > best_len) {
            best = i;
            best_len = names[i].size();
          }
        if (best == arity) fail("unknown factor");
        pos += best_len;
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = std::stoi(read_int());
        }
        e[best] += power;
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    result.add_term(e, coeff);
  }
  return result;
}

namespace {

// Division in Z[x_1..x_n] by repeatedly cancelling the lex-leading term.
LaurentPoly polynomial_div(const LaurentPoly& p, const LaurentPoly& q) {
  const std::size_t n = p.arity();
  const auto& [qe, qc] = *q.terms().rbegin();
  LaurentPoly rem = p;
  LaurentPoly quot(n);
  Exponent te(n), f(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      te[i] = re[i] - qe[i];
      if (te[i] < 0) throw NotDivisible("polynomial is not divisible");
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t())) throw NotDivisible("coefficient is not divisible");
    const mpz_class tc = rc / qc;
    quot.add_term(te, tc);
    for (const auto& [e, c] : q.terms()) {
      for (std::size_t i = 0; i < n; ++i) f[i] = te[i] + e[i];
      rem.add_term(f, -(tc * c));
    }
  }
  return quot;
}

}  // namespace

namespace {

LaurentPoly divide(const LaurentPoly& p, const LaurentPoly& q, bool polynomial_ring) {
  if (p.arity() != q.arity()) throw InvalidArgument("polynomial arity mismatch");
  if (q.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (p.is_zero()) return p;
  if (q.is_monomial()) {
    const auto& [qe, qc] = *q.terms().begin();
    if (!std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return mpz_divisible_p(t.second.get_mpz_t(), qc.get_mpz_t()) != 0; }))
      throw NotDivisible("coefficient is not divisible");
    Exponent neg(qe.size());
    for (std::size_t i = 0; i < qe.size(); ++i) neg[i] = -qe[i];
    LaurentPoly r(p.arity());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c / qc);
    r = r.shifted(neg);
    if (polynomial_ring && p.is_polynomial() && q.is_polynomial() && !r.is_polynomial())
      throw NotDivisible("polynomial is not divisible");
    return r;
  }
  // Clear monomial factors so both sides are polynomials not divisible by any
  // variable; the quotient then lives in the polynomial ring up to a monomial.
  const Exponent pm = p.min_exponents();
  const Exponent qm = q.min_exponents();
  Exponent npm(pm.size()), nqm(qm.size()), shift(pm.size());
  for (std::size_t i = 0; i < pm.size(); ++i) {
    npm[i] = -pm[i];
    nqm[i] = -qm[i];
    shift[i] = pm[i] - qm[i];
  }
  if (polynomial_ring && p.is_polynomial() && q.is_polynomial()) {
    for (int v : shift)
      if (v < 0) {
        // Only happens when p has fewer factors of some x_i than q.
        throw NotDivisible("polynomial is not divisible");
      }
  }
  return polynomial_div(p.shifted(npm), q.shifted(nqm)).shifted(shift);
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) { return divide(p, q, true); }

LaurentPoly exact_div_laurent(const LaurentPoly& p, const LaurentPoly& q) { return divide(p, q, false); }

namespace {
int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

LaurentPoly truncated(const LaurentPoly& p, int degree) {
  LaurentPoly r(p.arity());
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) <= degree) r.add_term(e, c);
  return r;
}

LaurentPoly mul_truncated(const LaurentPoly& p, const LaurentPoly& q, int degree) {
  if (p.arity() != q.arity()) throw InvalidArgument("polynomial arity mismatch");
  LaurentPoly r(p.arity());
  Exponent e(p.arity());
  for (const auto& [ea, ca] : p.terms()) {
    const int da = total_degree(ea);
    if (da > degree) continue;
    for (const auto& [eb, cb] : q.terms()) {
      if (da + total_degree(eb) > degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly series_inverse(const LaurentPoly& p, int degree) {
  const mpz_class c0 = p.constant_term();
  if (c0 != 1 && c0 != -1) throw NotDivisible("series with non-unit constant term has no inverse");
  // p = c0 (1 + r), so 1/p = c0 * sum_m (-r)^m.
  LaurentPoly minus_r = truncated(p, degree);
  minus_r.add_term(Exponent(p.arity(), 0), -c0);
  minus_r = -(c0 == 1 ? minus_r : -minus_r);
  LaurentPoly sum = LaurentPoly::one(p.arity());
  LaurentPoly power = LaurentPoly::one(p.arity());
  for (int m = 1; m <= degree; ++m) {
    power = mul_truncated(power, minus_r, degree);
    if (power.is_zero()) break;
    sum += power;
  }
  return c0 == 1 ? sum : -sum;
}

IntVec max_degrees(const LaurentPoly& p) {
  const Exponent m = p.max_exponents();
  return IntVec(m.begin(), m.end());
}

IntVec tropical_eval(const LaurentPoly& p, const std::vector<IntVec>& assignment) {
  if (p.is_zero()) throw InvalidArgument("tropical evaluation of the zero polynomial");
  if (assignment.size() != p.arity()) throw InvalidArgument("tropical evaluation needs one value per variable");
  const std::size_t ell = assignment.empty() ? 0 : assignment.front().size();
  IntVec best;
  bool first = true;
  IntVec val(ell);
  for (const auto& [e, c] : p.terms()) {
    std::fill(val.begin(), val.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < ell; ++j) val[j] = checked_add(val[j], checked_mul(e[i], assignment[i][j]));
    }
    if (first) {
      best = val;
      first = false;
    } else {
      best = vec_min(best, val);
    }
  }
  return best;
}

}  // namespace cluster
