#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cluster/int_matrix.hpp"

namespace cluster {

using Exponent = std::vector<int>;

/// Exact multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Terms are keyed by dense exponent vectors of a fixed arity and stored in
/// lexicographic order; zero coefficients are never stored. A polynomial
/// (MultiPoly) is simply a LaurentPoly whose exponents are all nonnegative.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, mpz_class>;

  explicit LaurentPoly(std::size_t arity = 0) : arity_(arity) {}

  static LaurentPoly constant(std::size_t arity, const mpz_class& c);
  static LaurentPoly one(std::size_t arity) { return constant(arity, 1); }
  static LaurentPoly variable(std::size_t arity, std::size_t i);
  static LaurentPoly monomial(Exponent e, const mpz_class& c = 1);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  bool is_monomial() const { return terms_.size() == 1; }
  mpz_class coefficient(const Exponent& e) const;
  mpz_class constant_term() const { return coefficient(Exponent(arity_, 0)); }

  /// Adds c * x^e to this polynomial.
  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  LaurentPoly pow(unsigned e) const;
  /// Multiplies by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Componentwise minimum (resp. maximum) exponent over all terms.
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  /// Substitutes variable i by the Laurent monomial x^{images[i]} in a ring
  /// of arity new_arity. Coefficients are kept.
  LaurentPoly substitute_monomials(std::size_t new_arity, const std::vector<Exponent>& images) const;

  /// Human-readable form such as "y1*y2 + y1 + 1". Uses y1..yn when names
  /// is empty.
  std::string to_string(const std::vector<std::string>& names = {}) const;
  /// Inverse of to_string for sums of signed monomials (no parentheses).
  static LaurentPoly parse(const std::string& text, const std::vector<std::string>& names);
  static LaurentPoly parse(const std::string& text, std::size_t arity, char prefix = 'y');

  /// Terms ordered by descending total degree, then descending lex order.
  std::vector<std::pair<Exponent, mpz_class>> display_order() const;

 private:
  void check_arity(const LaurentPoly& o) const;

  std::size_t arity_;
  Terms terms_;
};

using MultiPoly = LaurentPoly;

/// Variable names prefix1..prefixn.
std::vector<std::string> indexed_names(char prefix, std::size_t n);

/// Exact quotient p / q. Throws DivisionByZero if q is zero and NotDivisible
/// if q does not divide p in the (Laurent) polynomial ring.
/// When p and q are both polynomials the quotient must be a polynomial too.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
/// Same as exact_div but always in the Laurent polynomial ring.
LaurentPoly exact_div_laurent(const LaurentPoly& p, const LaurentPoly& q);

/// Power-series helpers on Z[[y1..yn]] / (monomials of total degree > degree).
/// Inputs are polynomials; terms above the truncation degree are dropped.
LaurentPoly truncated(const LaurentPoly& p, int degree);
LaurentPoly mul_truncated(const LaurentPoly& p, const LaurentPoly& q, int degree);
/// Inverse in the truncated ring. Needs constant term +1 or -1, otherwise
/// NotDivisible.
LaurentPoly series_inverse(const LaurentPoly& p, int degree);

/// Componentwise maximal exponent over the monomials of p. Throws
/// InvalidArgument on the zero polynomial.
IntVec max_degrees(const LaurentPoly& p);

/// Evaluation in the tropical semifield Trop(u_1..u_l): variable i is sent to
/// u^{assignment[i]}, products become exponent sums and sums become
/// componentwise minima. Coefficients are ignored. Returns the exponent
/// vector of the value. Throws InvalidArgument on the zero polynomial.
IntVec tropical_eval(const LaurentPoly& p, const std::vector<IntVec>& assignment);

}  // namespace cluster
