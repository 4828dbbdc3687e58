#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster/exchange_matrix.hpp"
#include "cluster/int_matrix.hpp"
#include "cluster/laurent.hpp"

namespace cluster {

/// Path t0 -k1- t1 -k2- ... in the n-regular tree, as 0-based directions.
using MutationWord = std::vector<std::size_t>;

/// Throws InvalidArgument if some direction is >= n.
void check_word(const MutationWord& w, std::size_t n);
/// Free reduction: cancels adjacent repeated directions (the geodesic path).
MutationWord reduce_word(const MutationWord& w);
/// The path from t(w) back to t0.
MutationWord reversed(const MutationWord& w);
/// Path from t(a) to t(b); with elide_common_prefix the shared prefix of a
/// and b is dropped first.
MutationWord path_between(const MutationWord& a, const MutationWord& b, bool elide_common_prefix);

/// Coefficients of the initial seed: principal, trivial, or tropical in l
/// generators u_1..u_l with y_j = u^{column j of P}.
class CoefficientSpec {
 public:
  enum class Kind { principal, trivial, tropical };

  static CoefficientSpec principal(std::size_t n);
  static CoefficientSpec trivial(std::size_t n);
  /// P is l x n; column j gives the initial y_j.
  static CoefficientSpec tropical(const IntMat& p);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return n_; }
  std::size_t generators() const { return ell_; }
  /// Exponent vector of the initial coefficient y_j.
  const IntVec& initial_y(std::size_t j) const { return y_[j]; }
  /// Names of the tropical generators (y1.. for principal, u1.. otherwise).
  std::vector<std::string> generator_names() const;

 private:
  CoefficientSpec(Kind kind, std::size_t n, std::size_t ell, std::vector<IntVec> y)
      : kind_(kind), n_(n), ell_(ell), y_(std::move(y)) {}

  Kind kind_;
  std::size_t n_;
  std::size_t ell_;
  std::vector<IntVec> y_;
};

struct EvolveOptions {
  /// Compute F-polynomials (otherwise only the integer matrices).
  bool polynomials = true;
  /// Also carry principal-coefficient cluster variables via the exchange
  /// relation.
  bool cluster_variables = false;
  /// Bound on the exponent box (product of (degree + 1) over the variables)
  /// of each exchange numerator; beyond it BudgetExceeded is thrown before
  /// any expansion. 0 means unlimited.
  std::size_t max_terms = 0;
};

/// Everything attached to the vertex t(word) of the pattern rooted at t0.
///
/// C, G, D, F are n x n with column j describing x_{j;t}. Cluster variables,
/// when present, live in Z[x1^+-..xn^+-, y1^+-..yn^+-] (principal
/// coefficients).
struct PatternState {
  ExchangeMatrix initial;
  ExchangeMatrix b;
  IntMat c;
  IntMat g;
  IntMat d;
  IntMat f;
  std::vector<MultiPoly> fpolys;
  std::vector<LaurentPoly> xvars;
  MutationWord word;

  std::size_t rank() const { return b.size(); }
  bool has_polynomials() const { return !fpolys.empty(); }
};

/// State at the rooted vertex: C = G = E, D = -E, F = 0, F-polynomials 1.
PatternState initial_state(const ExchangeMatrix& b0, const EvolveOptions& opts = {});
/// One step of every recursion, in direction k (0-based).
PatternState step(const PatternState& s, std::size_t k, std::size_t max_terms = 0);
PatternState evolve(const ExchangeMatrix& b0, const MutationWord& w, const EvolveOptions& opts = {});

/// A labeled seed whose coefficients live in a tropical semifield. Cluster
/// variables are Laurent polynomials in x1..xn and the l tropical generators.
struct Seed {
  ExchangeMatrix b;
  CoefficientSpec spec;
  std::vector<LaurentPoly> x;
  std::vector<IntVec> y;

  std::size_t rank() const { return b.size(); }
  std::vector<std::string> variable_names() const;
};

Seed initial_seed(const ExchangeMatrix& b0, const CoefficientSpec& spec);
/// Seed mutation by the exchange relation with exact Laurent division.
Seed mutate_seed_direct(const Seed& s, std::size_t k);
Seed mutate_seed_along(const Seed& s, const MutationWord& w);

/// x^g F(y-hat) / F|_P(y) in the ring of the given coefficient spec.
LaurentPoly separation_x(const IntVec& g, const MultiPoly& f, const ExchangeMatrix& b0, const CoefficientSpec& spec);
/// Exponent vector of y_{j;t} = prod y_k^{c_kj} prod (F_k|_P(y))^{b_kj;t}.
IntVec separation_y(std::size_t j, const IntMat& c, const std::vector<MultiPoly>& fpolys, const ExchangeMatrix& bt,
                    const CoefficientSpec& spec);

/// Negated minimum exponent of x_1..x_n over the monomials of a cluster
/// variable: its denominator vector.
IntVec denominator_vector(const LaurentPoly& x, std::size_t n);
/// D-matrix read off Laurent expansions of the cluster of a seed.
IntMat denominator_matrix(const std::vector<LaurentPoly>& x, std::size_t n);

/// Tropical values of F_{1;t}..F_{n;t} at y_i -> u^{assignment[i]}, pushed
/// through the subtraction-free F-polynomial recursion instead of expanding
/// the polynomials.
std::vector<IntVec> tropical_F(const ExchangeMatrix& b0, const MutationWord& w, const std::vector<IntVec>& assignment);

/// F-polynomials modulo monomials of total degree > degree, computed in the
/// truncated power-series ring.
std::vector<MultiPoly> evolve_jets(const ExchangeMatrix& b0, const MutationWord& w, int degree);

/// H-matrix: entry (i, j) is the tropical value of F_j at y_i -> u^-1,
/// y_m -> u^{[-b_im]+}. Uses the F-polynomials when present and the
/// tropical recursion otherwise.
IntMat h_matrix(const PatternState& s);
IntMat h_matrix_by_recursion(const PatternState& s);

/// F-matrix of the same vertex with respect to the initial seed mutated in
/// direction k, via the linear initial-seed mutation formula with sign eps.
IntMat initial_mutation_F(const PatternState& s, std::size_t k, int eps);

}  // namespace cluster
