#pragma once

#include <cstddef>
#include <vector>

#include "cluster/compat.hpp"
#include "cluster/exchange_matrix.hpp"
#include "cluster/explorer.hpp"
#include "cluster/int_matrix.hpp"

namespace cluster {

/// Root coordinates in the basis of simple roots.
using Root = IntVec;

/// A Cartan matrix of finite type with its bipartition and B(C).
///
/// Reflections follow s_i(beta) = beta - (sum_j C_ij beta_j) alpha_i, and
/// I+ holds the vertices at even distance from the lowest-indexed vertex of
/// each component of the Dynkin graph.
class CartanData {
 public:
  /// Validates the shape, sign and bipartite conditions; finiteness is
  /// checked lazily by root enumeration.
  explicit CartanData(IntMat c);

  std::size_t rank() const { return c_.rows(); }
  const IntMat& cartan() const { return c_; }
  /// +1 for vertices in I+, -1 for I-.
  const std::vector<int>& signs() const { return eps_; }
  /// b_ij = -eps(i) C_ij off the diagonal.
  const ExchangeMatrix& exchange_matrix() const { return b_; }
  /// e_i > 0 with e_i C_ij = e_j C_ji, relatively prime per component.
  const IntVec& symmetrizer() const { return e_; }
  /// Same bipartition, transposed Cartan matrix.
  CartanData dual() const;

  Root simple(std::size_t i, int sign = 1) const;
  Root reflect(std::size_t i, const Root& beta) const;

 private:
  CartanData(IntMat c, std::vector<int> eps);

  IntMat c_;
  std::vector<int> eps_;
  ExchangeMatrix b_;
  IntVec e_;
};

bool is_negative_simple(const Root& beta);

/// tau_+ (sign = +1) or tau_- (sign = -1).
Root tau(const CartanData& c, int sign, const Root& beta);

/// Negative simple roots (by index) then positive roots (by height, then
/// lexicographically descending). NotFiniteType past max_roots (default
/// 10 n^2).
std::vector<Root> enumerate_almost_positive_roots(const CartanData& c, std::size_t max_roots = 0);

/// (alpha || beta)_cl.
Int classical_degree(const CartanData& c, const Root& alpha, const Root& beta);

/// beta^v in the coroot basis (a root of the dual datum).
Root coroot(const CartanData& c, const Root& beta);

/// The variable of a complete exploration of B(C) whose d-vector is beta.
std::size_t root_to_variable(const ExchangeGraph& g, const Root& beta);

}  // namespace cluster
