#pragma once

#include <cstddef>
#include <vector>

#include "cluster/int_matrix.hpp"

namespace cluster {

/// Returns the componentwise-minimal positive diagonal S with SB
/// skew-symmetric, normalized so the entries of every connected component
/// of the symmetrizability graph are relatively prime.
///
/// Throws NotSkewSymmetrizable if b is not square, has a nonzero diagonal
/// entry, violates the sign pattern (b_ij * b_ji > 0, or exactly one of
/// b_ij, b_ji zero), or has inconsistent ratios around a cycle.
IntVec find_skew_symmetrizer(const IntMat& b);

/// Skew-symmetrizable square integer matrix together with its skew-symmetrizer.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMat b);

  std::size_t size() const { return b_.rows(); }
  const IntMat& matrix() const { return b_; }
  const IntVec& symmetrizer() const { return s_; }
  Int operator()(std::size_t i, std::size_t j) const { return b_(i, j); }

  /// Matrix mutation in direction k (0-based). Keeps the skew-symmetrizer.
  ExchangeMatrix mutate(std::size_t k) const;
  ExchangeMatrix mutate_along(const std::vector<std::size_t>& word) const;

  ExchangeMatrix negated() const;
  /// -B^T, the exchange matrix of the dual pattern.
  ExchangeMatrix dual() const;
  ExchangeMatrix transposed() const;
  ExchangeMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;

  bool is_skew_symmetric() const;
  bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }

 private:
  ExchangeMatrix(IntMat b, IntVec s) : b_(std::move(b)), s_(std::move(s)) {}

  IntMat b_;
  IntVec s_;
};

/// Entrywise matrix mutation, without any skew-symmetrizability bookkeeping.
IntMat mutate_matrix(const IntMat& b, std::size_t k);

}  // namespace cluster
