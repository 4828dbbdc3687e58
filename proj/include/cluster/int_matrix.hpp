#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cluster {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Checked scalar arithmetic. Every helper throws OverflowError instead of
// wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

inline Int pos(Int b) { return b > 0 ? b : 0; }

/// Dense row-major integer matrix with overflow-checked arithmetic.
///
/// Houses exchange matrices as well as the C, G, D, F and H matrices of a
/// cluster pattern. Dimensions are always at least 1x1.
class IntMat {
 public:
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat identity(std::size_t n);
  /// Identity with the (l, l) entry replaced by -1.
  static IntMat sign_flip_diag(std::size_t n, std::size_t l);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const Int> v);
  std::vector<IntVec> to_rows() const;

  IntMat transpose() const;
  IntMat operator-() const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;

  /// Entrywise [m]_+.
  IntMat positive_part() const;
  /// Zero every entry outside row k.
  IntMat row_mask(std::size_t k) const;
  /// Zero every entry outside column k.
  IntMat col_mask(std::size_t k) const;
  /// Entrywise max.
  IntMat max(const IntMat& o) const;
  /// Principal submatrix on the given (sorted, distinct) indices.
  IntMat principal_submatrix(std::span<const std::size_t> idx) const;
  /// P M P^{-1} where P sends position i to perm[i].
  IntMat permuted(std::span<const std::size_t> perm) const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

IntVec vec_add(std::span<const Int> a, std::span<const Int> b);
IntVec vec_scale(Int s, std::span<const Int> a);
IntVec vec_max(std::span<const Int> a, std::span<const Int> b);
IntVec vec_min(std::span<const Int> a, std::span<const Int> b);
IntVec vec_pos(std::span<const Int> a);
IntVec vec_neg(std::span<const Int> a);

/// Entries all >= 0 or all <= 0, and not all zero.
bool sign_coherent_nonzero(std::span<const Int> v);

}  // namespace cluster
