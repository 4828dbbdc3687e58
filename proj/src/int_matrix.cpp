#include "cluster/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cluster/error.hpp"

namespace cluster {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

IntMat::IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be at least 1");
}

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows)
    : IntMat(from_rows(std::vector<IntVec>(rows.begin(), rows.end()))) {}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidArgument("matrix must be non-empty");
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
  }
  return m;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::sign_flip_diag(std::size_t n, std::size_t l) {
  IntMat m = identity(n);
  m(l, l) = -1;
  return m;
}

IntVec IntMat::column(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMat::set_column(std::size_t j, std::span<const Int> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<IntVec> IntMat::to_rows() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = checked_neg(data_[k]);
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("dimension mismatch in matrix sum");
  IntMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = checked_add(data_[k], o.data_[k]);
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("dimension mismatch in matrix difference");
  IntMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = checked_sub(data_[k], o.data_[k]);
  return r;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw InvalidArgument("dimension mismatch in matrix product");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
    }
  return r;
}

IntMat IntMat::positive_part() const {
  IntMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = pos(data_[k]);
  return r;
}

IntMat IntMat::row_mask(std::size_t k) const {
  IntMat r(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(k, j);
  return r;
}

IntMat IntMat::col_mask(std::size_t k) const {
  IntMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) r(i, k) = (*this)(i, k);
  return r;
}

IntMat IntMat::max(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("dimension mismatch in matrix max");
  IntMat r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = std::max(data_[k], o.data_[k]);
  return r;
}

IntMat IntMat::principal_submatrix(std::span<const std::size_t> idx) const {
  IntMat r(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) r(a, b) = (*this)(idx[a], idx[b]);
  return r;
}

IntMat IntMat::permuted(std::span<const std::size_t> perm) const {
  IntMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(perm[i], perm[j]) = (*this)(i, j);
  return r;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
  }
  return os.str();
}

IntVec vec_add(std::span<const Int> a, std::span<const Int> b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec vec_scale(Int s, std::span<const Int> a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(s, a[i]);
  return r;
}

IntVec vec_max(std::span<const Int> a, std::span<const Int> b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

IntVec vec_min(std::span<const Int> a, std::span<const Int> b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

IntVec vec_pos(std::span<const Int> a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = pos(a[i]);
  return r;
}

IntVec vec_neg(std::span<const Int> a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_neg(a[i]);
  return r;
}

bool sign_coherent_nonzero(std::span<const Int> v) {
  bool any_pos = false, any_neg = false;
  for (Int x : v) {
    any_pos |= x > 0;
    any_neg |= x < 0;
  }
  return (any_pos || any_neg) && !(any_pos && any_neg);
}

}  // namespace cluster
