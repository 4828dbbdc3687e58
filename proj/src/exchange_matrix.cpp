#include "cluster/exchange_matrix.hpp"

#include <numeric>
#include <queue>
#include <string>

#include "cluster/error.hpp"

namespace cluster {
namespace {

struct Ratio {
  Int num = 0;
  Int den = 1;
};

Ratio reduce(Int num, Int den) {
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string at(std::size_t i, std::size_t j) {
  return " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

IntVec find_skew_symmetrizer(const IntMat& b) {
  if (!b.is_square()) throw NotSkewSymmetrizable("exchange matrix must be square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry" + at(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int a = b(i, j), c = b(j, i);
      if ((a == 0) != (c == 0)) throw NotSkewSymmetrizable("exactly one of b_ij, b_ji is zero" + at(i, j));
      if ((a > 0 && c > 0) || (a < 0 && c < 0))
        throw NotSkewSymmetrizable("b_ij and b_ji have the same sign" + at(i, j));
    }
  }

  // s_i b_ij = -s_j b_ji, propagated as exact ratios over each component.
  std::vector<Ratio> s(n);
  std::vector<int> comp(n, -1);
  IntVec out(n, 0);
  int next_comp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> q;
    comp[root] = next_comp;
    s[root] = {1, 1};
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || b(i, j) == 0) continue;
        const Ratio sj = reduce(checked_mul(s[i].num, b(i, j)), checked_mul(s[i].den, checked_neg(b(j, i))));
        if (comp[j] < 0) {
          comp[j] = next_comp;
          s[j] = sj;
          q.push(j);
        } else if (sj.num != s[j].num || sj.den != s[j].den) {
          throw NotSkewSymmetrizable("inconsistent symmetrizer ratios around a cycle" + at(i, j));
        }
      }
    }
    Int l = 1;
    for (std::size_t i : members) l = std::lcm(l, s[i].den);
    Int g = 0;
    for (std::size_t i : members) {
      out[i] = checked_mul(s[i].num, l / s[i].den);
      g = std::gcd(g, out[i]);
    }
    for (std::size_t i : members) out[i] /= g;
    ++next_comp;
  }
  return out;
}

IntMat mutate_matrix(const IntMat& b, std::size_t k) {
  const std::size_t n = b.rows();
  if (k >= n) throw InvalidArgument("mutation direction out of range");
  IntMat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r(i, j) = checked_neg(b(i, j));
      } else {
        const Int bik = b(i, k), bkj = b(k, j);
        r(i, j) = checked_add(b(i, j), checked_add(checked_mul(pos(bik), bkj), checked_mul(bik, pos(-bkj))));
      }
    }
  return r;
}

ExchangeMatrix::ExchangeMatrix(IntMat b) : b_(std::move(b)), s_(find_skew_symmetrizer(b_)) {}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const { return ExchangeMatrix(mutate_matrix(b_, k), s_); }

ExchangeMatrix ExchangeMatrix::mutate_along(const std::vector<std::size_t>& word) const {
  ExchangeMatrix m = *this;
  for (std::size_t k : word) m = m.mutate(k);
  return m;
}

ExchangeMatrix ExchangeMatrix::negated() const { return ExchangeMatrix(-b_, s_); }

ExchangeMatrix ExchangeMatrix::dual() const { return ExchangeMatrix(-b_.transpose()); }

ExchangeMatrix ExchangeMatrix::transposed() const { return ExchangeMatrix(b_.transpose()); }

ExchangeMatrix ExchangeMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  return ExchangeMatrix(b_.principal_submatrix(idx));
}

bool ExchangeMatrix::is_skew_symmetric() const { return b_.transpose() == -b_; }

}  // namespace cluster
