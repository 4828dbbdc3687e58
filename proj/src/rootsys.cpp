#include "cluster/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "cluster/error.hpp"

namespace cluster {

namespace {

std::vector<int> bipartition(const IntMat& c) {
  const std::size_t n = c.rows();
  std::vector<int> eps(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (eps[root]) continue;
    eps[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c(i, j) == 0) continue;
        if (!eps[j]) {
          eps[j] = -eps[i];
          q.push(j);
        } else if (eps[j] == eps[i]) {
          throw NotFiniteType("Dynkin graph is not bipartite");
        }
      }
    }
  }
  return eps;
}

void validate(const IntMat& c) {
  if (!c.is_square()) throw InvalidArgument("Cartan matrix must be square");
  for (std::size_t i = 0; i < c.rows(); ++i) {
    if (c(i, i) != 2) throw InvalidArgument("Cartan matrix needs 2 on the diagonal");
    for (std::size_t j = 0; j < c.rows(); ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) throw InvalidArgument("Cartan matrix off-diagonal entries must be <= 0");
      if ((c(i, j) == 0) != (c(j, i) == 0)) throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
    }
  }
}

IntMat b_of(const IntMat& c, const std::vector<int>& eps) {
  const std::size_t n = c.rows();
  IntMat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) b(i, j) = -eps[i] * c(i, j);
  return b;
}

}  // namespace

CartanData::CartanData(IntMat c) : CartanData(c, (validate(c), bipartition(c))) {}

CartanData::CartanData(IntMat c, std::vector<int> eps)
    : c_(std::move(c)), eps_(std::move(eps)), b_(b_of(c_, eps_)) {
  // B(C) = -eps C off the diagonal, so the symmetrizer of B symmetrizes C:
  // s_i b_ij = -s_j b_ji  <=>  s_i C_ij = s_j C_ji.
  e_ = b_.symmetrizer();
}

CartanData CartanData::dual() const { return CartanData(c_.transpose(), eps_); }

Root CartanData::simple(std::size_t i, int sign) const {
  Root r(rank(), 0);
  r[i] = sign;
  return r;
}

Root CartanData::reflect(std::size_t i, const Root& beta) const {
  Int pairing = 0;
  for (std::size_t j = 0; j < rank(); ++j) pairing = checked_add(pairing, checked_mul(c_(i, j), beta[j]));
  Root r = beta;
  r[i] = checked_sub(r[i], pairing);
  return r;
}

bool is_negative_simple(const Root& beta) {
  std::size_t minus = 0, zero = 0;
  for (Int v : beta) {
    if (v == -1) ++minus;
    if (v == 0) ++zero;
  }
  return minus == 1 && zero + 1 == beta.size();
}

Root tau(const CartanData& c, int sign, const Root& beta) {
  if (sign != 1 && sign != -1) throw InvalidArgument("tau sign must be +1 or -1");
  if (is_negative_simple(beta)) {
    const auto j = static_cast<std::size_t>(std::find(beta.begin(), beta.end(), -1) - beta.begin());
    if (c.signs()[j] == -sign) return beta;
  }
  Root r = beta;
  for (std::size_t i = 0; i < c.rank(); ++i)
    if (c.signs()[i] == sign) r = c.reflect(i, r);
  return r;
}

std::vector<Root> enumerate_almost_positive_roots(const CartanData& c, std::size_t max_roots) {
  const std::size_t n = c.rank();
  if (max_roots == 0) max_roots = 10 * n * n;
  std::set<Root> seen;
  std::queue<Root> q;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(c.simple(i, -1));
    q.push(c.simple(i, -1));
  }
  while (!q.empty()) {
    const Root r = q.front();
    q.pop();
    for (int sign : {1, -1}) {
      Root t = tau(c, sign, r);
      if (!is_negative_simple(t) && std::any_of(t.begin(), t.end(), [](Int v) { return v < 0; }))
        throw NotFiniteType("tau produced a root outside the almost positive roots");
      if (seen.insert(t).second) {
        if (seen.size() > max_roots)
          throw NotFiniteType("more than " + std::to_string(max_roots) + " almost positive roots");
        q.push(std::move(t));
      }
    }
  }
  std::vector<Root> neg, posr;
  for (std::size_t i = 0; i < n; ++i) neg.push_back(c.simple(i, -1));
  for (const auto& r : seen)
    if (!is_negative_simple(r)) posr.push_back(r);
  std::sort(posr.begin(), posr.end(), [](const Root& a, const Root& b) {
    const Int ha = std::accumulate(a.begin(), a.end(), Int{0});
    const Int hb = std::accumulate(b.begin(), b.end(), Int{0});
    return ha != hb ? ha < hb : a > b;
  });
  neg.insert(neg.end(), posr.begin(), posr.end());
  return neg;
}

Int classical_degree(const CartanData& c, const Root& alpha, const Root& beta) {
  const std::size_t n = c.rank();
  if (alpha.size() != n || beta.size() != n) throw InvalidArgument("root dimension mismatch");
  Root a = alpha, b = beta;
  // Each tau_+- orbit on the almost positive roots has length at most h + 2.
  const std::size_t limit = 2 * (10 * n * n) + 2;
  int sign = 1;
  for (std::size_t steps = 0; steps <= limit; ++steps) {
    if (is_negative_simple(a)) {
      const auto i = static_cast<std::size_t>(std::find(a.begin(), a.end(), -1) - a.begin());
      return pos(b[i]);
    }
    a = tau(c, sign, a);
    b = tau(c, sign, b);
    sign = -sign;
  }
  throw OrbitExhausted("alpha never reached a negative simple root");
}

Root coroot(const CartanData& c, const Root& beta) {
  const std::size_t n = c.rank();
  const IntVec& e = c.symmetrizer();
  // (beta, beta)/2 with (alpha_i, alpha_j) = e_i C_ij.
  Int norm2 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      norm2 = checked_add(norm2, checked_mul(checked_mul(beta[i], beta[j]), checked_mul(e[i], c.cartan()(i, j))));
  if (norm2 <= 0 || norm2 % 2) throw InvalidArgument("not a root");
  const Int half = norm2 / 2;
  Root r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int num = checked_mul(beta[i], e[i]);
    if (num % half) throw InvalidArgument("coroot coordinates are not integral");
    r[i] = num / half;
  }
  return r;
}

std::size_t root_to_variable(const ExchangeGraph& g, const Root& beta) {
  if (!g.complete) throw RequiresComplete("root matching needs a complete exchange graph");
  for (std::size_t v = 0; v < g.variables.size(); ++v)
    if (g.variables[v].d == beta) return v;
  throw NotFound("no cluster variable has this d-vector");
}

}  // namespace cluster
