#include "cluster/rank2.hpp"

#include <cstdlib>

#include "cluster/error.hpp"
#include "cluster/explorer.hpp"

namespace cluster {

ChebyshevTable::ChebyshevTable(Int u, int max_p) : u_(u) {
  if (max_p < -1) throw InvalidArgument("Chebyshev table needs max_p >= -1");
  values_.push_back(0);
  values_.push_back(1);
  for (int p = 1; p <= max_p; ++p) {
    const std::size_t i = values_.size();
    values_.push_back(mpz_class(static_cast<long>(u)) * values_[i - 1] - values_[i - 2]);
  }
}

const mpz_class& ChebyshevTable::operator()(int p) const {
  if (p < -1 || p > max_p()) throw InvalidArgument("Chebyshev index out of range");
  return values_[static_cast<std::size_t>(p + 1)];
}

ExchangeMatrix rank2_matrix(Int b, Int c) {
  if (b < 0 || c < 0) throw BadParameters("rank-2 parameters b, c must be nonnegative");
  if ((b == 0) != (c == 0)) throw BadParameters("b and c must vanish together");
  return ExchangeMatrix(IntMat{{0, b}, {checked_neg(c), 0}});
}

MutationWord rank2_word(std::int64_t n) {
  MutationWord w;
  const std::size_t first = n > 0 ? 1 : 0;
  for (std::int64_t i = 0; i < std::llabs(n); ++i) w.push_back(i % 2 == 0 ? first : 1 - first);
  return w;
}

std::int64_t rank2_vertex(const MutationWord& w) {
  const MutationWord r = reduce_word(w);
  check_word(r, 2);
  if (r.empty()) return 0;
  const auto len = static_cast<std::int64_t>(r.size());
  return r.front() == 1 ? len : -len;
}

namespace {

Int to_int(const mpz_class& v) {
  if (!v.fits_slong_p()) throw OverflowError("closed-form entry exceeds 64 bits");
  return v.get_si();
}

IntMat positive_closed_form(Int b, Int c, std::int64_t n) {
  if (n == 0) return IntMat(2, 2);
  if (n == 1) return IntMat{{0, 0}, {0, 1}};
  const ChebyshevTable s(checked_sub(checked_mul(b, c), 2), static_cast<int>(n / 2 + 1));
  const mpz_class mb(static_cast<long>(b)), mc(static_cast<long>(c));
  if (n % 2 == 0) {
    const int p = static_cast<int>((n - 2) / 2), q = static_cast<int>((n - 4) / 2);
    const mpz_class diag = s(p) + s(q);
    return IntMat{{to_int(diag), to_int(mb * s(q))}, {to_int(mc * s(p)), to_int(diag)}};
  }
  const int p = static_cast<int>((n - 3) / 2), q = static_cast<int>((n - 5) / 2), r = static_cast<int>((n - 1) / 2);
  return IntMat{{to_int(s(p) + s(q)), to_int(mb * s(p))}, {to_int(mc * s(p)), to_int(s(r) + s(p))}};
}

}  // namespace

IntMat closed_form_F(Int b, Int c, std::int64_t n) {
  if (b < 0 || c < 0 || checked_mul(b, c) < 4) throw BadParameters("closed forms need b, c >= 0 with bc >= 4");
  if (n >= 0) return positive_closed_form(b, c, n);
  // Relabel 1 <-> 2: the left branch of B is the right branch of -B^T.
  const IntMat f = positive_closed_form(c, b, -n);
  return IntMat{{f(1, 1), f(1, 0)}, {f(0, 1), f(0, 0)}};
}

std::int64_t rank2_line_index(const VariableRef& r) {
  if (r.index > 1) throw InvalidArgument("rank-2 variable index must be 1 or 2");
  const std::int64_t n = rank2_vertex(r.word);
  const std::size_t fresh = n % 2 != 0 ? 1 : 0;
  return r.index == fresh ? n : n - 1;
}

VariableRef rank2_line_ref(std::int64_t m) { return {rank2_word(m), static_cast<std::size_t>(m % 2 != 0 ? 1 : 0)}; }

Rank2Exchangeability rank2_exchangeability(Int b, Int c, const VariableRef& a, const VariableRef& bref) {
  const ExchangeMatrix m = rank2_matrix(b, c);
  Rank2Exchangeability r;
  r.degree_ab = compatibility_degree(m, a, bref);
  r.degree_ba = compatibility_degree(m, bref, a);
  if (checked_mul(b, c) <= 3) {
    const ExchangeGraph g = explore(m);
    const auto ia = g.find_variable(a), ib = g.find_variable(bref);
    if (!ia || !ib) throw NotFound("variable missing from the finite exchange graph");
    const auto w = find_exchange_witness(g, *ia, *ib);
    r.exchangeable = w.has_value();
    if (w) r.witness = g.variables[w->common.front()].ref;
    r.certificate = {{"method", "exhaustive exchange graph"}, {"seeds", g.seeds.size()}};
    return r;
  }
  const std::int64_t ma = rank2_line_index(a), mb = rank2_line_index(bref);
  const std::int64_t gap = std::llabs(ma - mb);
  r.certificate = {{"line_index_a", ma}, {"line_index_b", mb}};
  if (gap == 2) {
    r.exchangeable = true;
    r.witness = rank2_line_ref((ma + mb) / 2);
    r.certificate["method"] = "neighbouring clusters share the middle variable";
  } else if (gap == 0) {
    r.certificate["method"] = "same variable";
  } else if (gap == 1) {
    r.certificate["method"] = "compatible: both lie in one cluster";
  } else {
    const Int product = checked_mul(r.degree_ab, r.degree_ba);
    r.certificate["method"] = "degree product exceeds 1";
    r.certificate["degree_product"] = product;
    if (a.word.empty()) {
      const IntMat f = closed_form_F(b, c, rank2_vertex(bref.word));
      r.certificate["closed_form_F"] = f.to_rows();
    }
    if (product <= 1) r.certificate["warning"] = "degree product does not exceed 1";
  }
  return r;
}

void to_json(nlohmann::json& j, const Rank2Exchangeability& r) {
  j = {{"exchangeable", r.exchangeable},
       {"degrees", {r.degree_ab, r.degree_ba}},
       {"certificate", r.certificate},
       {"witness", r.witness ? nlohmann::json(to_string(*r.witness)) : nlohmann::json(nullptr)}};
}

}  // namespace cluster
