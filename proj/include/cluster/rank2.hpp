#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cluster/compat.hpp"
#include "cluster/int_matrix.hpp"
#include "json.hpp"

namespace cluster {

/// S_{-1} = 0, S_0 = 1, S_p = u S_{p-1} - S_{p-2}.
class ChebyshevTable {
 public:
  ChebyshevTable(Int u, int max_p);

  Int u() const { return u_; }
  int max_p() const { return static_cast<int>(values_.size()) - 2; }
  /// Valid for -1 <= p <= max_p.
  const mpz_class& operator()(int p) const;

 private:
  Int u_;
  std::vector<mpz_class> values_;
};

/// B = [[0, b], [-c, 0]].
ExchangeMatrix rank2_matrix(Int b, Int c);

/// Word of the vertex t_n: 2,1,2,... for n > 0 and 1,2,1,... for n < 0.
MutationWord rank2_word(std::int64_t n);
/// Signed vertex index of a (reduced) rank-2 word.
std::int64_t rank2_vertex(const MutationWord& w);

/// F-matrix at t_n from the Chebyshev closed forms. BadParameters if bc < 4.
IntMat closed_form_F(Int b, Int c, std::int64_t n);

/// Cluster variables of an infinite rank-2 pattern form a line z_m with the
/// cluster at t_n equal to {z_{n-1}, z_n}; this is the z-index of a ref.
std::int64_t rank2_line_index(const VariableRef& r);
/// A ref naming z_m.
VariableRef rank2_line_ref(std::int64_t m);

struct Rank2Exchangeability {
  bool exchangeable = false;
  Int degree_ab = 0;
  Int degree_ba = 0;
  /// The shared variable when exchangeable.
  std::optional<VariableRef> witness;
  nlohmann::json certificate;
};

/// Decides whether two rank-2 cluster variables are exchangeable. Finite
/// type (bc <= 3) goes through the explorer.
Rank2Exchangeability rank2_exchangeability(Int b, Int c, const VariableRef& a, const VariableRef& bref);

void to_json(nlohmann::json& j, const Rank2Exchangeability& r);

}  // namespace cluster
