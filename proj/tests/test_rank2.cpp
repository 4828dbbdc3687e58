#include "cluster/error.hpp"
#include "cluster/rank2.hpp"
#include "doctest.h"

using namespace cluster;

TEST_CASE("Chebyshev values") {
  const ChebyshevTable s(2, 5);
  CHECK(s(-1) == 0);
  CHECK(s(0) == 1);
  CHECK(s(1) == 2);
  CHECK(s(5) == 6);
  const ChebyshevTable big(7, 60);
  for (int p = 0; p <= 60; ++p) CHECK(big(p) > big(p - 1));
  CHECK_THROWS_AS(s(6), InvalidArgument);
}

TEST_CASE("words and vertices") {
  CHECK(rank2_word(3) == MutationWord{1, 0, 1});
  CHECK(rank2_word(-2) == MutationWord{0, 1});
  CHECK(rank2_word(0).empty());
  for (std::int64_t n = -6; n <= 6; ++n) CHECK(rank2_vertex(rank2_word(n)) == n);
  CHECK(rank2_vertex({1, 0, 0, 1}) == 0);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_F(2, 2, 4) == IntMat{{3, 2}, {4, 3}});
  CHECK(closed_form_F(2, 2, 0) == IntMat(2, 2));
  CHECK(closed_form_F(2, 2, 1) == IntMat{{0, 0}, {0, 1}});
  CHECK_THROWS_AS(closed_form_F(1, 3, 2), BadParameters);
}

TEST_CASE("closed forms equal the recursion") {
  for (auto [b, c] : std::vector<std::pair<Int, Int>>{{2, 2}, {1, 4}, {4, 1}, {2, 3}, {3, 2}, {3, 3}, {1, 5}})
    for (std::int64_t n = -12; n <= 12; ++n) {
      CAPTURE(b);
      CAPTURE(c);
      CAPTURE(n);
      CHECK(closed_form_F(b, c, n) == evolve(rank2_matrix(b, c), rank2_word(n), {.polynomials = false}).f);
    }
}

TEST_CASE("line indexing") {
  CHECK(rank2_line_index({{}, 0}) == 0);
  CHECK(rank2_line_index({{}, 1}) == -1);
  CHECK(rank2_line_index({{1}, 1}) == 1);
  CHECK(rank2_line_index({{0}, 0}) == -2);
  for (std::int64_t m = -7; m <= 7; ++m) CHECK(rank2_line_index(rank2_line_ref(m)) == m);
  // Same variable reached from two vertices.
  CHECK(rank2_line_index({rank2_word(3), 0}) == rank2_line_index({rank2_word(2), 0}));
}

TEST_CASE("exchangeability in infinite rank 2") {
  const auto r = rank2_exchangeability(2, 2, {{}, 0}, {rank2_word(2), 0});
  CHECK(r.exchangeable);
  CHECK(r.degree_ab == 1);
  CHECK(r.degree_ba == 1);
  REQUIRE(r.witness.has_value());
  CHECK(rank2_line_index(*r.witness) == rank2_line_index({rank2_word(1), 1}));
  const auto far = rank2_exchangeability(2, 2, {{}, 0}, {rank2_word(4), 0});
  CHECK_FALSE(far.exchangeable);
  CHECK(far.certificate["degree_product"].get<Int>() > 1);
  CHECK(far.degree_ab >= 3);
  const auto left = rank2_exchangeability(2, 2, {{}, 0}, {rank2_word(-1), 0});
  CHECK(left.exchangeable);
}

TEST_CASE("degree pair (1,1) iff exchangeable, rank 2") {
  for (auto [b, c] : std::vector<std::pair<Int, Int>>{{2, 2}, {1, 4}, {3, 3}, {1, 1}, {1, 2}, {1, 3}})
    for (std::int64_t m1 = -5; m1 <= 5; ++m1)
      for (std::int64_t m2 = -5; m2 <= 5; ++m2) {
        const auto r = rank2_exchangeability(b, c, rank2_line_ref(m1), rank2_line_ref(m2));
        CHECK(r.exchangeable == (r.degree_ab == 1 && r.degree_ba == 1));
        CHECK((r.degree_ab == 0) == (r.degree_ba == 0));
      }
}
