#include <set>

#include "cluster/error.hpp"
#include "cluster/rootsys.hpp"
#include "doctest.h"

using namespace cluster;

namespace {

const IntMat CA2{{2, -1}, {-1, 2}};
const IntMat CB2{{2, -1}, {-2, 2}};
const IntMat CG2{{2, -1}, {-3, 2}};
const IntMat CA3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
const IntMat CC3{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};

// Independent oracle: positive roots as the closure of the simple roots under
// all simple reflections, keeping only positive vectors.
std::set<Root> reflection_closure(const CartanData& c) {
  std::set<Root> roots;
  std::vector<Root> todo;
  for (std::size_t i = 0; i < c.rank(); ++i) todo.push_back(c.simple(i));
  while (!todo.empty()) {
    Root r = todo.back();
    todo.pop_back();
    if (!roots.insert(r).second) continue;
    for (std::size_t i = 0; i < c.rank(); ++i) {
      Root s = c.reflect(i, r);
      bool positive = true;
      for (Int v : s) positive = positive && v >= 0;
      if (positive) todo.push_back(s);
    }
  }
  return roots;
}

}  // namespace

TEST_CASE("enumeration of almost positive roots") {
  const CartanData a2(CA2);
  CHECK(enumerate_almost_positive_roots(a2) == std::vector<Root>{{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(enumerate_almost_positive_roots(CartanData(IntMat{{2, 0}, {0, 2}})).size() == 4);
  const auto b2 = enumerate_almost_positive_roots(CartanData(CB2));
  CHECK(b2 == std::vector<Root>{{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(enumerate_almost_positive_roots(CartanData(CG2)).size() == 8);
  CHECK(enumerate_almost_positive_roots(CartanData(CA3)).size() == 9);
  CHECK(enumerate_almost_positive_roots(CartanData(CC3)).size() == 12);
  for (const auto* m : {&CA2, &CB2, &CG2, &CA3, &CC3}) {
    const CartanData c(*m);
    std::set<Root> positive;
    for (const auto& r : enumerate_almost_positive_roots(c))
      if (!is_negative_simple(r)) positive.insert(r);
    CHECK(positive == reflection_closure(c));
  }
}

TEST_CASE("bipartition and B(C)") {
  const CartanData a3(CA3);
  CHECK(a3.signs() == std::vector<int>{1, -1, 1});
  CHECK(a3.exchange_matrix().matrix() == IntMat{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}});
  const CartanData b2(CB2);
  CHECK(b2.exchange_matrix().matrix() == IntMat{{0, 1}, {-2, 0}});
  CHECK(b2.symmetrizer() == IntVec{2, 1});
  CHECK(b2.dual().cartan() == CB2.transpose());
}

TEST_CASE("invalid and infinite Cartan data") {
  CHECK_THROWS_AS(CartanData(IntMat{{2, 1}, {-1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(CartanData(IntMat{{2, -1}, {0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(CartanData(IntMat{{1, -1}, {-1, 2}}), InvalidArgument);
  // affine A2: odd cycle
  CHECK_THROWS_AS(CartanData(IntMat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), NotFiniteType);
  // affine A1
  CHECK_THROWS_AS(enumerate_almost_positive_roots(CartanData(IntMat{{2, -2}, {-2, 2}})), NotFiniteType);
}

TEST_CASE("tau maps") {
  const CartanData a2(CA2);
  CHECK(tau(a2, 1, {0, -1}) == Root{0, -1});
  CHECK(tau(a2, 1, {-1, 0}) == Root{1, 0});
  for (const auto* m : {&CA2, &CB2, &CG2, &CA3, &CC3}) {
    const CartanData c(*m);
    for (const auto& r : enumerate_almost_positive_roots(c)) {
      CHECK(tau(c, 1, tau(c, 1, r)) == r);
      CHECK(tau(c, -1, tau(c, -1, r)) == r);
    }
  }
}

TEST_CASE("classical degree") {
  const CartanData a2(CA2);
  CHECK(classical_degree(a2, {-1, 0}, {1, 1}) == 1);
  for (const auto& a : enumerate_almost_positive_roots(a2))
    CHECK(classical_degree(a2, a, a) == 0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(classical_degree(a2, a2.simple(i, -1), a2.simple(j, -1)) == 0);
  for (const auto* m : {&CA2, &CB2, &CG2, &CA3, &CC3}) {
    const CartanData c(*m), d = c.dual();
    const auto roots = enumerate_almost_positive_roots(c);
    for (const auto& a : roots)
      for (const auto& b : roots) {
        const Int ab = classical_degree(c, a, b);
        CHECK((ab == 0) == (classical_degree(c, b, a) == 0));
        CHECK(ab == classical_degree(d, coroot(c, b), coroot(c, a)));
      }
  }
}

TEST_CASE("coroots") {
  const CartanData b2(CB2);
  CHECK(coroot(b2, {1, 0}) == Root{1, 0});
  CHECK(coroot(b2, {-1, 0}) == Root{-1, 0});
  CHECK(coroot(b2, {1, 1}) == Root{2, 1});
  CHECK(coroot(b2, {1, 2}) == Root{1, 1});
  std::set<Root> image, dual_roots;
  for (const auto& r : enumerate_almost_positive_roots(b2)) image.insert(coroot(b2, r));
  for (const auto& r : enumerate_almost_positive_roots(b2.dual())) dual_roots.insert(r);
  CHECK(image == dual_roots);
}

TEST_CASE("roots match d-vectors of B(C)") {
  for (const auto* m : {&CA2, &CB2, &CG2, &CA3}) {
    const CartanData c(*m);
    const ExchangeGraph g = explore(c.exchange_matrix());
    std::set<std::size_t> hit;
    const auto roots = enumerate_almost_positive_roots(c);
    for (const auto& r : roots) hit.insert(root_to_variable(g, r));
    CHECK(hit.size() == roots.size());
    CHECK(g.variables.size() == roots.size());
    for (std::size_t i = 0; i < c.rank(); ++i) CHECK(root_to_variable(g, c.simple(i, -1)) == i);
  }
  const ExchangeGraph g = explore(CartanData(CA2).exchange_matrix());
  CHECK_THROWS_AS(root_to_variable(g, {2, 2}), NotFound);
}
