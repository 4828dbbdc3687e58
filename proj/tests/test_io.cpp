#include <cstdio>
#include <fstream>

#include "cluster/error.hpp"
#include "cluster/io.hpp"
#include "doctest.h"

using namespace cluster;

TEST_CASE("matrix sources") {
  const IntMat expect{{0, 1}, {-1, 0}};
  CHECK(parse_matrix("0 1; -1 0") == expect);
  CHECK(parse_matrix("[[0,1],[-1,0]]") == expect);
  CHECK(parse_matrix(" 0 1 ;\n -1 0 ") == expect);
  const std::string path = "test_io_matrix.txt";
  {
    std::ofstream out(path);
    out << "0 1\n-1 0\n";
  }
  CHECK(parse_matrix(path) == expect);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_matrix("0 x; 1 0"), InvalidArgument);
  CHECK_THROWS_AS(parse_matrix("[[0,1],[1]]"), Error);
  CHECK_THROWS_AS(parse_matrix("[[0,1],"), InvalidArgument);
  CHECK_THROWS_AS(parse_matrix(""), InvalidArgument);
}

TEST_CASE("JSON round trips") {
  const IntMat m{{0, 2, -1}, {-2, 0, 1}, {1, -1, 0}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_to_json(m).dump() == "[[0,2,-1],[-2,0,1],[1,-1,0]]");
  const LaurentPoly p = LaurentPoly::parse("y1*y2 + 3*y1^-2 + 1", 2);
  CHECK(poly_from_json(poly_to_json(p), 2) == p);
  const auto j = poly_to_json(LaurentPoly::parse("y2 + 1", 2));
  CHECK(j.dump() == R"([{"coefficient":"1","exponents":[0,1]},{"coefficient":"1","exponents":[0,0]}])");
}

TEST_CASE("words and references") {
  CHECK(parse_word("2,1,2") == MutationWord{1, 0, 1});
  CHECK(parse_word("").empty());
  CHECK(word_to_string({1, 0}) == "2,1");
  CHECK_THROWS_AS(parse_word("0"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("1,a"), InvalidArgument);
  const VariableRef r = parse_ref("3,2,1:1");
  CHECK(r.word == MutationWord{2, 1, 0});
  CHECK(r.index == 0);
  CHECK(parse_ref(":2") == VariableRef{{}, 1});
  CHECK(to_string(r) == "3,2,1:1");
  CHECK_THROWS_AS(parse_ref("1,2"), InvalidArgument);
  CHECK(parse_int_list("1, -1") == IntVec{1, -1});
}

TEST_CASE("aligned table") { CHECK(format_matrix(IntMat{{1, -10}, {0, 2}}) == "  1 -10\n  0   2\n"); }
