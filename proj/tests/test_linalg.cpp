#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "tiltcell/linalg.hpp"

using namespace tiltcell;

namespace {

SparseRow sparse(const std::vector<Rational>& dense) {
  SparseRow row;
  for (int c = 0; c < static_cast<int>(dense.size()); ++c)
    if (dense[c] != 0) row.emplace_back(c, dense[c]);
  return row;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/5") == Rational(-2, 5));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("Echelon small example") {
  Echelon e(3);
  CHECK(e.insert(sparse({1, 2, 3})));
  CHECK(e.insert(sparse({0, 1, 1})));
  CHECK_FALSE(e.insert(sparse({1, 3, 4})));
  CHECK(e.rank() == 2);
  CHECK(e.is_pivot(0));
  CHECK(e.is_pivot(1));
  CHECK(e.free_columns() == std::vector<int>{2});
  // e0 = -2 e1 - 3 e2 + (row 0) and e1 = -e2 + (row 1): e0 reduces to e2.
  auto r = e.reduce({{0, Rational(1)}});
  REQUIRE(r.size() == 1);
  CHECK(r.at(2) == -1);
  CHECK_FALSE(e.insert({}));
}

TEST_CASE("Echelon rank matches dense elimination") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> size(1, 9);
  std::bernoulli_distribution sparse_entry(0.6);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = size(rng), cols = size(rng);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
      for (auto& x : row) x = sparse_entry(rng) ? 0 : entry(rng);
    // duplicate combinations make rank deficiency common
    if (rows > 2) {
      for (int c = 0; c < cols; ++c) m[rows - 1][c] = m[0][c] * 3 - m[1][c] / 2;
    }
    Echelon e(cols);
    for (const auto& row : m) e.insert(sparse(row));
    CHECK(e.rank() == dense_rank(m));
    CHECK(static_cast<int>(e.free_columns().size()) == cols - e.rank());
    // every row reduces to zero
    for (const auto& row : m) {
      std::map<int, Rational> v;
      for (auto& [c, x] : sparse(row)) v[c] = x;
      CHECK(e.reduce(v).empty());
    }
  }
}

TEST_CASE("dense_rank examples") {
  CHECK(dense_rank({}) == 0);
  CHECK(dense_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(dense_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(dense_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, Rational(1, 3)}}) == 3);
}
