#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "tiltcell/charring.hpp"

using namespace tiltcell;

namespace {

Character from(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
  Character c;
  for (auto [w, k] : terms) c.add_term(w, k);
  return c;
}

// Dimension of each weight space of a p-restricted tensor product, by
// direct digit expansion: weights of L(lambda) are sums of +-d_i p^i choices
// stepped by 2.
Character simple_oracle(Weight lambda, std::int64_t p) {
  Character acc = Character::monomial(0);
  std::int64_t scale = 1;
  for (Weight rest = lambda; rest > 0; rest /= p, scale *= p) {
    std::int64_t d = rest % p;
    Character digit;
    for (std::int64_t j = 0; j <= d; ++j) digit.add_term((d - 2 * j) * scale, 1);
    acc = acc * digit;
  }
  return acc;
}

}  // namespace

TEST_CASE("weyl_char examples") {
  CHECK(weyl_char(1) == from({{1, 1}, {-1, 1}}));
  CHECK(weyl_char(-1).is_zero());
  CHECK(weyl_char(-4) == from({{2, -1}, {0, -1}, {-2, -1}}));
  CHECK(weyl_char(0) == Character::monomial(0));
}

TEST_CASE("weyl_char reflection identity") {
  for (std::int64_t m = -50; m <= 50; ++m) CHECK(weyl_char(-m - 2) == weyl_char(m).scaled(-1));
  for (std::int64_t m = 0; m <= 20; ++m) CHECK(weyl_char(m).mass() == m + 1);
}

TEST_CASE("ring arithmetic") {
  Character a = from({{1, 2}, {0, -1}});
  Character b = from({{1, -2}, {3, 1}});
  CHECK(a + b == from({{0, -1}, {3, 1}}));
  CHECK((a - a).is_zero());
  CHECK(a.shifted(2) == from({{3, 2}, {2, -1}}));
  CHECK(a.dilated(3) == from({{3, 2}, {0, -1}}));
  CHECK(weyl_char(1) * weyl_char(1) == weyl_char(2) + weyl_char(0));
  CHECK(a.top() == 1);
  CHECK_FALSE(Character().top().has_value());
}

TEST_CASE("simple_char examples") {
  for (std::int64_t p : {3, 5, 7}) {
    CHECK(simple_char(p - 1, p) == weyl_char(p - 1));
    CHECK(simple_char(p, p) == from({{p, 1}, {-p, 1}}));
    CHECK(simple_char(0, p) == Character::monomial(0));
  }
  CHECK_THROWS(simple_char(-1, 3));
}

TEST_CASE("simple_char matches the digit oracle and is self-dual") {
  for (std::int64_t p : {3, 5}) {
    for (Weight l = 0; l <= 3 * p * p; ++l) {
      Character c = simple_char(l, p);
      CHECK(c == simple_oracle(l, p));
      CHECK(c.top() == l);
      CHECK(c.coeff(l) == 1);
      for (auto [w, k] : c.terms()) CHECK(c.coeff(-w) == k);
    }
  }
}

TEST_CASE("simple_char_r") {
  Context c31(3, 1);
  CHECK(simple_char_r(-2, c31) == from({{-2, 1}, {-4, 1}}));
  CHECK(simple_char_r(0, c31) == Character::monomial(0));
  Context c52(5, 2);
  CHECK(simple_char_r(24, c52) == weyl_char(24));
  CHECK(simple_char_r(24 + 25 * 3, c52) == weyl_char(24).shifted(75));
}

TEST_CASE("baby_verma_char") {
  Context c31(3, 1);
  CHECK(baby_verma_char(0, c31) == from({{0, 1}, {-2, 1}, {-4, 1}}));
  for (std::int64_t p : {3, 5}) {
    for (int r : {1, 2}) {
      Context ctx(p, r);
      CHECK(baby_verma_char(ctx.q() - 1, ctx) == weyl_char(ctx.q() - 1));
      for (Weight l = -2 * ctx.q(); l <= 2 * ctx.q(); ++l) {
        CHECK(baby_verma_char(l, ctx).mass() == ctx.q());
        CHECK(baby_verma_char(l, ctx).top() == l);
      }
    }
  }
}

TEST_CASE("decompose_into_simples examples") {
  Context c31(3, 1);
  CHECK(decompose_into_simples(baby_verma_char(0, c31), c31) ==
        std::map<Weight, std::int64_t>{{-2, 1}, {0, 1}});
  CHECK(decompose_into_simples(simple_char_r(7, c31), c31) == std::map<Weight, std::int64_t>{{7, 1}});
  CHECK_THROWS_AS(decompose_into_simples(from({{1, 1}, {0, -1}}), c31), NotAModuleCharacter);
  CHECK_THROWS_AS(decompose_into_simples(from({{1, -1}}), c31), NotAModuleCharacter);
}

TEST_CASE("baby Vermas decompose with their head once") {
  for (std::int64_t p : {3, 5}) {
    for (int r : {1, 2}) {
      Context ctx(p, r);
      for (Weight l = -2 * ctx.q(); l <= 2 * ctx.q(); ++l) {
        auto m = decompose_into_simples(baby_verma_char(l, ctx), ctx);
        CHECK(m.at(l) == 1);
        for (auto [w, k] : m) {
          CHECK(k > 0);
          CHECK(w <= l);
        }
      }
    }
  }
}

TEST_CASE("decomposition round trip") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<Weight> weight(-30, 30);
  std::uniform_int_distribution<std::int64_t> mult(1, 3);
  for (std::int64_t p : {3, 5}) {
    Context ctx(p, 2);
    for (int trial = 0; trial < 200; ++trial) {
      std::map<Weight, std::int64_t> m;
      for (int k = 0; k < 4; ++k) m[weight(rng)] += mult(rng);
      Character f;
      for (auto [w, k] : m) f += simple_char_r(w, ctx).scaled(k);
      CHECK(decompose_into_simples(f, ctx) == m);
    }
  }
}
