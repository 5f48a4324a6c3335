#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <utility>

#include "tiltcell/cellbasis.hpp"

using namespace tiltcell;
using sl3::Elem;

namespace {

// (T_1(n) : Delta_1(m)) from the alcove picture: T_1(n) for n = kp + a has
// factors n and 2kp - 2 - n, special weights have only n.
bool r1_factor(Weight n, Weight m, std::int64_t p) {
  if (m == n) return true;
  if (mod_floor(n + 1, p) == 0) return false;
  return m == 2 * floor_div(n, p) * p - 2 - n;
}

// Bruhat order as inclusion of reduced subwords, listed by hand.
const std::set<std::pair<Elem, Elem>>& bruhat_pairs() {
  static const std::set<std::pair<Elem, Elem>> pairs = [] {
    std::set<std::pair<Elem, Elem>> out;
    for (Elem w : sl3::kElements) {
      out.insert({Elem::e, w});
      out.insert({w, w});
      out.insert({w, Elem::w0});
    }
    for (Elem x : {Elem::s, Elem::t})
      for (Elem y : {Elem::st, Elem::ts}) out.insert({x, y});
    return out;
  }();
  return pairs;
}

}  // namespace

TEST_CASE("cell_indices examples") {
  Context c31(3, 1);
  auto idx = cell_indices({{0, 1}}, {{0, 1}}, c31);
  REQUIRE(idx.size() == 2);
  CHECK(idx[0].cell_weight == 0);
  CHECK(idx[1].cell_weight == -2);
  CHECK(idx[0].i == 1);
  CHECK(idx[0].j == 1);
  CHECK(cell_indices({{2, 1}}, {{0, 1}}, c31).empty());

  // T_2(0) = {0, -2} and T_2(2p - 2) = {2p - 2, 0, -2, -2p} share two factors.
  Context c52(5, 2);
  auto two = cell_indices({{0, 1}}, {{8, 1}}, c52);
  REQUIRE(two.size() == 2);
  CHECK(two[0].cell_weight == 0);
  CHECK(two[1].cell_weight == -2);
}

TEST_CASE("cell_indices count and grouping") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Weight> weight(-20, 20);
  std::uniform_int_distribution<std::int64_t> mult(1, 2);
  Context ctx(3, 2);
  for (int trial = 0; trial < 100; ++trial) {
    TiltingMultiset P{{weight(rng), mult(rng)}, {weight(rng), mult(rng)}};
    TiltingMultiset Q{{weight(rng), mult(rng)}};
    auto idx = cell_indices(P, Q, ctx);
    CHECK(static_cast<std::int64_t>(idx.size()) == hom_dim_sum(P, Q, ctx));
    for (std::size_t k = 1; k < idx.size(); ++k) CHECK(idx[k - 1].cell_weight >= idx[k].cell_weight);
    for (const auto& c : idx) {
      CHECK(c.i >= 1);
      CHECK(c.i <= delta_multiplicity(P, c.cell_weight, ctx));
      CHECK(c.j <= delta_multiplicity(Q, c.cell_weight, ctx));
    }
    // dagger is an involution and maps onto the reversed Hom space.
    auto back = cell_indices(Q, P, ctx);
    std::set<CellIndex> reversed(back.begin(), back.end());
    CHECK(reversed.size() == idx.size());
    for (const auto& c : idx) {
      CHECK(dagger(dagger(c)) == c);
      CHECK(reversed.count(dagger(c)) == 1);
    }
  }
}

TEST_CASE("dagger") {
  CellIndex c{4, 1, 2, "P", "Q"};
  CHECK(dagger(c) == CellIndex{4, 2, 1, "Q", "P"});
  CellIndex diag{4, 1, 1, "P", "P"};
  CHECK(dagger(diag) == diag);
  CHECK(object_label({{0, 1}, {4, 2}}) == "T(0)+2T(4)");
}

TEST_CASE("generator_set_Br for p = 3, r = 1") {
  Context ctx(3, 1);
  std::set<std::pair<Weight, Weight>> got;
  for (const auto& g : generator_set_Br(ctx)) {
    CHECK(g.index == 1);
    got.insert({g.low, g.high});
  }
  std::set<std::pair<Weight, Weight>> expect{{0, 0}, {0, 4}, {1, 1}, {1, 3}, {2, 2}};
  CHECK(got == expect);
}

TEST_CASE("generator_set_Br against the alcove oracle") {
  for (std::int64_t p : {3, 5, 7}) {
    Context ctx(p, 1);
    std::set<std::pair<Weight, Weight>> expect, got;
    for (Weight m = 0; m < p; ++m)
      for (Weight n = m; n <= 2 * p - 2 - m; ++n)
        if (r1_factor(n, m, p)) expect.insert({m, n});
    for (const auto& g : generator_set_Br(ctx)) got.insert({g.low, g.high});
    CHECK(got == expect);
    // identities u(m, m) for every m, and the Steinberg weight only with itself
    for (Weight m = 0; m < p; ++m) CHECK(got.count({m, m}) == 1);
    for (const auto& [m, n] : got)
      if (m == p - 1) CHECK(n == p - 1);
  }
}

TEST_CASE("generator_set_Br0 is the principal filter") {
  for (std::int64_t p : {3, 5}) {
    for (int r : {1, 2}) {
      Context ctx(p, r);
      std::vector<GeneratorSymbol> filtered;
      for (const auto& g : generator_set_Br(ctx))
        if (in_principal_block(g.low, ctx) && in_principal_block(g.high, ctx)) filtered.push_back(g);
      CHECK(generator_set_Br0(ctx) == filtered);
      for (const auto& g : filtered) {
        CHECK(mod_floor(g.low + 1, ctx.p()) != 0);
        auto res = mod_floor(g.high, 2 * p);
        CHECK((res == 0 || res == 2 * p - 2));
      }
    }
  }
  auto b = generator_set_Br0(Context(3, 1));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == GeneratorSymbol{0, 0, 1});
  CHECK(b[1] == GeneratorSymbol{0, 4, 1});
}

TEST_CASE("sl3 delta table") {
  auto table = sl3::delta_table();
  CHECK(table.at(Elem::w0) == std::set<Elem>{Elem::w0});
  CHECK(table.at(Elem::s).size() == 4);
  CHECK(table.at(Elem::e).size() == 6);
  CHECK(table.at(Elem::st) == std::set<Elem>{Elem::st, Elem::w0});
  CHECK(sl3::hom_dim(Elem::s, Elem::t) == 3);
  for (Elem x : sl3::kElements)
    for (Elem y : sl3::kElements) CHECK(sl3::bruhat_leq(x, y) == (bruhat_pairs().count({x, y}) == 1));
}

TEST_CASE("sl3 total Hom dimension is 77") {
  std::int64_t total = 0;
  for (Elem x : sl3::kElements)
    for (Elem y : sl3::kElements) {
      std::int64_t common = 0;
      for (Elem w : sl3::kElements)
        if (bruhat_pairs().count({x, w}) && bruhat_pairs().count({y, w})) ++common;
      CHECK(sl3::hom_dim(x, y) == common);
      total += sl3::hom_dim(x, y);
    }
  CHECK(total == 77);
}

TEST_CASE("sl3 B'") {
  auto b = sl3::generator_set_Bprime();
  REQUIRE(b.size() == 8);
  CHECK(b[0] == std::pair{Elem::w0, Elem::st});
  CHECK(b[1] == std::pair{Elem::w0, Elem::ts});
  for (auto [x, y] : b) {
    CHECK(sl3::bruhat_leq(y, x));
    CHECK(sl3::length(x) == sl3::length(y) + 1);
  }
  for (Elem w : sl3::kElements) CHECK(sl3::parse(sl3::name(w)) == w);
  CHECK_FALSE(sl3::parse("u").has_value());
}
