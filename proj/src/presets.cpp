// Copyright 2026 The tiltcell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The three presentations: zigzag (P_1), ladder (P_2) and the sl3 block.

#include <algorithm>
#include <initializer_list>

#include "tiltcell/cellbasis.hpp"
#include "tiltcell/deltafilt.hpp"
#include "tiltcell/quiver.hpp"

namespace tiltcell {

namespace {

struct Term {
  Rational coeff;
  std::vector<std::string> word;
};

// Adds sum coeff * word = 0. Skipped if some arrow lies outside the window.
// The lead is the largest term unless given.
void add_relation(const Quiver& q, RelationSet& rels, std::string label,
                  std::initializer_list<Term> terms, int explicit_lead = -1) {
  PathElement expr;
  std::vector<Path> paths;
  for (const Term& t : terms) {
    auto p = word_path(q, t.word);
    if (!p) return;
    paths.push_back(*p);
  }
  for (std::size_t i = 1; i < paths.size(); ++i)
    if (paths[i].source != paths[0].source || paths[i].target != paths[0].target)
      throw std::logic_error("relation " + label + " is not homogeneous");
  std::size_t i = 0;
  for (const Term& t : terms) add_to(expr, paths[i++], t.coeff);
  if (expr.empty()) return;
  Path lead = explicit_lead >= 0 ? paths.at(explicit_lead) : expr.rbegin()->first;
  if (!expr.count(lead)) throw std::logic_error("relation " + label + " cancels its lead");
  rels.relations.push_back({std::move(label), std::move(expr), std::move(lead)});
}

Scalars merge_scalars(Scalars defaults, const Scalars& overrides, const std::set<std::string>& nonzero) {
  for (const auto& [name, value] : overrides) {
    if (!defaults.count(name)) {
      std::string known;
      for (const auto& [k, v] : defaults) known += (known.empty() ? "" : ", ") + k;
      throw ScalarConfigError("unknown scalar '" + name + "' (known: " + known + ")");
    }
    defaults[name] = value;
  }
  for (const auto& name : nonzero)
    if (defaults.at(name) == 0) throw ScalarConfigError("scalar " + name + " must be nonzero");
  return defaults;
}

std::string idx(const char* stem, std::int64_t j) { return std::string(stem) + "_" + std::to_string(j); }

// Marks endpoints of cut-off pattern arrows as boundary.
template <class Target>
void mark_cut_arrows(Quiver& q, std::int64_t lo, std::int64_t hi, std::int64_t pad, Target&& target) {
  for (std::int64_t j = lo - pad; j <= hi + pad; ++j) {
    for (const auto& t : target(j)) {
      const bool in_source = j >= lo && j <= hi;
      const bool in_target = t >= lo && t <= hi;
      if (in_source != in_target) q.mark_boundary(*q.vertex_by_index(in_source ? j : t));
    }
  }
}

}  // namespace

Presentation build_p1_quiver(std::int64_t p, int window) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (window < 2) throw std::invalid_argument("window must be at least 2");
  Presentation out{Quiver("P1(0) p=" + std::to_string(p)), {}, 3};
  Quiver& q = out.quiver;
  const std::int64_t lo = -2 * window, hi = 2 * window + 1;
  // V_2m = P_m, V_2m+1 = Q_m.
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t m = floor_div(n, 2);
    const bool even = mod_floor(n, 2) == 0;
    q.add_vertex((even ? "P" : "Q") + std::to_string(m), n, even ? p * n : p * (n + 1) - 2);
  }
  for (std::int64_t n = lo; n < hi; ++n) {
    q.add_arrow(idx("u", n), n - lo, n + 1 - lo, ArrowKind::U);
    q.add_arrow(idx("d", n), n + 1 - lo, n - lo, ArrowKind::D);
  }
  q.mark_boundary(0);
  q.mark_boundary(static_cast<int>(hi - lo));
  q.set_shift_period(2);
  q.finalize();

  auto& rels = out.relations;
  for (std::int64_t n = lo; n < hi; ++n) {
    add_relation(q, rels, "uu" + std::to_string(n), {{1, {idx("u", n + 1), idx("u", n)}}});
    add_relation(q, rels, "dd" + std::to_string(n), {{1, {idx("d", n), idx("d", n + 1)}}});
    add_relation(q, rels, "loop" + std::to_string(n + 1),
                 {{1, {idx("d", n + 1), idx("u", n + 1)}}, {-1, {idx("u", n), idx("d", n)}}});
  }
  return out;
}

Presentation build_p2_quiver(std::int64_t p, int window, const Scalars& overrides,
                             bool complete) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  std::set<std::string> nonzero{"c5a", "c5b", "c5c", "c5d", "c6a", "c6b", "c6c", "c6d"};
  if (complete) nonzero.insert({"c0a", "c0b"});
  Scalars defaults;
  for (const auto& name : nonzero) defaults[name] = 1;
  const Scalars c = merge_scalars(defaults, overrides, nonzero);

  const std::int64_t P = 2 * p;
  Presentation out{Quiver("P2(0) p=" + std::to_string(p)), {}, 5};
  Quiver& q = out.quiver;
  out.relations.scalars = c;
  out.relations.nonzero = nonzero;
  const std::int64_t lo = -P * window, hi = P * (window + 1) - 1;
  for (std::int64_t j = lo; j <= hi; ++j)
    q.add_vertex("P" + std::to_string(j), j, mod_floor(j, 2) == 0 ? j * p : (j + 1) * p - 2);

  auto has_u = [&](std::int64_t j) {
    const std::int64_t r = mod_floor(j, P);
    return r != P - 1 && r != p - 1;
  };
  auto has_uprime = [&](std::int64_t j) { return mod_floor(j, p) != 0; };
  auto uprime_target = [&](std::int64_t j) { return P * -floor_div(-j, p) - j; };
  auto in = [&](std::int64_t j) { return j >= lo && j <= hi; };

  for (std::int64_t j = lo; j <= hi; ++j) {
    if (has_u(j) && in(j + 1)) {
      q.add_arrow(idx("u", j), j - lo, j + 1 - lo, ArrowKind::U);
      q.add_arrow(idx("d", j), j + 1 - lo, j - lo, ArrowKind::D);
    }
    if (has_uprime(j) && in(uprime_target(j))) {
      q.add_arrow(idx("u'", j), j - lo, uprime_target(j) - lo, ArrowKind::UPrime);
      q.add_arrow(idx("d'", j), uprime_target(j) - lo, j - lo, ArrowKind::DPrime);
    }
  }
  mark_cut_arrows(q, lo, hi, 2 * P, [&](std::int64_t j) {
    std::vector<std::int64_t> targets;
    if (has_u(j)) targets.push_back(j + 1);
    if (has_uprime(j)) targets.push_back(uprime_target(j));
    return targets;
  });
  q.set_shift_period(P);
  q.finalize();

  auto& rels = out.relations;
  for (std::int64_t k = -window - 2; k <= window + 2; ++k) {
    const std::int64_t s = k * P;
    auto u = [&](std::int64_t j) { return idx("u", j + s); };
    auto d = [&](std::int64_t j) { return idx("d", j + s); };
    auto up = [&](std::int64_t j) { return idx("u'", j + s); };
    auto dp = [&](std::int64_t j) { return idx("d'", j + s); };
    auto tag = [&](const char* name, std::int64_t i) {
      return std::string(name) + "[i=" + std::to_string(i) + ",shift=" + std::to_string(s) + "]";
    };
    for (std::int64_t i = 1; i <= p - 2; ++i) {
      add_relation(q, rels, tag("1a", i), {{1, {u(i), u(i - 1)}}});
      add_relation(q, rels, tag("1b", i), {{1, {u(-i - 1), u(-i - 2)}}});
      add_relation(q, rels, tag("1c", i), {{1, {d(i - 1), d(i)}}});
      add_relation(q, rels, tag("1d", i), {{1, {d(-i - 2), d(-i - 1)}}});
      add_relation(q, rels, tag("3a", i), {{1, {d(i), u(i)}}, {-1, {u(i - 1), d(i - 1)}}});
      add_relation(q, rels, tag("3b", i),
                   {{1, {d(-i - 1), u(-i - 1)}}, {-1, {u(-i - 2), d(-i - 2)}}});
      add_relation(q, rels, tag("5a", i),
                   {{1, {d(P - i - 1), up(i)}}, {-c.at("c5a"), {up(i + 1), u(i)}}});
      add_relation(q, rels, tag("5b", i),
                   {{1, {dp(i), u(P - i - 1)}}, {-c.at("c5b"), {d(i), dp(i + 1)}}});
      add_relation(q, rels, tag("5c", i),
                   {{1, {d(i), up(-i - 1)}}, {-c.at("c5c"), {up(-i), u(-i - 1)}}});
      add_relation(q, rels, tag("5d", i),
                   {{1, {dp(-i - 1), u(i)}}, {-c.at("c5d"), {d(-i - 1), dp(-i)}}});
      add_relation(q, rels, tag("6a", i),
                   {{1, {u(P - i - 1), up(i + 1)}}, {-c.at("c6a"), {up(i), d(i)}}});
      add_relation(q, rels, tag("6b", i),
                   {{1, {dp(i + 1), d(P - i - 1)}}, {-c.at("c6b"), {u(i), dp(i)}}});
      add_relation(q, rels, tag("6c", i),
                   {{1, {u(i), up(-i)}}, {-c.at("c6c"), {up(-i - 1), d(-i - 1)}}});
      add_relation(q, rels, tag("6d", i),
                   {{1, {dp(-i), d(i)}}, {-c.at("c6d"), {u(-i - 1), dp(-i - 1)}}});
    }
    if (complete) {
      add_relation(q, rels, tag("0a", 0),
                   {{1, {d(0), u(0)}}, {-c.at("c0a"), {d(0), up(-1), dp(-1), u(0)}}});
      add_relation(q, rels, tag("0b", p - 1),
                   {{1, {d(p), u(p)}}, {-c.at("c0b"), {d(p), up(p - 1), dp(p - 1), u(p)}}});
    }
    for (std::int64_t i = 1; i <= p - 1; ++i) {
      add_relation(q, rels, tag("2a", i), {{1, {up(i), up(-i)}}});
      add_relation(q, rels, tag("2b", i), {{1, {dp(-i), dp(i)}}});
      add_relation(q, rels, tag("2c", i), {{1, {up(P - i), up(i)}}});
      add_relation(q, rels, tag("2d", i), {{1, {dp(i), dp(P - i)}}});
      add_relation(q, rels, tag("4a", i), {{1, {dp(i), up(i)}}, {-1, {up(-i), dp(-i)}}});
      add_relation(q, rels, tag("4b", i), {{1, {up(i), dp(i)}}, {-1, {dp(P - i), up(P - i)}}});
    }
  }
  return out;
}

Presentation build_sl3_quiver(const Rational& a, const Rational& b, const Rational& r) {
  return build_sl3_quiver(Scalars{{"a", a}, {"b", b}, {"r", r}});
}

Presentation build_sl3_quiver(const Scalars& overrides) {
  const Scalars c = merge_scalars({{"a", 1}, {"b", 1}, {"r", 0}}, overrides, {"a", "b"});
  Presentation out{Quiver("sl3 O(0)"), {}, 7};
  Quiver& q = out.quiver;
  out.relations.scalars = c;
  out.relations.nonzero = {"a", "b"};
  std::map<sl3::Elem, int> v;
  std::int64_t position = 0;
  for (sl3::Elem w : sl3::kElements)
    v[w] = q.add_vertex(sl3::name(w), position++, 3 - sl3::length(w));

  using sl3::Elem;
  const std::vector<std::pair<Elem, Elem>> ups = {
      {Elem::w0, Elem::st}, {Elem::w0, Elem::ts}, {Elem::st, Elem::s}, {Elem::st, Elem::t},
      {Elem::ts, Elem::s},  {Elem::ts, Elem::t},  {Elem::s, Elem::e},  {Elem::t, Elem::e}};
  for (std::size_t i = 0; i < ups.size(); ++i) {
    q.add_arrow("u" + std::to_string(i + 1), v[ups[i].first], v[ups[i].second], ArrowKind::U);
    q.add_arrow("d" + std::to_string(i + 1), v[ups[i].second], v[ups[i].first], ArrowKind::D);
  }
  q.finalize();

  const Rational& A = c.at("a");
  const Rational& B = c.at("b");
  const Rational& R = c.at("r");
  auto& rels = out.relations;
  add_relation(q, rels, "1.1", {{1, {"u3", "u1"}}, {-1, {"u5", "u2"}}});
  add_relation(q, rels, "1.2", {{1, {"u4", "u1"}}, {-1, {"u6", "u2"}}});
  add_relation(q, rels, "1.3", {{1, {"u7", "u3"}}, {-1, {"u8", "u4"}}});
  add_relation(q, rels, "1.4", {{1, {"u8", "u6"}}, {-1, {"u7", "u5"}}});
  add_relation(q, rels, "2.1", {{1, {"d1", "d3"}}, {-1, {"d2", "d5"}}});
  add_relation(q, rels, "2.2", {{1, {"d1", "d4"}}, {-1, {"d2", "d6"}}});
  add_relation(q, rels, "2.3", {{1, {"d3", "d7"}}, {-1, {"d4", "d8"}}});
  add_relation(q, rels, "2.4", {{1, {"d6", "d8"}}, {-1, {"d5", "d7"}}});
  add_relation(q, rels, "3.1", {{1, {"d1", "u1"}}});
  add_relation(q, rels, "3.2", {{1, {"d2", "u2"}}});
  add_relation(q, rels, "3.3", {{1, {"d4", "u4"}}});
  add_relation(q, rels, "3.4", {{1, {"d5", "u5"}}});
  add_relation(q, rels, "4.1", {{1, {"d3", "u3"}}, {-A, {"u1", "d1"}}});
  add_relation(q, rels, "4.2", {{1, {"d6", "u6"}}, {-A, {"u2", "d2"}}});
  add_relation(q, rels, "4.3", {{1, {"d6", "u4"}}, {A, {"u2", "d1"}}});
  add_relation(q, rels, "4.4", {{1, {"d3", "u5"}}, {A, {"u1", "d2"}}});
  add_relation(q, rels, "4.5", {{1, {"d4", "u6"}}, {A, {"u1", "d2"}}});
  add_relation(q, rels, "4.6", {{1, {"d5", "u3"}}, {A, {"u2", "d1"}}});
  add_relation(q, rels, "5.1", {{1, {"d7", "u7"}}, {-B, {"u5", "d5"}}});
  add_relation(q, rels, "5.2", {{1, {"d8", "u8"}}, {-B, {"u4", "d4"}}});
  add_relation(q, rels, "5.3",
               {{1, {"d8", "u7"}}, {-B, {"u4", "d3"}}, {-B, {"u6", "d5"}},
                {-R, {"u6", "u2", "d1", "d3"}}},
               0);
  add_relation(q, rels, "5.4",
               {{1, {"d7", "u8"}}, {-B, {"u3", "d4"}}, {-B, {"u5", "d6"}},
                {-R, {"u3", "u1", "d2", "d6"}}},
               0);
  return out;
}

HomOracle cellular_oracle(const Quiver& q, const std::string& preset, std::int64_t p) {
  if (preset == "sl3") {
    return [&q](int x, int y) {
      return sl3::hom_dim(*sl3::parse(q.vertices()[x].label), *sl3::parse(q.vertices()[y].label));
    };
  }
  int r = 0;
  if (preset == "p1") r = 1;
  else if (preset == "p2") r = 2;
  else throw std::invalid_argument("unknown preset '" + preset + "'");
  const Context ctx(p, r);
  return [&q, ctx](int x, int y) {
    return hom_dim(q.vertices()[x].level, q.vertices()[y].level, ctx);
  };
}

LayerOracle cellular_layer_oracle(const Quiver& q, const std::string& preset, std::int64_t p) {
  if (preset == "sl3") {
    return [&q](int x, int y, std::int64_t level) {
      const sl3::Elem ex = *sl3::parse(q.vertices()[x].label);
      const sl3::Elem ey = *sl3::parse(q.vertices()[y].label);
      std::int64_t total = 0;
      for (sl3::Elem w : sl3::kElements)
        if (3 - sl3::length(w) == level && sl3::bruhat_leq(ex, w) && sl3::bruhat_leq(ey, w)) ++total;
      return total;
    };
  }
  int r = 0;
  if (preset == "p1") r = 1;
  else if (preset == "p2") r = 2;
  else throw std::invalid_argument("unknown preset '" + preset + "'");
  const Context ctx(p, r);
  return [&q, ctx](int x, int y, std::int64_t level) {
    return delta_factors(q.vertices()[x].level, ctx)[level] *
           delta_factors(q.vertices()[y].level, ctx)[level];
  };
}

}  // namespace tiltcell
