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

#include "tiltcell/cellbasis.hpp"

#include <algorithm>
#include <functional>

namespace tiltcell {

std::string object_label(const TiltingMultiset& obj) {
  std::string out;
  for (const auto& [lambda, count] : obj) {
    if (count == 0) continue;
    if (!out.empty()) out += '+';
    if (count != 1) out += std::to_string(count);
    out += "T(" + std::to_string(lambda) + ")";
  }
  return out.empty() ? "0" : out;
}

std::vector<CellIndex> cell_indices(const TiltingMultiset& P, const TiltingMultiset& Q,
                                    const Context& ctx) {
  std::map<Weight, std::int64_t, std::greater<>> source_mult, target_mult;
  for (const auto& [lambda, count] : P) {
    const DeltaFactors d = delta_factors(lambda, ctx);
    for (const auto& [nu, m] : d.mults()) source_mult[nu] += count * m;
  }
  for (const auto& [lambda, count] : Q) {
    const DeltaFactors d = delta_factors(lambda, ctx);
    for (const auto& [nu, m] : d.mults()) target_mult[nu] += count * m;
  }

  const std::string source = object_label(P);
  const std::string target = object_label(Q);
  std::vector<CellIndex> out;
  for (const auto& [nu, ks] : source_mult) {
    auto it = target_mult.find(nu);
    if (it == target_mult.end()) continue;
    for (std::int64_t i = 1; i <= ks; ++i)
      for (std::int64_t j = 1; j <= it->second; ++j) out.push_back({nu, i, j, source, target});
  }
  return out;
}

CellIndex dagger(const CellIndex& c) { return {c.cell_weight, c.j, c.i, c.target, c.source}; }

std::vector<GeneratorSymbol> generator_set_Br(const Context& ctx) {
  const std::int64_t q = ctx.q();
  std::vector<GeneratorSymbol> out;
  for (Weight m = 0; m < q; ++m)
    for (Weight n = m; n <= 2 * q - 2 - m; ++n) {
      const std::int64_t mult = delta_factors(n, ctx)[m];
      for (std::int64_t i = 1; i <= mult; ++i) out.push_back({m, n, i});
    }
  return out;
}

bool in_principal_block(Weight w, const Context& ctx) {
  const std::int64_t r = mod_floor(w, 2 * ctx.p());
  return r == 0 || r == 2 * ctx.p() - 2;
}

std::vector<GeneratorSymbol> generator_set_Br0(const Context& ctx) {
  std::vector<GeneratorSymbol> out;
  for (const auto& g : generator_set_Br(ctx))
    if (in_principal_block(g.low, ctx) && in_principal_block(g.high, ctx)) out.push_back(g);
  return out;
}

namespace sl3 {

std::string name(Elem w) {
  switch (w) {
    case Elem::e: return "1";
    case Elem::s: return "s";
    case Elem::t: return "t";
    case Elem::st: return "st";
    case Elem::ts: return "ts";
    case Elem::w0: return "w0";
  }
  return "?";
}

std::optional<Elem> parse(const std::string& text) {
  for (Elem w : kElements)
    if (name(w) == text) return w;
  return std::nullopt;
}

int length(Elem w) {
  switch (w) {
    case Elem::e: return 0;
    case Elem::s:
    case Elem::t: return 1;
    case Elem::st:
    case Elem::ts: return 2;
    case Elem::w0: return 3;
  }
  return -1;
}

bool bruhat_leq(Elem x, Elem y) {
  // In A2 every element of smaller length lies below every element of
  // larger length; equal lengths are comparable only when equal.
  if (x == y) return true;
  return length(x) < length(y);
}

std::map<Elem, std::set<Elem>> delta_table() {
  std::map<Elem, std::set<Elem>> out;
  for (Elem y : kElements)
    for (Elem x : kElements)
      if (bruhat_leq(y, x)) out[y].insert(x);
  return out;
}

std::int64_t hom_dim(Elem x, Elem y) {
  std::int64_t total = 0;
  for (Elem w : kElements)
    if (bruhat_leq(x, w) && bruhat_leq(y, w)) ++total;
  return total;
}

std::vector<std::pair<Elem, Elem>> generator_set_Bprime() {
  return {{Elem::w0, Elem::st}, {Elem::w0, Elem::ts}, {Elem::st, Elem::s}, {Elem::st, Elem::t},
          {Elem::ts, Elem::s},  {Elem::ts, Elem::t},  {Elem::s, Elem::e},  {Elem::t, Elem::e}};
}

}  // namespace sl3

}  // namespace tiltcell
