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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tiltcell/deltafilt.hpp"
#include "tiltcell/weights.hpp"

namespace tiltcell {

/// Names the cellular basis element c^nu_{ij} between two tilting objects.
/// i runs over K(source, nu) and j over K(target, nu).
struct CellIndex {
  Weight cell_weight;
  std::int64_t i;
  std::int64_t j;
  std::string source;
  std::string target;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// "T(0)+2T(4)": a stable label for a direct sum of indecomposable tiltings.
std::string object_label(const TiltingMultiset& obj);

/// One index per (nu, i, j), nu decreasing, then i, then j. The list has
/// hom_dim_sum(P, Q) entries.
std::vector<CellIndex> cell_indices(const TiltingMultiset& P, const TiltingMultiset& Q,
                                    const Context& ctx);

/// Swaps (i, j) and (source, target).
CellIndex dagger(const CellIndex& c);

/// The symbol g^low_index(T_r(high)): Delta_r(low) mapped into T_r(high).
struct GeneratorSymbol {
  Weight low;
  Weight high;
  std::int64_t index = 1;
  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

/// u_r(m, n) for 0 <= m < p^r, m <= n <= 2p^r - 2 - m, one symbol per
/// Delta_r(m)-factor of T_r(n). Sorted by (low, high, index).
std::vector<GeneratorSymbol> generator_set_Br(const Context& ctx);

/// generator_set_Br restricted to m, n congruent to 0 or -2 mod 2p.
std::vector<GeneratorSymbol> generator_set_Br0(const Context& ctx);

bool in_principal_block(Weight w, const Context& ctx);

// The sl3 principal block of category O. Bruhat order has 1 at the bottom
// and w0 at the top; T(w0) is the simple Verma module.
namespace sl3 {

enum class Elem { e, s, t, st, ts, w0 };

inline constexpr std::array<Elem, 6> kElements{Elem::e, Elem::s, Elem::t,
                                               Elem::st, Elem::ts, Elem::w0};

std::string name(Elem w);
std::optional<Elem> parse(const std::string& name);
int length(Elem w);
/// x <= y in the Bruhat order.
bool bruhat_leq(Elem x, Elem y);

/// T(y) -> {x : x >= y}, every factor with multiplicity one.
std::map<Elem, std::set<Elem>> delta_table();

/// Number of common Delta-factors of T(x) and T(y).
std::int64_t hom_dim(Elem x, Elem y);

/// The pairs (x, y) with g^x(y) in B'(0), in the order u1 ... u8:
/// (w0,st) (w0,ts) (st,s) (st,t) (ts,s) (ts,t) (s,1) (t,1).
std::vector<std::pair<Elem, Elem>> generator_set_Bprime();

}  // namespace sl3

}  // namespace tiltcell
