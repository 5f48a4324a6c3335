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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tiltcell/weights.hpp"

namespace tiltcell {

/// An element sum_mu c_mu e^mu of Z[X]. Zero coefficients are never stored,
/// so structural equality is equality in the ring.
class Character {
 public:
  Character() = default;
  static Character monomial(Weight mu, std::int64_t coeff = 1);

  std::int64_t coeff(Weight mu) const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Weight, std::int64_t>& terms() const { return coeffs_; }
  /// Largest weight with a nonzero coefficient.
  std::optional<Weight> top() const;
  /// Sum of coefficients (the dimension, for a module character).
  std::int64_t mass() const;

  void add_term(Weight mu, std::int64_t coeff);
  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  Character scaled(std::int64_t factor) const;
  Character shifted(Weight by) const;
  /// Frobenius twist: e^mu -> e^{factor * mu}.
  Character dilated(std::int64_t factor) const;

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

  /// Sorted [weight, coefficient] pairs.
  std::vector<std::pair<Weight, std::int64_t>> pairs() const;

 private:
  std::map<Weight, std::int64_t> coeffs_;
};

class NotAModuleCharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// chi(m); for m < -1 the reflection rule chi(-m-2) = -chi(m) applies.
Character weyl_char(std::int64_t m);

/// Character of the simple G-module L(lambda), lambda >= 0, as the product of
/// Frobenius-twisted Weyl characters of the base-p digits of lambda.
Character simple_char(Weight lambda, std::int64_t p);

/// Character of L_r(lambda) = L(head) shifted by p^r * tail.
Character simple_char_r(Weight lambda, const Context& ctx);

/// chi(p^r - 1) e^{lambda - (p^r - 1)}.
Character baby_verma_char(Weight lambda, const Context& ctx);

/// Multiplicities of the simple G_rT-characters in f, by peeling off the
/// simple character at the largest remaining weight. Throws
/// NotAModuleCharacter when a negative multiplicity would be needed.
std::map<Weight, std::int64_t> decompose_into_simples(const Character& f, const Context& ctx);

}  // namespace tiltcell
