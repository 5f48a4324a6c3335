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
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltcell {

/// SL2 weights are integers: rho = 1, the positive root is 2 and the
/// dominant cone is the non-negative integers.
using Weight = std::int64_t;

class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Characteristic p (an odd prime) and Frobenius level r >= 1.
///
/// Weights are not tied to a context; the same integer is interpreted
/// relative to whichever (p, r) is passed alongside it.
class Context {
 public:
  /// Throws ContextError unless p is an odd prime and r >= 1.
  Context(std::int64_t p, int r);

  std::int64_t p() const { return p_; }
  int r() const { return r_; }
  /// p^r
  std::int64_t q() const { return q_; }

  /// Same prime, level r - 1. Requires r > 1.
  Context lower() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::int64_t p_;
  int r_;
  std::int64_t q_;
};

bool is_prime(std::int64_t n);

/// Floor division and non-negative remainder.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

struct PadicSplit {
  Weight head;  // in [0, p^r)
  Weight tail;
  friend bool operator==(const PadicSplit&, const PadicSplit&) = default;
};

PadicSplit padic_split(Weight lambda, const Context& ctx);

/// 2(p^r - 1) - head + p^r * tail: the highest weight of the projective
/// cover of L_r(lambda). A bijection of Z fixing -1 + p^r Z; not an
/// involution, since tilde(lambda) >= lambda.
Weight tilde(Weight lambda, const Context& ctx);

enum class AlcoveKind { Special, Wall, Regular };

struct AlcoveClass {
  AlcoveKind kind;
  std::int64_t alcove = 0;  // n with weight = n p - 1 (Wall) or n p + a (Regular)
  std::int64_t offset = 0;  // a in [0, p - 2], Regular only
  friend bool operator==(const AlcoveClass&, const AlcoveClass&) = default;
};

AlcoveClass classify(Weight lambda, const Context& ctx);
std::string to_string(AlcoveKind kind);

/// Dot action of the affine reflection in the wall n p - 1.
Weight dot_reflect(Weight lambda, std::int64_t wall, const Context& ctx);

/// W_p . lambda intersected with [lo, hi], sorted ascending.
std::vector<Weight> dot_orbit(Weight lambda, Weight lo, Weight hi, const Context& ctx);

/// Membership test for W_p . lambda.
bool same_dot_orbit(Weight mu, Weight lambda, const Context& ctx);

/// True iff mu reaches lambda through a chain of weight-increasing affine
/// dot reflections. Breadth-first search over up-reflections bounded by lambda.
bool strongly_linked(Weight mu, Weight lambda, const Context& ctx);

}  // namespace tiltcell
