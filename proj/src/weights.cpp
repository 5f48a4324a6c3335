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

#include "tiltcell/weights.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace tiltcell {

namespace {
// Keeps p^r and the weight windows built from it far away from overflow.
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 40;
}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Context::Context(std::int64_t p, int r) : p_(p), r_(r), q_(1) {
  if (!is_prime(p)) throw ContextError("p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw ContextError("p = 2 is excluded; p must be an odd prime");
  if (r < 1) throw ContextError("r = " + std::to_string(r) + " must be at least 1");
  for (int i = 0; i < r; ++i) {
    if (q_ > kMaxModulus / p) throw ContextError("p^r is too large");
    q_ *= p;
  }
}

Context Context::lower() const {
  if (r_ <= 1) throw ContextError("no level below r = 1");
  return Context(p_, r_ - 1);
}

PadicSplit padic_split(Weight lambda, const Context& ctx) {
  return {mod_floor(lambda, ctx.q()), floor_div(lambda, ctx.q())};
}

Weight tilde(Weight lambda, const Context& ctx) {
  const auto [head, tail] = padic_split(lambda, ctx);
  return 2 * (ctx.q() - 1) - head + ctx.q() * tail;
}

AlcoveClass classify(Weight lambda, const Context& ctx) {
  if (mod_floor(lambda + 1, ctx.q()) == 0) return {AlcoveKind::Special, 0, 0};
  const std::int64_t p = ctx.p();
  if (mod_floor(lambda + 1, p) == 0) return {AlcoveKind::Wall, (lambda + 1) / p, 0};
  return {AlcoveKind::Regular, floor_div(lambda, p), mod_floor(lambda, p)};
}

std::string to_string(AlcoveKind kind) {
  switch (kind) {
    case AlcoveKind::Special: return "special";
    case AlcoveKind::Wall: return "wall";
    case AlcoveKind::Regular: return "regular";
  }
  return "?";
}

Weight dot_reflect(Weight lambda, std::int64_t wall, const Context& ctx) {
  return 2 * (wall * ctx.p() - 1) - lambda;
}

std::vector<Weight> dot_orbit(Weight lambda, Weight lo, Weight hi, const Context& ctx) {
  // W_p is generated by the reflections in the walls -1 and p - 1; their
  // product is translation by 2p, so the orbit is the union of the
  // translates of lambda and of its reflection in -1.
  const std::int64_t period = 2 * ctx.p();
  std::vector<Weight> out;
  for (Weight seed : {lambda, dot_reflect(lambda, 0, ctx)}) {
    Weight first = seed + period * floor_div(lo - seed + period - 1, period);
    for (Weight w = first; w <= hi; w += period) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_dot_orbit(Weight mu, Weight lambda, const Context& ctx) {
  const std::int64_t period = 2 * ctx.p();
  return mod_floor(mu - lambda, period) == 0 ||
         mod_floor(mu - dot_reflect(lambda, 0, ctx), period) == 0;
}

bool strongly_linked(Weight mu, Weight lambda, const Context& ctx) {
  if (mu == lambda) return true;
  if (mu > lambda) return false;
  const std::int64_t p = ctx.p();
  std::deque<Weight> frontier{mu};
  std::unordered_set<Weight> seen{mu};
  while (!frontier.empty()) {
    const Weight x = frontier.front();
    frontier.pop_front();
    // Up-reflections of x: walls n p - 1 with x < n p - 1 and image <= lambda.
    const std::int64_t first = floor_div(x + 1, p) + 1;
    const std::int64_t last = floor_div(lambda + x + 2, 2 * p);
    for (std::int64_t n = first; n <= last; ++n) {
      const Weight y = dot_reflect(x, n, ctx);
      if (y == lambda) return true;
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return false;
}

}  // namespace tiltcell
