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

#include "tiltcell/charring.hpp"

#include <string>

namespace tiltcell {

Character Character::monomial(Weight mu, std::int64_t coeff) {
  Character c;
  c.add_term(mu, coeff);
  return c;
}

std::int64_t Character::coeff(Weight mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? 0 : it->second;
}

std::optional<Weight> Character::top() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

std::int64_t Character::mass() const {
  std::int64_t total = 0;
  for (const auto& [mu, c] : coeffs_) total += c;
  return total;
}

void Character::add_term(Weight mu, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Character& Character::operator+=(const Character& other) {
  for (const auto& [mu, c] : other.coeffs_) add_term(mu, c);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [mu, c] : other.coeffs_) add_term(mu, -c);
  return *this;
}

Character Character::scaled(std::int64_t factor) const {
  Character out;
  if (factor == 0) return out;
  for (const auto& [mu, c] : coeffs_) out.coeffs_.emplace(mu, c * factor);
  return out;
}

Character Character::shifted(Weight by) const {
  Character out;
  for (const auto& [mu, c] : coeffs_) out.coeffs_.emplace(mu + by, c);
  return out;
}

Character Character::dilated(std::int64_t factor) const {
  Character out;
  for (const auto& [mu, c] : coeffs_) out.add_term(mu * factor, c);
  return out;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [mu, c] : a.coeffs_)
    for (const auto& [nu, d] : b.coeffs_) out.add_term(mu + nu, c * d);
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> Character::pairs() const {
  return {coeffs_.begin(), coeffs_.end()};
}

Character weyl_char(std::int64_t m) {
  if (m == -1) return {};
  if (m < -1) return weyl_char(-m - 2).scaled(-1);
  Character out;
  for (std::int64_t j = 0; j <= m; ++j) out.add_term(m - 2 * j, 1);
  return out;
}

Character simple_char(Weight lambda, std::int64_t p) {
  if (lambda < 0)
    throw std::invalid_argument("simple_char: " + std::to_string(lambda) +
                                " is not a dominant weight");
  Character out = Character::monomial(0);
  std::int64_t twist = 1;
  for (Weight rest = lambda; rest > 0; rest /= p, twist *= p)
    out = out * weyl_char(rest % p).dilated(twist);
  return out;
}

Character simple_char_r(Weight lambda, const Context& ctx) {
  const auto [head, tail] = padic_split(lambda, ctx);
  return simple_char(head, ctx.p()).shifted(ctx.q() * tail);
}

Character baby_verma_char(Weight lambda, const Context& ctx) {
  return weyl_char(ctx.q() - 1).shifted(lambda - (ctx.q() - 1));
}

std::map<Weight, std::int64_t> decompose_into_simples(const Character& f, const Context& ctx) {
  std::map<Weight, std::int64_t> mult;
  Character rest = f;
  while (auto top = rest.top()) {
    const std::int64_t c = rest.coeff(*top);
    if (c < 0)
      throw NotAModuleCharacter("negative coefficient " + std::to_string(c) + " at weight " +
                                std::to_string(*top));
    mult[*top] += c;
    rest -= simple_char_r(*top, ctx).scaled(c);
  }
  return mult;
}

}  // namespace tiltcell
