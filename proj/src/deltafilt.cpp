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

#include "tiltcell/deltafilt.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tiltcell {

std::int64_t DeltaFactors::operator[](Weight nu) const {
  auto it = mults_.find(nu);
  return it == mults_.end() ? 0 : it->second;
}

void DeltaFactors::add(Weight nu, std::int64_t mult) {
  if (mult == 0) return;
  mults_[nu] += mult;
}

std::int64_t DeltaFactors::max_multiplicity() const {
  std::int64_t best = 0;
  for (const auto& [nu, m] : mults_) best = std::max(best, m);
  return best;
}

std::vector<Weight> DeltaFactors::weights() const {
  std::vector<Weight> out;
  out.reserve(mults_.size());
  for (const auto& [nu, m] : mults_) out.push_back(nu);
  return out;
}

DeltaFactors DeltaFactors::shifted(Weight by) const {
  DeltaFactors out;
  for (const auto& [nu, m] : mults_) out.mults_.emplace(nu + by, m);
  return out;
}

DeltaFactors DeltaFactors::steinberg_image(std::int64_t p) const {
  DeltaFactors out;
  for (const auto& [nu, m] : mults_) out.mults_.emplace(p - 1 + p * nu, m);
  return out;
}

namespace {

DeltaFactors recurse(Weight lambda, const Context& ctx) {
  const std::int64_t p = ctx.p();
  const AlcoveClass cls = classify(lambda, ctx);
  DeltaFactors out;
  if (ctx.r() == 1) {
    if (cls.kind == AlcoveKind::Special) {
      out.add(lambda);
    } else {
      out.add(lambda);
      out.add(dot_reflect(lambda, cls.alcove, ctx));
    }
    return out;
  }
  if (cls.kind != AlcoveKind::Regular) {
    // lambda = p - 1 + p m: the Steinberg component is a copy of level r - 1.
    const Weight m = floor_div(lambda - (p - 1), p);
    return recurse(m, ctx.lower()).steinberg_image(p);
  }
  const Weight wall = cls.alcove * p - 1;
  const DeltaFactors on_wall = recurse(wall, ctx);
  for (const auto& [nu, mult] : on_wall.mults()) {
    if (mod_floor(nu + 1, p) != 0)
      throw InternalInconsistency("T_" + std::to_string(ctx.r()) + "(" + std::to_string(wall) +
                                  ") has factor " + std::to_string(nu) +
                                  " off the walls kp - 1");
    const Weight k = (nu + 1) / p;
    out.add(k * p + cls.offset, mult);
    out.add(k * p - cls.offset - 2, mult);
  }
  return out;
}

}  // namespace

DeltaFactors delta_factors_unchecked(Weight lambda, const Context& ctx) {
  return recurse(lambda, ctx);
}

DeltaFactors delta_factors(Weight lambda, const Context& ctx) {
  DeltaFactors out = recurse(lambda, ctx);
  if (out.max_multiplicity() > 1)
    throw InternalInconsistency("T_" + std::to_string(ctx.r()) + "(" + std::to_string(lambda) +
                                ") has a Delta-factor of multiplicity " +
                                std::to_string(out.max_multiplicity()));
  return out;
}

const DeltaFactors& TiltingTable::factors(Weight lambda, const Context& ctx) {
  const auto key = std::make_tuple(ctx.p(), ctx.r(), lambda);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  DeltaFactors computed = delta_factors(lambda, ctx);
  std::unique_lock lock(mutex_);
  // std::map never invalidates references, so handing one out is safe.
  return memo_.try_emplace(key, std::move(computed)).first->second;
}

std::size_t TiltingTable::cached() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::int64_t hom_dim(Weight lambda, Weight mu, const Context& ctx) {
  const DeltaFactors a = delta_factors(lambda, ctx);
  const DeltaFactors b = delta_factors(mu, ctx);
  std::int64_t total = 0;
  for (const auto& [nu, m] : a.mults()) total += m * b[nu];
  return total;
}

std::int64_t delta_multiplicity(const TiltingMultiset& P, Weight nu, const Context& ctx) {
  std::int64_t total = 0;
  for (const auto& [lambda, count] : P) total += count * delta_factors(lambda, ctx)[nu];
  return total;
}

std::int64_t hom_dim_sum(const TiltingMultiset& P, const TiltingMultiset& Q, const Context& ctx) {
  std::int64_t total = 0;
  for (const auto& [lambda, a] : P)
    for (const auto& [mu, b] : Q) total += a * b * hom_dim(lambda, mu, ctx);
  return total;
}

Character tilting_char(Weight lambda, const Context& ctx) {
  Character out;
  const DeltaFactors factors = delta_factors(lambda, ctx);
  for (const auto& [nu, m] : factors.mults())
    out += baby_verma_char(nu, ctx).scaled(m);
  return out;
}

Report verify_reciprocity(Weight lambda, const Context& ctx) {
  Report report{"reciprocity", ctx, {}};
  const Weight top = tilde(lambda, ctx);
  const DeltaFactors projective = delta_factors(top, ctx);
  for (Weight mu = lambda; mu <= top; ++mu) {
    const auto composition = decompose_into_simples(baby_verma_char(mu, ctx), ctx);
    auto it = composition.find(lambda);
    const std::int64_t rhs = it == composition.end() ? 0 : it->second;
    report.add_eq({{"lambda", lambda}, {"mu", mu}}, projective[mu], rhs);
  }
  // Nothing outside the window may occur either.
  for (const auto& [nu, m] : projective.mults())
    if (nu < lambda || nu > top) report.add({{"lambda", lambda}, {"mu", nu}}, m, 0, false);
  return report;
}

Report verify_bounds(Weight lambda, const Context& ctx) {
  Report report{"bounds", ctx, {}};
  const Weight top = tilde(lambda, ctx);
  const DeltaFactors factors = delta_factors(top, ctx);
  for (Weight nu : factors.weights())
    report.add({{"lambda", lambda}, {"nu", nu}}, nu, nlohmann::json::array({lambda, top}),
               lambda <= nu && nu <= top);
  report.add_eq({{"lambda", lambda}, {"endpoint", "lambda"}}, factors[lambda], 1);
  report.add_eq({{"lambda", lambda}, {"endpoint", "tilde"}}, factors[top], 1);
  return report;
}

Report verify_strong_linkage(Weight lambda, const Context& ctx) {
  Report report{"linkage", ctx, {}};
  const Weight top = tilde(lambda, ctx);
  for (Weight nu : delta_factors(top, ctx).weights()) {
    const bool below = strongly_linked(lambda, nu, ctx);
    const bool above = strongly_linked(nu, top, ctx);
    report.add_eq({{"lambda", lambda}, {"nu", nu}, {"tilde", top}},
                  nlohmann::json::array({below, above}), nlohmann::json::array({true, true}));
  }
  return report;
}

Report verify_hom_linkage(Weight lambda, const Context& ctx) {
  Report report{"hom-linkage", ctx, {}};
  const std::int64_t q = ctx.q();
  const Weight lt = tilde(lambda, ctx);
  for (Weight mu = lambda - 4 * q; mu <= lambda + 4 * q; ++mu) {
    const std::int64_t d = hom_dim(lambda, mu, ctx);
    if (d != 0)
      report.add({{"lambda", lambda}, {"mu", mu}, {"kind", "orbit"}}, d,
                 "same W_p orbit", same_dot_orbit(mu, lambda, ctx));
    const Weight mt = tilde(mu, ctx);
    const std::int64_t dt = hom_dim(lt, mt, ctx);
    if (dt != 0) {
      const bool ok = mu <= lt && lambda <= mt && std::abs(lt - mt) <= 2 * (q - 1);
      report.add({{"lambda", lambda}, {"mu", mu}, {"kind", "bounds"}}, dt,
                  "mu <= tilde(lambda), lambda <= tilde(mu), |tilde difference| <= 2(p^r-1)", ok);
    }
  }
  return report;
}

Report verify_multiplicity_free(Weight lambda, const Context& ctx) {
  Report report{"multfree", ctx, {}};
  const DeltaFactors factors = delta_factors_unchecked(lambda, ctx);
  report.add_eq({{"lambda", lambda}, {"quantity", "max multiplicity"}}, factors.max_multiplicity(),
                1);
  const auto count = static_cast<std::uint64_t>(factors.size());
  report.add({{"lambda", lambda}, {"quantity", "factor count"}}, count, "power of two",
             std::has_single_bit(count));
  return report;
}

Report verify_steinberg_equivalence(Weight m, const Context& ctx) {
  if (ctx.r() < 2) throw ContextError("steinberg equivalence needs r > 1");
  Report report{"steinberg", ctx, {}};
  const std::int64_t p = ctx.p();
  const Context low = ctx.lower();
  const auto image = [p](Weight w) { return p - 1 + p * w; };
  const DeltaFactors upper = delta_factors(image(m), ctx);
  const DeltaFactors lower = delta_factors(m, low).steinberg_image(p);
  report.add_eq({{"m", m}, {"quantity", "factors"}}, upper.weights(), lower.weights());
  report.add_eq({{"m", m}, {"quantity", "multiplicities"}}, upper.mults(), lower.mults());
  const std::int64_t reach = 2 * low.q();
  for (Weight other = m - reach; other <= m + reach; ++other)
    report.add_eq({{"m", m}, {"m2", other}, {"quantity", "hom_dim"}},
                  hom_dim(image(m), image(other), ctx), hom_dim(m, other, low));
  return report;
}

}  // namespace tiltcell
