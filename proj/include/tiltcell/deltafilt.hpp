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
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tiltcell/charring.hpp"
#include "tiltcell/report.hpp"
#include "tiltcell/weights.hpp"

namespace tiltcell {

/// nu -> (T_r(lambda) : Delta_r(nu)). Only nonzero multiplicities are stored.
class DeltaFactors {
 public:
  DeltaFactors() = default;

  std::int64_t operator[](Weight nu) const;
  void add(Weight nu, std::int64_t mult = 1);
  std::size_t size() const { return mults_.size(); }
  bool empty() const { return mults_.empty(); }
  std::int64_t max_multiplicity() const;
  /// Lowest and highest weight with a nonzero multiplicity. Requires !empty().
  Weight lowest() const { return mults_.begin()->first; }
  Weight highest() const { return mults_.rbegin()->first; }
  std::vector<Weight> weights() const;
  const std::map<Weight, std::int64_t>& mults() const { return mults_; }

  DeltaFactors shifted(Weight by) const;
  /// Image under nu -> p - 1 + p nu, the Steinberg-component embedding.
  DeltaFactors steinberg_image(std::int64_t p) const;

  friend bool operator==(const DeltaFactors&, const DeltaFactors&) = default;

 private:
  std::map<Weight, std::int64_t> mults_;
};

/// Raised when the recursion meets a configuration that would contradict
/// multiplicity-freeness or the wall-factor shape; never silently patched.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Delta_r-factors of the indecomposable tilting module T_r(lambda),
/// computed by the level recursion:
///   r = 1, special      -> {lambda}
///   r = 1, np + a       -> {lambda, 2np - 2 - lambda}
///   r > 1, p - 1 + p m  -> steinberg image of the level r - 1 factors of m
///   r > 1, np + a       -> translate each factor kp - 1 of T_r(np - 1) off
///                          the wall to {kp + a, kp - a - 2}
/// Throws InternalInconsistency if a multiplicity exceeds 1.
DeltaFactors delta_factors(Weight lambda, const Context& ctx);

/// Same recursion without the final multiplicity assertion, so sweeps can
/// report a violation instead of aborting.
DeltaFactors delta_factors_unchecked(Weight lambda, const Context& ctx);

/// Memoized delta_factors keyed by (p, r, lambda). Safe to share between
/// threads.
class TiltingTable {
 public:
  const DeltaFactors& factors(Weight lambda, const Context& ctx);
  std::size_t cached() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<std::int64_t, int, Weight>, DeltaFactors> memo_;
};

/// sum_nu (T_r(lambda):Delta_r(nu)) (T_r(mu):Delta_r(nu)).
std::int64_t hom_dim(Weight lambda, Weight mu, const Context& ctx);

using TiltingMultiset = std::map<Weight, std::int64_t>;

/// Bilinear extension of hom_dim over direct sums of indecomposables.
std::int64_t hom_dim_sum(const TiltingMultiset& P, const TiltingMultiset& Q, const Context& ctx);

/// (P : Delta_r(nu)) for a direct sum P.
std::int64_t delta_multiplicity(const TiltingMultiset& P, Weight nu, const Context& ctx);

Character tilting_char(Weight lambda, const Context& ctx);

// Verification of structural statements about the recursion. Each returns a
// per-item report; mathematical failures are reported, never thrown.

/// (T_r(tilde lambda):Delta_r(mu)) against [nabla_r(mu):L_r(lambda)] from the
/// character oracle, for lambda <= mu <= tilde lambda.
Report verify_reciprocity(Weight lambda, const Context& ctx);

/// Factors of T_r(tilde lambda) lie in [lambda, tilde lambda]; both ends occur once.
Report verify_bounds(Weight lambda, const Context& ctx);

/// Every factor nu of T_r(tilde lambda) has lambda ^ nu ^ tilde lambda.
Report verify_strong_linkage(Weight lambda, const Context& ctx);

/// hom_dim(lambda, mu) != 0 implies mu in W_p . lambda, and nonzero
/// Hom(T(tilde lambda), T(tilde mu)) forces mu <= tilde lambda, lambda <= tilde mu
/// and |lambda - mu| <= 2(p^r - 1). mu ranges over lambda +- 4 p^r.
Report verify_hom_linkage(Weight lambda, const Context& ctx);

/// All multiplicities of T_r(lambda) are 1, and the factor count is a power of two.
Report verify_multiplicity_free(Weight lambda, const Context& ctx);

/// T_r(p - 1 + p m) is the steinberg image of T_{r-1}(m), and Hom dimensions
/// agree for m' in m +- 2 p^{r-1}. Requires r > 1.
Report verify_steinberg_equivalence(Weight m, const Context& ctx);

}  // namespace tiltcell
