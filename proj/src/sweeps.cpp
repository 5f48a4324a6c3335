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

#include "tiltcell/sweeps.hpp"

#include <exception>
#include <vector>

#include "tiltcell/deltafilt.hpp"

namespace tiltcell {

std::string to_string(SweepCheck check) {
  switch (check) {
    case SweepCheck::Reciprocity: return "reciprocity";
    case SweepCheck::Bounds: return "bounds";
    case SweepCheck::Linkage: return "linkage";
    case SweepCheck::MultFree: return "multfree";
    case SweepCheck::Steinberg: return "steinberg";
  }
  return "?";
}

std::optional<SweepCheck> parse_sweep_check(const std::string& name) {
  for (auto c : {SweepCheck::Reciprocity, SweepCheck::Bounds, SweepCheck::Linkage,
                 SweepCheck::MultFree, SweepCheck::Steinberg})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

namespace {

Report run_one(SweepCheck check, Weight lambda, const Context& ctx) {
  switch (check) {
    case SweepCheck::Reciprocity: return verify_reciprocity(lambda, ctx);
    case SweepCheck::Bounds: return verify_bounds(lambda, ctx);
    case SweepCheck::Linkage: {
      Report out = verify_strong_linkage(lambda, ctx);
      out.append(verify_hom_linkage(lambda, ctx));
      return out;
    }
    case SweepCheck::MultFree: return verify_multiplicity_free(lambda, ctx);
    case SweepCheck::Steinberg: return verify_steinberg_equivalence(lambda, ctx);
  }
  return {};
}

}  // namespace

Report sweep(SweepCheck check, const Context& ctx, Weight lo, Weight hi, Exec exec) {
  Report out{to_string(check), ctx, {}};
  if (hi < lo) return out;
  const auto count = static_cast<long>(hi - lo + 1);
  std::vector<Report> parts(static_cast<std::size_t>(count));

  if (exec == Exec::Serial) {
    for (long i = 0; i < count; ++i) parts[i] = run_one(check, lo + i, ctx);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) {
      try {
        parts[i] = run_one(check, lo + i, ctx);
      } catch (...) {
#pragma omp critical(tiltcell_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& part : parts) out.append(part);
  out.notes["range"] = {lo, hi};
  return out;
}

}  // namespace tiltcell
