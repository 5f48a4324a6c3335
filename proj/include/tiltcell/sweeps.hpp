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

#include <optional>
#include <string>

#include "tiltcell/report.hpp"
#include "tiltcell/weights.hpp"

namespace tiltcell {

enum class Exec { Serial, Parallel };

enum class SweepCheck { Reciprocity, Bounds, Linkage, MultFree, Steinberg };

std::string to_string(SweepCheck check);
std::optional<SweepCheck> parse_sweep_check(const std::string& name);

/// Runs one per-weight verification for every weight in [lo, hi] and
/// concatenates the reports in increasing weight order. Linkage runs both
/// verify_strong_linkage and verify_hom_linkage.
///
/// Exec::Serial is the reference loop; Exec::Parallel distributes weights over
/// OpenMP threads and must produce an identical report.
Report sweep(SweepCheck check, const Context& ctx, Weight lo, Weight hi, Exec exec = Exec::Parallel);

}  // namespace tiltcell
