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
#include <vector>

#include <json.hpp>

#include "tiltcell/weights.hpp"

namespace tiltcell {

/// One compared quantity: both sides are kept so a failure can be printed
/// exactly as computed.
struct ReportItem {
  nlohmann::json input;
  nlohmann::json lhs;
  nlohmann::json rhs;
  bool pass = true;
};

struct Report {
  std::string check;
  std::optional<Context> context;
  std::vector<ReportItem> items;
  /// Free-form findings (configuration used, excluded pairs, ...).
  nlohmann::json notes = nlohmann::json::object();

  bool passed() const;
  std::size_t failures() const;
  void append(const Report& other);
  void add(nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs, bool pass);
  /// Items compare by equality of the two sides.
  void add_eq(nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs);

  /// {"check", "context": {p, r}, "items": [{input, lhs, rhs, pass}], ...}
  nlohmann::json to_json() const;
};

}  // namespace tiltcell
