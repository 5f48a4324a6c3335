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

#include "tiltcell/report.hpp"

#include <algorithm>

namespace tiltcell {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return !i.pass; }));
}

void Report::append(const Report& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

void Report::add(nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs, bool pass) {
  items.push_back({std::move(input), std::move(lhs), std::move(rhs), pass});
}

void Report::add_eq(nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs) {
  const bool pass = lhs == rhs;
  add(std::move(input), std::move(lhs), std::move(rhs), pass);
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["check"] = check;
  if (context)
    out["context"] = {{"p", context->p()}, {"r", context->r()}};
  else
    out["context"] = nullptr;
  auto& arr = out["items"] = nlohmann::json::array();
  for (const auto& item : items)
    arr.push_back({{"input", item.input}, {"lhs", item.lhs}, {"rhs", item.rhs}, {"pass", item.pass}});
  out["pass"] = passed();
  out["failures"] = failures();
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

}  // namespace tiltcell
