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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tiltcell {

using Rational = mpq_class;

/// Parses "3", "-2/5" or "0.5"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Sparse row: (column, coefficient) sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental row echelon form over Q. The pivot of a row is its smallest
/// column index, so callers order columns from "largest" to "smallest".
class Echelon {
 public:
  explicit Echelon(int columns = 0) : columns_(columns) {}

  /// Reduces the row against the stored pivots and keeps it if it is
  /// independent. Returns true when the rank grew.
  bool insert(SparseRow row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int columns() const { return columns_; }
  bool is_pivot(int column) const { return pivots_.count(column) != 0; }

  /// Fully reduces a vector: the result involves non-pivot columns only.
  std::map<int, Rational> reduce(std::map<int, Rational> v) const;

  /// Non-pivot columns in increasing order.
  std::vector<int> free_columns() const;

 private:
  int columns_;
  std::map<int, SparseRow> pivots_;  // lead coefficient normalized to 1
};

/// Rank of a small dense matrix by plain Gaussian elimination. Used as an
/// independent check of Echelon in tests.
int dense_rank(std::vector<std::vector<Rational>> rows);

}  // namespace tiltcell
