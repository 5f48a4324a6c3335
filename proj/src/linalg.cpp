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

#include "tiltcell/linalg.hpp"

#include <stdexcept>

namespace tiltcell {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto dot = text.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const auto decimals = text.size() - dot - 1;
      if (decimals == 0) throw std::invalid_argument(text);
      mpz_class den = 1;
      for (std::size_t i = 0; i < decimals; ++i) den *= 10;
      Rational q(mpz_class(digits), den);
      q.canonicalize();
      return q;
    }
    Rational q(text);
    if (q.get_den() == 0) throw std::invalid_argument(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

// row -= factor * pivot
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool Echelon::insert(SparseRow row) {
  while (!row.empty()) {
    const int lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Rational inv = 1 / row.front().second;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Rational factor = row.front().second;
    row = axpy(row, factor, it->second);
  }
  return false;
}

std::map<int, Rational> Echelon::reduce(std::map<int, Rational> v) const {
  // Pivot rows only touch columns at or after their pivot, so one sweep in
  // increasing column order clears every pivot column.
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0) {
      it = v.erase(it);
      continue;
    }
    auto piv = pivots_.find(it->first);
    if (piv == pivots_.end()) {
      ++it;
      continue;
    }
    // Zeroes *it; the erase happens on the next pass.
    const Rational factor = it->second;
    for (const auto& [c, coeff] : piv->second) v[c] -= factor * coeff;
  }
  return v;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < columns_; ++c)
    if (!is_pivot(c)) out.push_back(c);
  return out;
}

int dense_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace tiltcell
