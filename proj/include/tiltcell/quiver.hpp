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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tiltcell/linalg.hpp"
#include "tiltcell/report.hpp"
#include "tiltcell/sweeps.hpp"

namespace tiltcell {

/// Arrow kinds in increasing letter order. Words are compared length first,
/// then lexicographically in this order, so "down then up" words
/// (written d u) are larger than "up then down" words (written u d).
enum class ArrowKind { UPrime, U, D, DPrime };

std::string to_string(ArrowKind kind);
bool is_up(ArrowKind kind);

struct QuiverVertex {
  std::string label;
  std::int64_t index;  // P_j index, or position in the Bruhat diagram
  std::int64_t level;  // highest weight (SL2) or 3 - length (sl3)
  bool boundary = false;  // some arrow of the infinite pattern was cut off
};

struct Arrow {
  std::string name;
  int source;
  int target;
  ArrowKind kind;
};

/// A finite window of a (possibly periodic) quiver. Arrows are renumbered by
/// finalize() so that arrow ids follow the letter order.
class Quiver {
 public:
  explicit Quiver(std::string name = {}) : name_(std::move(name)) {}

  int add_vertex(std::string label, std::int64_t index, std::int64_t level);
  void add_arrow(std::string name, int source, int target, ArrowKind kind);
  void mark_boundary(int vertex) { vertices_.at(vertex).boundary = true; }
  void set_shift_period(std::int64_t period) { shift_period_ = period; }
  void finalize();

  const std::string& name() const { return name_; }
  const std::vector<QuiverVertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::int64_t> shift_period() const { return shift_period_; }
  std::optional<int> vertex_by_index(std::int64_t index) const;
  std::optional<int> arrow_by_name(const std::string& name) const;
  const std::vector<int>& out_arrows(int vertex) const { return out_.at(vertex); }
  const std::vector<int>& in_arrows(int vertex) const { return in_.at(vertex); }

  /// Cell order on vertices: a < b iff level(a) < level(b).
  bool below(int a, int b) const { return vertices_[a].level < vertices_[b].level; }

 private:
  std::string name_;
  std::vector<QuiverVertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::optional<std::int64_t> shift_period_;
  bool finalized_ = false;
};

/// A path in written (composition) order: word[0] is applied last. The empty
/// word is the idempotent at source == target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> word;

  static Path idempotent(int vertex) { return {vertex, vertex, {}}; }
  std::size_t length() const { return word.size(); }

  /// Length first, then the word in letter order.
  friend bool operator<(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;
};

/// outer after inner; requires inner.target == outer.source.
Path compose(const Path& outer, const Path& inner);

/// Vertices visited by the path, source first.
std::vector<int> path_vertices(const Quiver& q, const Path& p);
std::string path_name(const Quiver& q, const Path& p);

using PathElement = std::map<Path, Rational>;

void add_to(PathElement& into, const Path& p, const Rational& c);
std::string element_name(const Quiver& q, const PathElement& x);

/// Relation expr = 0, rewritten as lead -> lead - expr / coeff(lead).
struct Relation {
  std::string label;
  PathElement expr;
  Path lead;
};

struct RelationSet {
  std::vector<Relation> relations;
  std::map<std::string, Rational> scalars;
  std::set<std::string> nonzero;  // scalar names that must not vanish
};

class ScalarConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Presentation {
  Quiver quiver;
  RelationSet relations;
  int max_len = 0;  // a truncation length at which saturation is expected
};

/// Builds a path from arrow names in written order ("d_1", "u_1" is u_1
/// followed by d_1). Returns nullopt if some arrow lies outside the window;
/// throws std::logic_error if the arrows do not compose.
std::optional<Path> word_path(const Quiver& q, const std::vector<std::string>& names);

using Scalars = std::map<std::string, Rational>;

/// Parses "a=1,b=-1/2" into named scalars.
Scalars parse_scalars(const std::string& text);

/// Zigzag presentation of the regular block of P_1: vertices P_m = T_1(2pm),
/// Q_m = T_1(2p - 2 + 2pm) for m in [-window, window].
Presentation build_p1_quiver(std::int64_t p, int window);

/// Ladder presentation of the principal block of P_2 on P_j, j in
/// [-2p window, 2p (window + 1) - 1]. Scalars c5a..c5d, c6a..c6d (default 1)
/// weight the square relations. With `complete` the two loops at each P_j,
/// j = 0 mod p, are identified up to scalars c0a, c0b: the printed relations
/// leave these vertices without any relation between them.
Presentation build_p2_quiver(std::int64_t p, int window, const Scalars& overrides = {},
                             bool complete = true);

/// Presentation of the sl3 principal block of O with scalars a, b (nonzero) and r.
Presentation build_sl3_quiver(const Rational& a, const Rational& b, const Rational& r);
Presentation build_sl3_quiver(const Scalars& overrides = {});

class NotSaturated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonTerminating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Span of all paths x -> y of length <= max_len modulo the relation ideal
/// truncated at the same length. Columns run from the largest path down, so
/// the non-pivot columns (standard monomials) form a basis of the quotient.
struct PairSpace {
  std::vector<Path> columns;
  std::map<std::vector<int>, int> index;
  Echelon echelon;

  std::vector<Path> basis() const;
};

/// DegLex keeps the smallest paths as basis. Cell orders by cell level first
/// (lowest vertex level on the path), so that for every level the basis paths
/// below it span the image of the paths below it.
enum class ColumnOrder { DegLex, Cell };

std::int64_t cell_level(const Quiver& q, const Path& p);

class QuotientSpace {
 public:
  int max_len = 0;
  ColumnOrder order = ColumnOrder::DegLex;
  std::map<std::pair<int, int>, PairSpace> pairs;

  std::int64_t dim(int x, int y) const;
  /// Number of basis paths of each length 0..max_len.
  std::vector<std::int64_t> graded(int x, int y) const;
  /// No standard monomial of length max_len.
  bool saturated(int x, int y) const;
  /// Rewrites an element in terms of standard monomials. Paths longer than
  /// max_len count as zero; callers must only rely on this when saturated.
  PathElement reduce(const PathElement& v) const;
};

/// Builds the pair spaces for the given sources (all vertices if empty).
/// Exec::Serial is the reference loop; Exec::Parallel spreads sources over
/// OpenMP threads with identical results.
QuotientSpace quotient_space(const Quiver& q, const RelationSet& rels, int max_len,
                             const std::vector<int>& sources = {}, Exec exec = Exec::Parallel,
                             ColumnOrder order = ColumnOrder::DegLex);

struct QuotientDims {
  int max_len = 0;
  std::map<std::pair<int, int>, std::int64_t> dims;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> graded;
  std::vector<std::pair<int, int>> unsaturated;
};

QuotientDims summarize(const QuotientSpace& space);

/// Quotient dimension for every pair reachable from the given sources.
/// Throws NotSaturated if some pair x -> y with x in `required` (all sources
/// if empty) still has a basis path of length max_len.
QuotientDims quotient_dims(const Quiver& q, const RelationSet& rels, int max_len,
                           const std::vector<int>& sources = {}, Exec exec = Exec::Parallel,
                           const std::vector<int>& required = {});

/// Oriented rewriting by the relation leads.
class RewriteSystem {
 public:
  explicit RewriteSystem(const RelationSet& rels);
  /// Fixed point of rewriting. Throws NonTerminating past `budget` steps.
  PathElement normal_form(const PathElement& x, std::size_t budget = 1'000'000) const;
  PathElement normal_form(const Path& p, std::size_t budget = 1'000'000) const;
  bool reducible(const Path& p) const;

 private:
  struct Rule {
    std::size_t lead_len = 0;
    std::vector<std::pair<Rational, std::vector<int>>> replacement;
  };
  std::map<std::vector<int>, Rule> rules_;
  std::set<std::size_t> lead_lengths_;
  std::optional<std::pair<std::size_t, const Rule*>> find(const std::vector<int>& word) const;
};

/// All paths starting at each vertex with length <= max_len, shortest first.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int max_len);

/// Rank of the span of the normal forms of all paths x -> y, per pair.
std::map<std::pair<int, int>, std::int64_t> rewriting_dims(const Quiver& q,
                                                            const RewriteSystem& rs, int max_len,
                                                            const std::vector<int>& sources = {});

/// Pairs (x, y) such that no path x -> y of length <= max_len can touch a
/// boundary vertex; their Hom spaces agree with the infinite quiver.
std::vector<std::pair<int, int>> interior_pairs(const Quiver& q, int max_len);

using HomOracle = std::function<std::int64_t(int, int)>;

/// Cellular Hom dimension for each vertex pair of a preset.
HomOracle cellular_oracle(const Quiver& q, const std::string& preset, std::int64_t p);

/// Quotient dimension against the cellular count on interior pairs; the
/// excluded boundary vertices are listed in the notes.
Report check_against_cellular(const Quiver& q, const QuotientDims& dims, const HomOracle& oracle,
                              const std::vector<std::pair<int, int>>& pairs);

/// Number of cellular basis elements of Hom(x, y) in the cell at `level`.
using LayerOracle = std::function<std::int64_t(int, int, std::int64_t)>;

LayerOracle cellular_layer_oracle(const Quiver& q, const std::string& preset, std::int64_t p);

/// On a ColumnOrder::Cell space: per level lambda, the span of basis paths
/// below lambda is closed under composing with arrows on either side. With a
/// layer oracle, also compares the basis count of every cell layer of every
/// pair in `pairs` (all computed pairs if empty).
Report cell_filtration_check(const Quiver& q, const QuotientSpace& space,
                             const LayerOracle& layers = {},
                             const std::vector<std::pair<int, int>>& pairs = {});

/// Rewriting engine against linear algebra on the given pairs (every pair
/// either side reports if empty).
Report check_engines(const Quiver& q, const QuotientDims& dims,
                     const std::map<std::pair<int, int>, std::int64_t>& rewriting,
                     const std::vector<std::pair<int, int>>& pairs = {});

std::string export_dot(const Quiver& q);
std::string dims_tsv(const Quiver& q, const QuotientDims& dims);
nlohmann::json dims_json(const Quiver& q, const QuotientDims& dims);
nlohmann::json relations_json(const Quiver& q, const RelationSet& rels);

}  // namespace tiltcell
