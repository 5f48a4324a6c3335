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

#include "tiltcell/quiver.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>

namespace tiltcell {

std::string to_string(ArrowKind kind) {
  switch (kind) {
    case ArrowKind::UPrime: return "u'";
    case ArrowKind::U: return "u";
    case ArrowKind::D: return "d";
    case ArrowKind::DPrime: return "d'";
  }
  return "?";
}

bool is_up(ArrowKind kind) { return kind == ArrowKind::U || kind == ArrowKind::UPrime; }

int Quiver::add_vertex(std::string label, std::int64_t index, std::int64_t level) {
  vertices_.push_back({std::move(label), index, level, false});
  return static_cast<int>(vertices_.size()) - 1;
}

void Quiver::add_arrow(std::string name, int source, int target, ArrowKind kind) {
  if (finalized_) throw std::logic_error("quiver already finalized");
  if (source < 0 || target < 0 || source >= static_cast<int>(vertices_.size()) ||
      target >= static_cast<int>(vertices_.size()))
    throw std::logic_error("arrow " + name + " has an endpoint outside the quiver");
  arrows_.push_back({std::move(name), source, target, kind});
}

void Quiver::finalize() {
  std::stable_sort(arrows_.begin(), arrows_.end(),
                   [](const Arrow& a, const Arrow& b) { return a.kind < b.kind; });
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (int id = 0; id < static_cast<int>(arrows_.size()); ++id) {
    out_[arrows_[id].source].push_back(id);
    in_[arrows_[id].target].push_back(id);
  }
  finalized_ = true;
}

std::optional<int> Quiver::vertex_by_index(std::int64_t index) const {
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    if (vertices_[v].index == index) return v;
  return std::nullopt;
}

std::optional<int> Quiver::arrow_by_name(const std::string& name) const {
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

bool operator<(const Path& a, const Path& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

Path compose(const Path& outer, const Path& inner) {
  if (inner.target != outer.source) throw std::logic_error("paths do not compose");
  Path out{inner.source, outer.target, outer.word};
  out.word.insert(out.word.end(), inner.word.begin(), inner.word.end());
  return out;
}

std::vector<int> path_vertices(const Quiver& q, const Path& p) {
  std::vector<int> out{p.source};
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) out.push_back(q.arrows()[*it].target);
  return out;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.word.empty()) return "e[" + q.vertices()[p.source].label + "]";
  std::string out;
  for (int a : p.word) {
    if (!out.empty()) out += ' ';
    out += q.arrows()[a].name;
  }
  return out;
}

void add_to(PathElement& into, const Path& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

std::string element_name(const Quiver& q, const PathElement& x) {
  if (x.empty()) return "0";
  std::string out;
  // Largest term first.
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += "(" + to_string(it->second) + ") ";
    out += path_name(q, it->first);
  }
  return out;
}

std::optional<Path> word_path(const Quiver& q, const std::vector<std::string>& names) {
  Path out;
  for (const auto& name : names) {
    auto id = q.arrow_by_name(name);
    if (!id) return std::nullopt;
    out.word.push_back(*id);
  }
  if (out.word.empty()) throw std::logic_error("word_path needs at least one arrow");
  const auto& arrows = q.arrows();
  for (std::size_t i = 0; i + 1 < out.word.size(); ++i)
    if (arrows[out.word[i]].source != arrows[out.word[i + 1]].target)
      throw std::logic_error("arrows " + names[i + 1] + " then " + names[i] + " do not compose");
  out.source = arrows[out.word.back()].source;
  out.target = arrows[out.word.front()].target;
  return out;
}

Scalars parse_scalars(const std::string& text) {
  Scalars out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ScalarConfigError("scalar assignment '" + item + "' is not of the form name=value");
    try {
      out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw ScalarConfigError(e.what());
    }
  }
  return out;
}

// --- linear algebra engine -------------------------------------------------

std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int max_len) {
  const int n = static_cast<int>(q.vertices().size());
  std::vector<std::vector<Path>> out(n);
  for (int v = 0; v < n; ++v) {
    auto& list = out[v];
    list.push_back(Path::idempotent(v));
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
      const std::size_t end = list.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (int a : q.out_arrows(list[i].target)) {
          Path next{v, q.arrows()[a].target, {a}};
          next.word.insert(next.word.end(), list[i].word.begin(), list[i].word.end());
          list.push_back(std::move(next));
        }
      }
      begin = end;
    }
  }
  return out;
}

std::int64_t cell_level(const Quiver& q, const Path& p) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int v : path_vertices(q, p)) best = std::min(best, q.vertices()[v].level);
  return best;
}

std::vector<Path> PairSpace::basis() const {
  std::vector<Path> out;
  for (int c : echelon.free_columns()) out.push_back(columns[c]);
  return out;
}

std::int64_t QuotientSpace::dim(int x, int y) const {
  auto it = pairs.find({x, y});
  return it == pairs.end() ? 0 : it->second.columns.size() - it->second.echelon.rank();
}

std::vector<std::int64_t> QuotientSpace::graded(int x, int y) const {
  std::vector<std::int64_t> out(max_len + 1, 0);
  auto it = pairs.find({x, y});
  if (it == pairs.end()) return out;
  for (int c : it->second.echelon.free_columns()) ++out[it->second.columns[c].length()];
  return out;
}

bool QuotientSpace::saturated(int x, int y) const { return graded(x, y).back() == 0; }

PathElement QuotientSpace::reduce(const PathElement& v) const {
  std::map<std::pair<int, int>, std::map<int, Rational>> by_pair;
  for (const auto& [path, c] : v) {
    if (static_cast<int>(path.length()) > max_len) continue;
    auto it = pairs.find({path.source, path.target});
    if (it == pairs.end())
      throw std::logic_error("path outside the computed quotient: source not enumerated");
    by_pair[{path.source, path.target}][it->second.index.at(path.word)] += c;
  }
  PathElement out;
  for (auto& [key, coords] : by_pair) {
    const PairSpace& space = pairs.at(key);
    for (const auto& [col, c] : space.echelon.reduce(std::move(coords)))
      add_to(out, space.columns[col], c);
  }
  return out;
}

namespace {

int relation_length(const Relation& rel) {
  std::size_t len = 0;
  for (const auto& [p, c] : rel.expr) len = std::max(len, p.length());
  return static_cast<int>(len);
}

struct RelationIndex {
  std::vector<std::vector<const Relation*>> by_source;
};

RelationIndex index_relations(const Quiver& q, const RelationSet& rels) {
  RelationIndex idx;
  idx.by_source.assign(q.vertices().size(), {});
  for (const auto& rel : rels.relations) idx.by_source[rel.lead.source].push_back(&rel);
  return idx;
}

// All pair spaces with source x.
std::map<int, PairSpace> build_source(const Quiver& q, int x, int max_len,
                                      const std::vector<std::vector<Path>>& paths,
                                      const RelationIndex& rels, ColumnOrder order) {
  std::map<int, std::vector<Path>> grouped;
  for (const auto& p : paths[x]) grouped[p.target].push_back(p);

  std::map<int, PairSpace> spaces;
  for (auto& [y, list] : grouped) {
    PairSpace& space = spaces[y];
    if (order == ColumnOrder::DegLex) {
      std::sort(list.begin(), list.end(), [](const Path& a, const Path& b) { return b < a; });
    } else {
      std::vector<std::pair<std::int64_t, Path>> keyed;
      for (auto& p : list) keyed.emplace_back(cell_level(q, p), std::move(p));
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return b.second < a.second;
      });
      for (std::size_t i = 0; i < keyed.size(); ++i) list[i] = std::move(keyed[i].second);
    }
    space.columns = std::move(list);
    for (int c = 0; c < static_cast<int>(space.columns.size()); ++c)
      space.index.emplace(space.columns[c].word, c);
    space.echelon = Echelon(static_cast<int>(space.columns.size()));
  }

  for (const auto& inner : paths[x]) {
    for (const Relation* rel : rels.by_source[inner.target]) {
      const int room = max_len - static_cast<int>(inner.length()) - relation_length(*rel);
      if (room < 0) continue;
      for (const auto& outer : paths[rel->lead.target]) {
        if (static_cast<int>(outer.length()) > room) break;
        PairSpace& space = spaces.at(outer.target);
        std::map<int, Rational> row;
        for (const auto& [term, c] : rel->expr) {
          std::vector<int> word = outer.word;
          word.insert(word.end(), term.word.begin(), term.word.end());
          word.insert(word.end(), inner.word.begin(), inner.word.end());
          row[space.index.at(word)] += c;
        }
        SparseRow sparse;
        for (auto& [col, c] : row)
          if (c != 0) sparse.emplace_back(col, std::move(c));
        space.echelon.insert(std::move(sparse));
      }
    }
  }
  return spaces;
}

std::vector<int> all_vertices(const Quiver& q) {
  std::vector<int> out(q.vertices().size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

QuotientSpace quotient_space(const Quiver& q, const RelationSet& rels, int max_len,
                             const std::vector<int>& sources, Exec exec, ColumnOrder order) {
  const std::vector<int> todo = sources.empty() ? all_vertices(q) : sources;
  const auto paths = enumerate_paths(q, max_len);
  const RelationIndex index = index_relations(q, rels);

  std::vector<std::map<int, PairSpace>> parts(todo.size());
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < todo.size(); ++i)
      parts[i] = build_source(q, todo[i], max_len, paths, index, order);
  } else {
    std::exception_ptr failure;
    const long count = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      try {
        parts[i] = build_source(q, todo[i], max_len, paths, index, order);
      } catch (...) {
#pragma omp critical(tiltcell_quotient_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  QuotientSpace out;
  out.max_len = max_len;
  out.order = order;
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (auto& [y, space] : parts[i]) out.pairs.emplace(std::make_pair(todo[i], y), std::move(space));
  return out;
}

QuotientDims summarize(const QuotientSpace& space) {
  QuotientDims out;
  out.max_len = space.max_len;
  for (const auto& [key, pair] : space.pairs) {
    const auto graded = space.graded(key.first, key.second);
    const std::int64_t dim = std::accumulate(graded.begin(), graded.end(), std::int64_t{0});
    if (dim != 0) {
      out.dims[key] = dim;
      out.graded[key] = graded;
    }
    if (graded.back() != 0) out.unsaturated.push_back(key);
  }
  return out;
}

QuotientDims quotient_dims(const Quiver& q, const RelationSet& rels, int max_len,
                           const std::vector<int>& sources, Exec exec,
                           const std::vector<int>& required) {
  QuotientDims out = summarize(quotient_space(q, rels, max_len, sources, exec));
  const std::set<int> must(required.begin(), required.end());
  std::string missing;
  for (const auto& [x, y] : out.unsaturated) {
    if (!must.empty() && !must.count(x)) continue;
    if (!missing.empty()) missing += ", ";
    missing += q.vertices()[x].label + "->" + q.vertices()[y].label;
  }
  if (!missing.empty())
    throw NotSaturated("paths of length " + std::to_string(max_len) +
                       " survive for " + missing + "; raise the truncation length");
  return out;
}

// --- rewriting engine ------------------------------------------------------

RewriteSystem::RewriteSystem(const RelationSet& rels) {
  for (const auto& rel : rels.relations) {
    auto lead = rel.expr.find(rel.lead);
    if (lead == rel.expr.end()) throw std::logic_error("relation " + rel.label + " lost its lead");
    Rule rule;
    rule.lead_len = rel.lead.word.size();
    const Rational inv = -1 / lead->second;
    for (const auto& [path, c] : rel.expr)
      if (!(path == rel.lead)) rule.replacement.emplace_back(c * inv, path.word);
    if (rel.lead.word.empty()) throw std::logic_error("relation " + rel.label + " has an idempotent lead");
    lead_lengths_.insert(rel.lead.word.size());
    if (!rules_.emplace(rel.lead.word, std::move(rule)).second)
      throw std::logic_error("two relations share the lead of " + rel.label);
  }
}

std::optional<std::pair<std::size_t, const RewriteSystem::Rule*>> RewriteSystem::find(
    const std::vector<int>& word) const {
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t len : lead_lengths_) {
      if (i + len > word.size()) break;
      std::vector<int> sub(word.begin() + i, word.begin() + i + len);
      if (auto it = rules_.find(sub); it != rules_.end()) return std::make_pair(i, &it->second);
    }
  }
  return std::nullopt;
}

bool RewriteSystem::reducible(const Path& p) const { return find(p.word).has_value(); }

PathElement RewriteSystem::normal_form(const PathElement& x, std::size_t budget) const {
  PathElement work = x;
  PathElement done;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const Path& path = node.key();
    auto hit = find(path.word);
    if (!hit) {
      add_to(done, path, node.mapped());
      continue;
    }
    if (++steps > budget)
      throw NonTerminating("rewriting exceeded " + std::to_string(budget) + " steps");
    const auto [pos, rule] = *hit;
    const std::size_t lead_len = rule->lead_len;
    for (const auto& [c, repl] : rule->replacement) {
      Path next{path.source, path.target, {}};
      next.word.assign(path.word.begin(), path.word.begin() + pos);
      next.word.insert(next.word.end(), repl.begin(), repl.end());
      next.word.insert(next.word.end(), path.word.begin() + pos + lead_len, path.word.end());
      add_to(work, next, c * node.mapped());
    }
  }
  return done;
}

PathElement RewriteSystem::normal_form(const Path& p, std::size_t budget) const {
  return normal_form(PathElement{{p, Rational(1)}}, budget);
}

std::map<std::pair<int, int>, std::int64_t> rewriting_dims(const Quiver& q,
                                                            const RewriteSystem& rs, int max_len,
                                                            const std::vector<int>& sources) {
  const auto paths = enumerate_paths(q, max_len);
  const std::vector<int> todo = sources.empty() ? all_vertices(q) : sources;
  std::map<std::pair<int, int>, std::int64_t> out;
  for (int x : todo) {
    std::map<int, std::map<Path, int>> columns;
    std::map<int, Echelon> spans;
    for (const auto& p : paths[x]) {
      const PathElement nf = rs.normal_form(p);
      if (nf.empty()) continue;
      auto& cols = columns[p.target];
      SparseRow row;
      std::map<int, Rational> sorted;
      for (const auto& [term, c] : nf) {
        auto [it, inserted] = cols.try_emplace(term, static_cast<int>(cols.size()));
        sorted[it->second] += c;
      }
      for (auto& [col, c] : sorted) row.emplace_back(col, std::move(c));
      spans[p.target].insert(std::move(row));
    }
    for (const auto& [y, span] : spans)
      if (span.rank() != 0) out[{x, y}] = span.rank();
  }
  return out;
}

// --- window bookkeeping and checks ----------------------------------------

std::vector<std::pair<int, int>> interior_pairs(const Quiver& q, int max_len) {
  const int n = static_cast<int>(q.vertices().size());
  constexpr int kFar = std::numeric_limits<int>::max() / 4;
  // dist_to[b][v] for every boundary vertex b, undirected.
  std::vector<std::vector<int>> dist_to;
  for (int b = 0; b < n; ++b) {
    if (!q.vertices()[b].boundary) continue;
    std::vector<int> dist(n, kFar);
    std::deque<int> queue{b};
    dist[b] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      auto visit = [&](int w) {
        if (dist[w] == kFar) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      };
      for (int a : q.out_arrows(v)) visit(q.arrows()[a].target);
      for (int a : q.in_arrows(v)) visit(q.arrows()[a].source);
    }
    dist_to.push_back(std::move(dist));
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (const auto& dist : dist_to)
        if (dist[x] + dist[y] <= max_len) {
          ok = false;
          break;
        }
      if (ok) out.emplace_back(x, y);
    }
  return out;
}

Report check_against_cellular(const Quiver& q, const QuotientDims& dims, const HomOracle& oracle,
                              const std::vector<std::pair<int, int>>& pairs) {
  Report report{"quiver-vs-cellular", std::nullopt, {}};
  for (const auto& [x, y] : pairs) {
    auto it = dims.dims.find({x, y});
    const std::int64_t quotient = it == dims.dims.end() ? 0 : it->second;
    report.add_eq({{"source", q.vertices()[x].label}, {"target", q.vertices()[y].label}}, quotient,
                  oracle(x, y));
  }
  auto& excluded = report.notes["boundary_vertices"] = nlohmann::json::array();
  for (const auto& v : q.vertices())
    if (v.boundary) excluded.push_back(v.label);
  report.notes["pairs_checked"] = pairs.size();
  report.notes["max_len"] = dims.max_len;
  return report;
}

Report cell_filtration_check(const Quiver& q, const QuotientSpace& space,
                             const LayerOracle& layers,
                             const std::vector<std::pair<int, int>>& pairs) {
  if (space.order != ColumnOrder::Cell)
    throw std::invalid_argument("cell_filtration_check needs a cell-ordered quotient");
  Report report{"cell-filtration", std::nullopt, {}};
  std::set<std::int64_t> levels;
  for (const auto& v : q.vertices()) levels.insert(v.level);

  // A basis path b of cell c lies below every level > c; every term of the
  // reduction of a b and b a must then have cell <= c.
  std::map<std::int64_t, std::int64_t> violations, tested;
  std::vector<std::string> examples;
  for (const auto& [key, pair] : space.pairs) {
    for (const Path& b : pair.basis()) {
      if (static_cast<int>(b.length()) >= space.max_len) continue;
      const std::int64_t cell = cell_level(q, b);
      std::vector<Path> products;
      for (int a : q.out_arrows(b.target))
        products.push_back(compose({b.target, q.arrows()[a].target, {a}}, b));
      for (int a : q.in_arrows(b.source)) {
        const int from = q.arrows()[a].source;
        if (space.pairs.count({from, b.target})) products.push_back(compose(b, {from, b.source, {a}}));
      }
      for (const Path& prod : products) {
        if (!space.pairs.count({prod.source, prod.target})) continue;
        const PathElement reduced = space.reduce({{prod, Rational(1)}});
        std::int64_t worst = std::numeric_limits<std::int64_t>::min();
        for (const auto& [term, c] : reduced) worst = std::max(worst, cell_level(q, term));
        for (std::int64_t lambda : levels) {
          if (lambda <= cell) continue;
          ++tested[lambda];
          if (worst >= lambda) {
            ++violations[lambda];
            if (examples.size() < 10)
              examples.push_back(path_name(q, prod) + " = " + element_name(q, reduced));
          }
        }
      }
    }
  }
  for (std::int64_t lambda : levels)
    report.add_eq({{"level", lambda}, {"products_tested", tested[lambda]}}, violations[lambda], 0);
  if (!examples.empty()) report.notes["violations"] = examples;

  if (layers) {
    std::vector<std::pair<int, int>> todo = pairs;
    if (todo.empty())
      for (const auto& [key, pair] : space.pairs) todo.push_back(key);
    for (const auto& [x, y] : todo) {
      std::map<std::int64_t, std::int64_t> counts;
      if (auto it = space.pairs.find({x, y}); it != space.pairs.end())
        for (const Path& b : it->second.basis()) ++counts[cell_level(q, b)];
      for (std::int64_t lambda : levels) {
        const std::int64_t expected = layers(x, y, lambda);
        if (expected == 0 && counts[lambda] == 0) continue;
        report.add_eq({{"source", q.vertices()[x].label},
                       {"target", q.vertices()[y].label},
                       {"cell_level", lambda}},
                      counts[lambda], expected);
      }
    }
  }
  return report;
}

Report check_engines(const Quiver& q, const QuotientDims& dims,
                     const std::map<std::pair<int, int>, std::int64_t>& rewriting,
                     const std::vector<std::pair<int, int>>& pairs) {
  Report report{"rewriting-vs-linear-algebra", std::nullopt, {}};
  std::set<std::pair<int, int>> keys(pairs.begin(), pairs.end());
  if (pairs.empty()) {
    for (const auto& [k, v] : dims.dims) keys.insert(k);
    for (const auto& [k, v] : rewriting) keys.insert(k);
  }
  for (const auto& key : keys) {
    auto a = dims.dims.find(key);
    auto b = rewriting.find(key);
    report.add_eq({{"source", q.vertices()[key.first].label},
                   {"target", q.vertices()[key.second].label}},
                  a == dims.dims.end() ? 0 : a->second, b == rewriting.end() ? 0 : b->second);
  }
  return report;
}

// --- exports ---------------------------------------------------------------

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string export_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(q.name().empty() ? "quiver" : q.name()) << "\" {\n";
  out << "  node [shape=box];\n";
  for (const auto& v : q.vertices())
    out << "  \"" << dot_escape(v.label) << "\" [label=\"" << dot_escape(v.label) << "\\n"
        << v.level << "\"];\n";
  // Stable order: by source index, then target index, then arrow name.
  std::vector<int> order(q.arrows().size());
  std::iota(order.begin(), order.end(), 0);
  const auto& vs = q.vertices();
  const auto& as = q.arrows();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_tuple(vs[as[a].source].index, vs[as[a].target].index, as[a].name) <
           std::make_tuple(vs[as[b].source].index, vs[as[b].target].index, as[b].name);
  });
  for (int a : order) {
    const Arrow& arrow = as[a];
    out << "  \"" << dot_escape(vs[arrow.source].label) << "\" -> \""
        << dot_escape(vs[arrow.target].label) << "\" [label=\"" << dot_escape(arrow.name) << "\"";
    if (!is_up(arrow.kind)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dims_tsv(const Quiver& q, const QuotientDims& dims) {
  std::ostringstream out;
  out << "source\ttarget\tdim\n";
  for (const auto& [key, d] : dims.dims)
    out << q.vertices()[key.first].label << '\t' << q.vertices()[key.second].label << '\t' << d
        << '\n';
  return out.str();
}

nlohmann::json dims_json(const Quiver& q, const QuotientDims& dims) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, d] : dims.dims)
    rows.push_back({{"source", q.vertices()[key.first].label},
                    {"target", q.vertices()[key.second].label},
                    {"dim", d},
                    {"graded", dims.graded.at(key)}});
  return {{"max_len", dims.max_len}, {"dims", rows}};
}

nlohmann::json relations_json(const Quiver& q, const RelationSet& rels) {
  nlohmann::json scalars = nlohmann::json::object();
  for (const auto& [name, value] : rels.scalars) scalars[name] = to_string(value);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& rel : rels.relations) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = rel.expr.rbegin(); it != rel.expr.rend(); ++it)
      terms.push_back({{"coeff", to_string(it->second)}, {"path", path_name(q, it->first)}});
    list.push_back({{"label", rel.label}, {"lead", path_name(q, rel.lead)}, {"terms", terms}});
  }
  return {{"scalars", scalars}, {"relations", list}};
}

}  // namespace tiltcell
