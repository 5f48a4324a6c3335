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

#include "tiltcell/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltcell/cellbasis.hpp"
#include "tiltcell/charring.hpp"
#include "tiltcell/deltafilt.hpp"
#include "tiltcell/quiver.hpp"
#include "tiltcell/sweeps.hpp"
#include "tiltcell/weights.hpp"

namespace tiltcell::cli {

using nlohmann::json;

std::int64_t max_work() {
  const char* env = std::getenv("TILTCELL_MAX_WORK");
  if (env == nullptr || *env == '\0') return kDefaultMaxWork;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("TILTCELL_MAX_WORK must be a positive integer, got '") +
                              env + "'");
}

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::int64_t p = 3;
  int r = 1;
  std::optional<Weight> weight, to, lo, hi;
  std::optional<int> window, max_len;
  std::string preset = "p2";
  std::string scalars;
  std::string format = "json";
  std::string suite = "all";
  std::string kind = "tilting";
  std::string block = "all";
  bool literal = false;
  bool engines = false;
  bool search_signs = false;
  bool brief = false;
};

json envelope(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

json context_json(const Context& ctx) { return {{"p", ctx.p()}, {"r", ctx.r()}}; }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " is not available here (use one of: " + list + ")");
}

Weight need_weight(const Options& o) {
  if (!o.weight) throw UsageError("--weight is required");
  return *o.weight;
}

// Requested range, or the Prop 5.3 window around --weight, or [-2q, 2q].
std::pair<Weight, Weight> weight_range(const Options& o, const Context& ctx) {
  Weight lo = -2 * ctx.q(), hi = 2 * ctx.q();
  if (o.weight) {
    lo = *o.weight - 2 * (ctx.q() - 1);
    hi = *o.weight + 2 * (ctx.q() - 1);
  }
  if (o.lo) lo = *o.lo;
  if (o.hi) hi = *o.hi;
  if (lo > hi) throw UsageError("--lo must not exceed --hi");
  const std::int64_t cap = max_work();
  if (hi - lo + 1 > cap)
    throw UsageError("range of " + std::to_string(hi - lo + 1) +
                     " weights exceeds TILTCELL_MAX_WORK=" + std::to_string(cap));
  return {lo, hi};
}

json pairs_json(const std::map<Weight, std::int64_t>& m) {
  json out = json::array();
  for (const auto& [w, c] : m) out.push_back({w, c});
  return out;
}

json brief_report(const Report& report, bool brief) {
  json j = report.to_json();
  if (brief) {
    json failed = json::array();
    for (const auto& item : j["items"])
      if (!item["pass"].get<bool>()) failed.push_back(item);
    j["item_count"] = report.items.size();
    j["items"] = failed;
  }
  return j;
}

// --- SL2 commands ------------------------------------------------------

int cmd_delta_factors(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  const Context ctx(o.p, o.r);
  const Weight lambda = need_weight(o);
  const DeltaFactors f = delta_factors(lambda, ctx);
  if (o.format == "tsv") {
    out << "weight\tmult\n";
    for (const auto& [nu, m] : f.mults()) out << nu << '\t' << m << '\n';
    return kOk;
  }
  json j = envelope("delta-factors");
  j["context"] = context_json(ctx);
  j["weight"] = lambda;
  j["factors"] = pairs_json(f.mults());
  emit_json(out, j);
  return kOk;
}

int cmd_char(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  const Context ctx(o.p, o.r);
  const Weight lambda = need_weight(o);
  Character c;
  if (o.kind == "tilting") c = tilting_char(lambda, ctx);
  else if (o.kind == "simple") c = simple_char_r(lambda, ctx);
  else if (o.kind == "baby-verma") c = baby_verma_char(lambda, ctx);
  else if (o.kind == "weyl") c = weyl_char(lambda);
  else throw UsageError("--kind must be one of tilting, simple, baby-verma, weyl");
  if (o.format == "tsv") {
    out << "weight\tcoeff\n";
    for (const auto& [w, k] : c.pairs()) out << w << '\t' << k << '\n';
    return kOk;
  }
  json j = envelope("char");
  j["context"] = context_json(ctx);
  j["weight"] = lambda;
  j["kind"] = o.kind;
  j["character"] = pairs_json(c.terms());
  j["dimension"] = c.mass();
  emit_json(out, j);
  return kOk;
}

int cmd_hom_dim_sl3(const Options& o, std::ostream& out) {
  json table = json::object();
  json order = json::array();
  std::int64_t total = 0;
  for (sl3::Elem x : sl3::kElements) {
    order.push_back(sl3::name(x));
    for (sl3::Elem y : sl3::kElements) {
      const std::int64_t d = sl3::hom_dim(x, y);
      table[sl3::name(x)][sl3::name(y)] = d;
      total += d;
    }
  }
  if (o.format == "tsv") {
    out << "source\ttarget\tdim\n";
    for (sl3::Elem x : sl3::kElements)
      for (sl3::Elem y : sl3::kElements)
        out << sl3::name(x) << '\t' << sl3::name(y) << '\t' << sl3::hom_dim(x, y) << '\n';
    return kOk;
  }
  json j = envelope("hom-dim");
  j["preset"] = "sl3";
  j["order"] = order;
  j["table"] = table;
  j["total"] = total;
  emit_json(out, j);
  return kOk;
}

int cmd_hom_dim(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  if (o.preset == "sl3") return cmd_hom_dim_sl3(o, out);
  const Context ctx(o.p, o.r);
  if (o.weight && o.to) {
    const std::int64_t d = hom_dim(*o.weight, *o.to, ctx);
    if (o.format == "tsv") {
      out << "source\ttarget\tdim\n" << *o.weight << '\t' << *o.to << '\t' << d << '\n';
      return kOk;
    }
    json j = envelope("hom-dim");
    j["context"] = context_json(ctx);
    j["source"] = *o.weight;
    j["target"] = *o.to;
    j["dim"] = d;
    emit_json(out, j);
    return kOk;
  }
  if (!o.lo || !o.hi) throw UsageError("hom-dim needs --weight and --to, or --lo and --hi");
  const auto [lo, hi] = weight_range(o, ctx);
  if ((hi - lo + 1) * (hi - lo + 1) > max_work())
    throw UsageError("table size exceeds TILTCELL_MAX_WORK=" + std::to_string(max_work()));
  json rows = json::array();
  if (o.format == "tsv") out << "source\ttarget\tdim\n";
  for (Weight a = lo; a <= hi; ++a)
    for (Weight b = lo; b <= hi; ++b) {
      const std::int64_t d = hom_dim(a, b, ctx);
      if (d == 0) continue;
      if (o.format == "tsv") out << a << '\t' << b << '\t' << d << '\n';
      else rows.push_back({a, b, d});
    }
  if (o.format == "tsv") return kOk;
  json j = envelope("hom-dim");
  j["context"] = context_json(ctx);
  j["range"] = {lo, hi};
  j["nonzero"] = rows;
  emit_json(out, j);
  return kOk;
}

int cmd_cell_basis(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  const Context ctx(o.p, o.r);
  const Weight lambda = need_weight(o);
  const Weight mu = o.to.value_or(lambda);
  const TiltingMultiset P{{lambda, 1}}, Q{{mu, 1}};
  const auto indices = cell_indices(P, Q, ctx);
  const auto back = cell_indices(Q, P, ctx);
  bool involution = indices.size() == back.size();
  for (const auto& c : indices) {
    const CellIndex d = dagger(c);
    involution = involution && dagger(d) == c &&
                 std::find(back.begin(), back.end(), d) != back.end();
  }
  if (o.format == "tsv") {
    out << "cell_weight\ti\tj\tsource\ttarget\n";
    for (const auto& c : indices)
      out << c.cell_weight << '\t' << c.i << '\t' << c.j << '\t' << c.source << '\t' << c.target
          << '\n';
    return involution ? kOk : kVerificationFailed;
  }
  json list = json::array();
  for (const auto& c : indices)
    list.push_back({{"cell_weight", c.cell_weight},
                    {"i", c.i},
                    {"j", c.j},
                    {"source", c.source},
                    {"target", c.target}});
  json j = envelope("cell-basis");
  j["context"] = context_json(ctx);
  j["indices"] = list;
  j["count"] = indices.size();
  j["hom_dim"] = hom_dim_sum(P, Q, ctx);
  j["dagger_involution"] = involution;
  j["pass"] = involution && static_cast<std::int64_t>(indices.size()) == hom_dim_sum(P, Q, ctx);
  emit_json(out, j);
  return j["pass"].get<bool>() ? kOk : kVerificationFailed;
}

int cmd_generators(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  if (o.preset == "sl3") {
    json list = json::array();
    if (o.format == "tsv") out << "high\tlow\n";
    for (const auto& [hi, lo] : sl3::generator_set_Bprime()) {
      if (o.format == "tsv") out << sl3::name(hi) << '\t' << sl3::name(lo) << '\n';
      list.push_back({{"high", sl3::name(hi)}, {"low", sl3::name(lo)}});
    }
    if (o.format == "tsv") return kOk;
    json j = envelope("generators");
    j["preset"] = "sl3";
    j["generators"] = list;
    emit_json(out, j);
    return kOk;
  }
  const Context ctx(o.p, o.r);
  std::vector<GeneratorSymbol> gens;
  if (o.block == "all") gens = generator_set_Br(ctx);
  else if (o.block == "principal") gens = generator_set_Br0(ctx);
  else throw UsageError("--block must be all or principal");
  if (o.format == "tsv") {
    out << "low\thigh\tindex\n";
    for (const auto& g : gens) out << g.low << '\t' << g.high << '\t' << g.index << '\n';
    return kOk;
  }
  json list = json::array();
  for (const auto& g : gens) list.push_back({{"low", g.low}, {"high", g.high}, {"index", g.index}});
  json j = envelope("generators");
  j["context"] = context_json(ctx);
  j["block"] = o.block;
  j["generators"] = list;
  j["count"] = gens.size();
  emit_json(out, j);
  return kOk;
}

// --- quiver commands -------------------------------------------------------

Presentation build_preset(const Options& o) {
  const Scalars scalars = parse_scalars(o.scalars);
  Presentation pr;
  if (o.preset == "p1") {
    if (!scalars.empty()) throw UsageError("the p1 preset has no scalars");
    pr = build_p1_quiver(o.p, o.window.value_or(4));
  } else if (o.preset == "p2") {
    pr = build_p2_quiver(o.p, o.window.value_or(1), scalars, !o.literal);
  } else if (o.preset == "sl3") {
    pr = build_sl3_quiver(scalars);
  } else {
    throw UsageError("--preset must be one of p1, p2, sl3");
  }
  if (o.max_len) pr.max_len = *o.max_len;
  const std::int64_t cap = max_work() / 100;
  if (static_cast<std::int64_t>(pr.quiver.vertices().size()) > cap)
    throw UsageError("window of " + std::to_string(pr.quiver.vertices().size()) +
                     " vertices exceeds TILTCELL_MAX_WORK/100=" + std::to_string(cap));
  return pr;
}

json scalars_json(const RelationSet& rels) {
  json out = json::object();
  for (const auto& [name, value] : rels.scalars) out[name] = to_string(value);
  return out;
}

std::vector<int> sources_of(const std::vector<std::pair<int, int>>& pairs) {
  std::set<int> s;
  for (const auto& [x, y] : pairs) s.insert(x);
  return {s.begin(), s.end()};
}

// Paths longer than `top` vanish and the top-length basis paths are loops.
Report top_length_check(const Quiver& q, const QuotientDims& dims,
                        const std::vector<std::pair<int, int>>& pairs, int top) {
  Report report{"top-length-loops", std::nullopt, {}};
  for (const auto& [x, y] : pairs) {
    auto it = dims.graded.find({x, y});
    if (it == dims.graded.end()) continue;
    const auto& g = it->second;
    int longest = 0;
    for (int len = 0; len < static_cast<int>(g.size()); ++len)
      if (g[len] != 0) longest = len;
    const bool ok = longest <= top && (longest < top || x == y);
    report.add({{"source", q.vertices()[x].label}, {"target", q.vertices()[y].label}}, longest,
               x == y ? "<= " + std::to_string(top) : "< " + std::to_string(top), ok);
  }
  report.notes["top"] = top;
  return report;
}

std::vector<Report> quiver_reports(const Presentation& pr, const std::string& preset,
                                   std::int64_t p, bool engines) {
  const Quiver& q = pr.quiver;
  const auto pairs = interior_pairs(q, pr.max_len);
  const auto sources = sources_of(pairs);
  std::vector<Report> out;

  const QuotientDims dims = summarize(quotient_space(q, pr.relations, pr.max_len, sources));
  Report saturation{"saturation", std::nullopt, {}};
  const std::set<std::pair<int, int>> interior(pairs.begin(), pairs.end());
  std::int64_t unsaturated = 0;
  for (const auto& key : dims.unsaturated) unsaturated += interior.count(key);
  saturation.add_eq({{"max_len", pr.max_len}}, unsaturated, 0);
  out.push_back(saturation);

  Report cellular = check_against_cellular(q, dims, cellular_oracle(q, preset, p), pairs);
  cellular.notes["scalars"] = scalars_json(pr.relations);
  out.push_back(std::move(cellular));
  if (preset == "p2") out.push_back(top_length_check(q, dims, pairs, 4));

  const QuotientSpace cells =
      quotient_space(q, pr.relations, pr.max_len, sources, Exec::Parallel, ColumnOrder::Cell);
  out.push_back(cell_filtration_check(q, cells, cellular_layer_oracle(q, preset, p), pairs));

  if (engines) {
    RewriteSystem rs(pr.relations);
    out.push_back(check_engines(q, dims, rewriting_dims(q, rs, pr.max_len, sources), pairs));
  }
  return out;
}

int emit_reports(const std::string& command, json header, const std::vector<Report>& reports,
                 bool brief, std::ostream& out) {
  json j = envelope(command);
  j.update(header);
  json list = json::array();
  bool pass = true;
  for (const auto& r : reports) {
    list.push_back(brief_report(r, brief));
    pass = pass && r.passed();
  }
  j["reports"] = list;
  j["pass"] = pass;
  emit_json(out, j);
  return pass ? kOk : kVerificationFailed;
}

int cmd_quiver_build(const Options& o, std::ostream& out) {
  require_format(o, {"json", "dot"});
  const Presentation pr = build_preset(o);
  if (o.format == "dot") {
    out << export_dot(pr.quiver);
    return kOk;
  }
  json j = envelope("quiver-build");
  j["preset"] = o.preset;
  j["vertices"] = pr.quiver.vertices().size();
  j["arrows"] = pr.quiver.arrows().size();
  j["max_len"] = pr.max_len;
  if (auto period = pr.quiver.shift_period()) j["shift_period"] = *period;
  json boundary = json::array();
  for (const auto& v : pr.quiver.vertices())
    if (v.boundary) boundary.push_back(v.label);
  j["boundary"] = boundary;
  j.update(relations_json(pr.quiver, pr.relations));
  emit_json(out, j);
  return kOk;
}

// All {+1, -1} patterns of the nonzero scalars; reports which pass.
int sign_search(const Options& o, std::ostream& out) {
  if (o.preset == "p1") throw UsageError("the p1 preset has no scalars to search");
  const Presentation base = build_preset(o);
  // The loop identification scalars c0a, c0b stay fixed: their sign is absorbed by rescaling.
  std::vector<std::string> names;
  for (const auto& name : base.relations.nonzero)
    if (name.rfind("c0", 0) != 0) names.push_back(name);
  if (names.size() > 12) throw UsageError("too many scalars for an exhaustive sign search");
  json configs = json::array();
  json first = nullptr;
  for (std::uint32_t mask = 0; mask < (1u << names.size()); ++mask) {
    Options trial = o;
    std::string text = o.scalars;
    for (std::size_t i = 0; i < names.size(); ++i)
      text += (text.empty() ? "" : ",") + names[i] + "=" + ((mask >> i) & 1 ? "-1" : "1");
    Scalars merged;
    for (const auto& [k, v] : parse_scalars(text)) merged[k] = v;  // later entries win
    std::string joined;
    for (const auto& [k, v] : merged) joined += (joined.empty() ? "" : ",") + k + "=" + to_string(v);
    trial.scalars = joined;
    const Presentation pr = build_preset(trial);
    bool pass = true;
    std::size_t failures = 0;
    for (const auto& r : quiver_reports(pr, o.preset, o.p, false)) {
      pass = pass && r.passed();
      failures += r.failures();
    }
    configs.push_back({{"scalars", scalars_json(pr.relations)}, {"pass", pass}, {"failures", failures}});
    if (pass && first.is_null()) first = scalars_json(pr.relations);
  }
  json j = envelope("quiver-check");
  j["preset"] = o.preset;
  j["search"] = "signs";
  j["configs"] = configs;
  j["first_passing"] = first;
  j["pass"] = !first.is_null();
  emit_json(out, j);
  return first.is_null() ? kVerificationFailed : kOk;
}

int cmd_quiver_check(const Options& o, std::ostream& out) {
  require_format(o, {"json", "tsv"});
  if (o.search_signs) return sign_search(o, out);
  const Presentation pr = build_preset(o);
  if (o.format == "tsv") {
    const auto pairs = interior_pairs(pr.quiver, pr.max_len);
    out << dims_tsv(pr.quiver, quotient_dims(pr.quiver, pr.relations, pr.max_len, sources_of(pairs)));
    return kOk;
  }
  json header = {{"preset", o.preset}, {"max_len", pr.max_len}, {"literal", o.literal}};
  if (o.preset != "sl3") header["p"] = o.p;
  return emit_reports("quiver-check", header, quiver_reports(pr, o.preset, o.p, o.engines),
                      o.brief, out);
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  require_format(o, {"json", "dot"});
  out << export_dot(build_preset(o).quiver);
  return kOk;
}

// --- verify ----------------------------------------------------------------

void add_sweep(std::vector<Report>& reports, SweepCheck check, const Context& ctx, Weight lo,
               Weight hi) {
  reports.push_back(sweep(check, ctx, lo, hi));
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"json"});
  std::vector<Report> reports;
  json header = {{"suite", o.suite}};
  if (o.suite == "all") {
    for (int p : {3, 5})
      for (int r : {1, 2}) {
        const Context ctx(p, r);
        add_sweep(reports, SweepCheck::Reciprocity, ctx, -2 * ctx.q(), 2 * ctx.q());
        add_sweep(reports, SweepCheck::Linkage, ctx, -4 * ctx.q(), 4 * ctx.q());
      }
    for (int p : {3, 5, 7})
      for (int r : {1, 2, 3}) {
        const Context ctx(p, r);
        add_sweep(reports, SweepCheck::MultFree, ctx, -4 * ctx.q(), 4 * ctx.q());
        add_sweep(reports, SweepCheck::Bounds, ctx, -4 * ctx.q(), 4 * ctx.q());
      }
    for (int p : {3, 5})
      for (int r : {2, 3}) add_sweep(reports, SweepCheck::Steinberg, Context(p, r), -2 * p, 2 * p);
    for (int p : {3, 5}) {
      Options q = o;
      q.p = p;
      for (const char* preset : {"p1", "p2"}) {
        q.preset = preset;
        q.window.reset();
        for (auto& r : quiver_reports(build_preset(q), preset, p, false)) {
          r.notes["preset"] = preset;
          r.notes["p"] = p;
          reports.push_back(std::move(r));
        }
      }
    }
    Options s = o;
    s.preset = "sl3";
    s.scalars.clear();
    for (auto& r : quiver_reports(build_preset(s), "sl3", 0, false)) {
      r.notes["preset"] = "sl3";
      reports.push_back(std::move(r));
    }
    return emit_reports("verify", header, reports, true, out);
  }
  if (o.suite == "quiver") {
    const Presentation pr = build_preset(o);
    header["preset"] = o.preset;
    return emit_reports("verify", header, quiver_reports(pr, o.preset, o.p, o.engines), o.brief,
                        out);
  }
  const auto check = parse_sweep_check(o.suite);
  if (!check)
    throw UsageError("--suite must be one of reciprocity, bounds, linkage, multfree, steinberg, "
                     "quiver, all");
  const Context ctx(o.p, o.r);
  if (*check == SweepCheck::Steinberg && ctx.r() < 2)
    throw UsageError("the steinberg suite needs --r 2 or more");
  const auto [lo, hi] = weight_range(o, ctx);
  add_sweep(reports, *check, ctx, lo, hi);
  return emit_reports("verify", header, reports, o.brief, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tiltcell: tilting characters, Hom dimensions and quiver checks"};
  app.require_subcommand(1);
  Options o;

  auto context_opts = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic (odd prime)");
    sub->add_option("--r", o.r, "Frobenius level (>= 1)");
  };
  auto weight_opts = [&](CLI::App* sub) {
    sub->add_option("--weight", o.weight, "weight lambda");
  };
  auto range_opts = [&](CLI::App* sub) {
    sub->add_option("--lo", o.lo, "lowest weight of the sweep");
    sub->add_option("--hi", o.hi, "highest weight of the sweep");
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, tsv or dot");
  };
  auto quiver_opts = [&](CLI::App* sub) {
    sub->add_option("--preset", o.preset, "p1, p2 or sl3");
    sub->add_option("--p", o.p, "characteristic (odd prime)");
    sub->add_option("--window", o.window, "periods on each side (p2) or P_m range (p1)");
    sub->add_option("--scalars", o.scalars, "name=value,... overrides");
    sub->add_option("--max-len", o.max_len, "truncation length");
    sub->add_flag("--literal", o.literal, "p2 without the loop identification at j = 0 mod p");
  };

  auto* delta = app.add_subcommand("delta-factors", "Delta_r-factors of T_r(weight)");
  context_opts(delta);
  weight_opts(delta);
  format_opt(delta);

  auto* chr = app.add_subcommand("char", "a character as [weight, coeff] pairs");
  context_opts(chr);
  weight_opts(chr);
  format_opt(chr);
  chr->add_option("--kind", o.kind, "tilting, simple, baby-verma or weyl");

  auto* hom = app.add_subcommand("hom-dim", "Hom dimensions between tilting modules");
  context_opts(hom);
  weight_opts(hom);
  range_opts(hom);
  format_opt(hom);
  hom->add_option("--to", o.to, "second weight");
  hom->add_option("--preset", o.preset, "sl3 for the category O table");

  auto* cells = app.add_subcommand("cell-basis", "cellular basis indices of Hom(T(weight), T(to))");
  context_opts(cells);
  weight_opts(cells);
  format_opt(cells);
  cells->add_option("--to", o.to, "target weight (default: weight)");

  auto* gens = app.add_subcommand("generators", "generator sets B_r, B_r(0) or the sl3 set");
  context_opts(gens);
  format_opt(gens);
  gens->add_option("--block", o.block, "all or principal");
  gens->add_option("--preset", o.preset, "sl3 for the category O set");

  auto* build = app.add_subcommand("quiver-build", "build a presentation");
  quiver_opts(build);
  format_opt(build);

  auto* check = app.add_subcommand("quiver-check", "quotient dimensions against cellular counts");
  quiver_opts(check);
  format_opt(check);
  check->add_flag("--engines", o.engines, "also compare the rewriting engine");
  check->add_flag("--search-signs", o.search_signs, "try every +-1 pattern of the scalars");
  check->add_flag("--brief", o.brief, "list failing items only");

  auto* dot = app.add_subcommand("export-dot", "DOT rendering of a presentation");
  quiver_opts(dot);
  dot->add_option("--format", o.format, "dot");

  auto* verify = app.add_subcommand("verify", "verification sweeps");
  context_opts(verify);
  weight_opts(verify);
  range_opts(verify);
  format_opt(verify);
  verify->add_option("--suite", o.suite,
                     "reciprocity, bounds, linkage, multfree, steinberg, quiver or all");
  verify->add_option("--preset", o.preset, "presentation for the quiver suite");
  verify->add_option("--window", o.window, "window for the quiver suite");
  verify->add_option("--scalars", o.scalars, "scalars for the quiver suite");
  verify->add_flag("--engines", o.engines, "quiver suite: compare the rewriting engine");
  verify->add_flag("--brief", o.brief, "list failing items only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream ignored;
    app.exit(e, ignored, err);
    return kUsage;
  }
  if (dot->parsed() && o.format == "json") o.format = "dot";

  try {
    if (delta->parsed()) return cmd_delta_factors(o, out);
    if (chr->parsed()) return cmd_char(o, out);
    if (hom->parsed()) return cmd_hom_dim(o, out);
    if (cells->parsed()) return cmd_cell_basis(o, out);
    if (gens->parsed()) return cmd_generators(o, out);
    if (build->parsed()) return cmd_quiver_build(o, out);
    if (check->parsed()) return cmd_quiver_check(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const NotSaturated& e) {
    err << "error: " << e.what() << " (pass a larger --max-len)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tiltcell::cli
