// Copyright 2026 The rvgkit Authors
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

// rvg: command-line front end.
//
// JSON goes to stdout, a short summary to stderr. Exit codes: 0 ok, 1
// malformed input, 2 internal inconsistency or failed claim, 3 result limited
// by a width cap or time budget.

#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "rvg/analysis.h"
#include "rvg/cache.h"
#include "rvg/canonical.h"
#include "rvg/fixtures.h"
#include "rvg/graph6.h"
#include "rvg/named_graphs.h"
#include "rvg/rep_io.h"
#include "rvg/search.h"
#include "rvg/svg.h"
#include "rvg/verify.h"

namespace rvg {
namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kInconsistent = 2;
constexpr int kCapped = 3;

struct Globals {
  int max_width = 0;
  double time_budget = 60;
  int jobs = 1;
  std::string cache_dir;
  bool timing = false;
};

int Error(int code, const std::string& message) {
  std::cerr << "rvg: " << message << "\n";
  return code;
}

void Emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// `path`, or `path`.json when only that exists.
std::string ResolveRepPath(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  const std::string with_ext = path + ".json";
  if (std::filesystem::exists(with_ext)) return with_ext;
  return path;
}

std::string BoxText(const Box& b) { return absl::StrCat(b.height, "x", b.width); }

ordered_json BoxJson(const Box& b) { return ordered_json::array({b.height, b.width}); }

ordered_json RepJson(const Representation& rep) {
  return ordered_json::parse(WriteRepresentation(rep));
}

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g) {}

  // Builds the search config; opens the cache when a directory is given.
  absl::Status Setup() {
    cfg_.max_width = g_.max_width;
    cfg_.time_budget_seconds = g_.time_budget;
    cfg_.jobs = g_.jobs;
    const std::string dir = ResolveCacheDir(g_.cache_dir);
    if (!dir.empty()) {
      absl::StatusOr<std::unique_ptr<ResultsCache>> c = ResultsCache::Open(dir);
      if (!c.ok()) return c.status();
      cache_ = *std::move(c);
      cfg_.cache = cache_.get();
    }
    return absl::OkStatus();
  }

  int Check(const std::string& file) {
    const std::string path = ResolveRepPath(file);
    absl::StatusOr<Representation> rep = ReadRepresentationFile(path);
    if (!rep.ok()) return Error(kMalformed, std::string(rep.status().message()));
    const TaggedGraph tg = VisibilityGraph(*rep);
    const Box box = Box::Normalized(rep->box_height(), rep->box_width());
    ordered_json out{{"file", path},
                     {"valid", true},
                     {"n", rep->size()},
                     {"edges", tg.graph.num_edges()},
                     {"graph6", ToGraph6(tg.graph)},
                     {"box", BoxJson(box)}};
    std::string named;
    for (const char* candidate : {"K6", "K7", "K8"}) {
      absl::StatusOr<Graph> k = NamedGraph(candidate);
      absl::StatusOr<bool> same = Isomorphic(tg.graph, *k);
      if (same.ok() && *same) named = candidate;
    }
    if (!named.empty()) out["graph"] = named;
    // A file inside the fixture directory is also checked against its
    // manifest entry.
    int code = kOk;
    const std::filesystem::path p(path);
    const std::string dir = p.parent_path().empty() ? "." : p.parent_path().string();
    if (std::filesystem::exists(std::filesystem::path(dir) / "manifest.json")) {
      absl::StatusOr<std::vector<Fixture>> all = LoadFixtures(dir);
      if (!all.ok()) {
        out["fixture_error"] = std::string(all.status().message());
        code = kInconsistent;
      } else if (absl::StatusOr<Fixture> f = FindFixture(*all, p.stem().string()); f.ok()) {
        out["fixture"] = ordered_json{{"id", f->id},
                                      {"graph", f->graph_spec},
                                      {"declared_box", BoxJson(f->box)},
                                      {"provenance", ProvenanceName(f->provenance)},
                                      {"matches", true}};
      }
    }
    Emit(out);
    std::cerr << path << ": valid, n=" << rep->size() << ", "
              << tg.graph.num_edges() << " edges"
              << (named.empty() ? "" : absl::StrCat(", graph ", named)) << ", box "
              << BoxText(box) << "\n";
    return code;
  }

  int GraphOf(const std::string& file) {
    absl::StatusOr<Representation> rep = ReadRepresentationFile(ResolveRepPath(file));
    if (!rep.ok()) return Error(kMalformed, std::string(rep.status().message()));
    const TaggedGraph tg = VisibilityGraph(*rep);
    ordered_json edges = ordered_json::array();
    for (const SightEdge& e : tg.edges) {
      edges.push_back(ordered_json{
          {"a", rep->name(e.a)},
          {"b", rep->name(e.b)},
          {"orientation", e.orientation == Orientation::kHorizontal ? "horizontal"
                                                                    : "vertical"},
          {"lane", e.lane}});
    }
    absl::StatusOr<CanonicalForm> canon = Canonical(tg.graph);
    ordered_json out{{"n", rep->size()},
                     {"graph6", ToGraph6(tg.graph)},
                     {"canonical", canon.ok() ? canon->encoding : ""},
                     {"edges", edges}};
    Emit(out);
    std::cerr << rep->size() << " vertices, " << tg.edges.size() << " edges\n";
    return kOk;
  }

  int Solve(const std::string& spec, const std::string& param) {
    absl::StatusOr<Graph> g = ParseGraphArgument(spec);
    if (!g.ok()) return Error(kMalformed, std::string(g.status().message()));
    absl::StatusOr<Parameter> p = ParseParameter(param);
    if (!p.ok()) return Error(kMalformed, std::string(p.status().message()));
    absl::StatusOr<SearchReport> r = Minimize(*g, *p, cfg_);
    if (!r.ok()) return Error(kMalformed, std::string(r.status().message()));
    std::cout << ReportToJson(*r, g_.timing) << "\n";
    std::cerr << ParameterName(*p) << "(" << spec << ") ";
    switch (r->status) {
      case ReportStatus::kProven:
        std::cerr << "= " << r->value << " (proven)\n";
        return kOk;
      case ReportStatus::kUpperBoundOnly:
        std::cerr << "<= " << r->value << " (caps reached below)\n";
        return kCapped;
      case ReportStatus::kInfeasibleUpTo:
        std::cerr << ": no representation within width " << r->max_width << "\n";
        return kCapped;
    }
    return kInconsistent;
  }

  int Feasible(const std::string& spec, const std::string& box_text) {
    absl::StatusOr<Graph> g = ParseGraphArgument(spec);
    if (!g.ok()) return Error(kMalformed, std::string(g.status().message()));
    std::vector<std::string> parts = absl::StrSplit(box_text, absl::ByAnyChar("xX"));
    int h = 0, w = 0;
    if (parts.size() != 2 || !absl::SimpleAtoi(parts[0], &h) ||
        !absl::SimpleAtoi(parts[1], &w) || h < 1 || w < 1) {
      return Error(kMalformed, absl::StrCat("bad box '", box_text, "'; want HxW"));
    }
    absl::StatusOr<BoxResult> r = DecideFeasible(*g, h, w, cfg_);
    if (!r.ok()) return Error(kMalformed, std::string(r.status().message()));
    ordered_json out{{"box", ordered_json::array({h, w})},
                     {"verdict", VerdictName(r->verdict)},
                     {"nodes", r->nodes},
                     {"prunes", r->prunes}};
    if (r->witness.has_value()) out["witness"] = RepJson(*r->witness);
    if (g_.timing) out["seconds"] = r->seconds;
    Emit(out);
    std::cerr << spec << " in " << h << "x" << w << ": " << VerdictName(r->verdict) << "\n";
    return r->verdict == Verdict::kUnknown ? kCapped : kOk;
  }

  int Frontier(const std::string& spec) {
    absl::StatusOr<Graph> g = ParseGraphArgument(spec);
    if (!g.ok()) return Error(kMalformed, std::string(g.status().message()));
    absl::StatusOr<BoxFrontier> f = ComputeFrontier(*g, cfg_);
    if (!f.ok()) return Error(kMalformed, std::string(f.status().message()));
    std::cout << FrontierToJson(*f) << "\n";
    std::cerr << "frontier(" << spec << "):";
    for (const FrontierBox& b : f->boxes) std::cerr << " " << BoxText(b.box);
    std::cerr << (f->complete ? " (complete)" : " (within caps)") << "\n";
    return f->complete ? kOk : kCapped;
  }

  int Compose(const std::string& a, const std::string& b) {
    absl::StatusOr<Graph> ga = ParseGraphArgument(a);
    if (!ga.ok()) return Error(kMalformed, std::string(ga.status().message()));
    absl::StatusOr<Graph> gb = ParseGraphArgument(b);
    if (!gb.ok()) return Error(kMalformed, std::string(gb.status().message()));
    absl::StatusOr<BoxFrontier> fa = ComputeFrontier(*ga, cfg_);
    if (!fa.ok()) return Error(kMalformed, std::string(fa.status().message()));
    absl::StatusOr<BoxFrontier> fb = ComputeFrontier(*gb, cfg_);
    if (!fb.ok()) return Error(kMalformed, std::string(fb.status().message()));
    absl::StatusOr<Composition> c = ComposeDisjoint(*fa, *fb);
    if (!c.ok()) return Error(kInconsistent, std::string(c.status().message()));
    ordered_json values = ordered_json::object();
    bool proven = true;
    for (Parameter p : kAllParameters) {
      const ComposedValue& v = c->values[static_cast<int>(p)];
      ordered_json entry{{"value", v.result.value},
                         {"proven", v.result.proven},
                         {"box", BoxJson(v.result.box)},
                         {"first", BoxJson(v.first)},
                         {"second", BoxJson(v.second)}};
      if (v.witness.has_value()) entry["witness"] = RepJson(*v.witness);
      values[ParameterName(p)] = entry;
      proven &= v.result.proven;
      std::cerr << ParameterName(p) << "(" << a << " + " << b << ") = " << v.result.value
                << (v.result.proven ? "" : " (upper bound)") << "\n";
    }
    const BoxFrontier joint = ComposeFrontiers(*fa, *fb);
    Emit(ordered_json{{"values", values},
                      {"frontier", ordered_json::parse(FrontierToJson(joint))}});
    return proven ? kOk : kCapped;
  }

  int Bounds(int n) {
    absl::StatusOr<ParamBounds> b = LowerBounds(n);
    if (!b.ok()) return Error(kMalformed, std::string(b.status().message()));
    ordered_json boxes = ordered_json::array();
    for (const Box& e : PerimeterEqualityBoxes(n)) boxes.push_back(BoxJson(e));
    Emit(ordered_json{{"n", n},
                      {"height", b->height_lb},
                      {"width", b->width_lb},
                      {"area", b->area_lb},
                      {"perimeter", b->perimeter_lb},
                      {"perimeter_equality_boxes", boxes}});
    std::cerr << "n=" << n << ": height >= " << b->height_lb << ", width >= "
              << b->width_lb << ", area >= " << b->area_lb << ", perimeter >= "
              << b->perimeter_lb << "\n";
    return kOk;
  }

  int Catalog(const std::string& file) {
    absl::StatusOr<std::string> text = ReadTextFile(file);
    if (!text.ok()) return Error(kMalformed, std::string(text.status().message()));
    std::istringstream in(*text);
    std::string line;
    ordered_json entries = ordered_json::array();
    int code = kOk, count = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      absl::StatusOr<Graph> g = FromGraph6(line);
      if (!g.ok()) {
        return Error(kMalformed, absl::StrCat("line '", line, "': ", g.status().message()));
      }
      absl::StatusOr<CatalogEntry> e = CatalogOne(*g, line, cfg_);
      if (!e.ok()) return Error(kMalformed, std::string(e.status().message()));
      for (const ParamValue& v : e->values) {
        if (!v.proven) code = kCapped;
      }
      entries.push_back(ordered_json::parse(CatalogEntryToJson(*e)));
      ++count;
    }
    Emit(entries);
    std::cerr << count << " graphs catalogued"
              << (code == kCapped ? "; some values are upper bounds only" : "") << "\n";
    return code;
  }

  int VerifyPaper(const std::vector<std::string>& claims, int k7_width, int k8_width,
                  int claim_jobs) {
    VerifyOptions o;
    o.search = cfg_;
    o.k7_height_width = k7_width;
    o.k8_height_width = k8_width;
    o.claim_jobs = claim_jobs;
    absl::StatusOr<VerificationReport> r = VerifyClaims(claims, o);
    if (!r.ok()) return Error(kMalformed, std::string(r.status().message()));
    std::cout << VerificationReportToJson(*r, g_.timing) << "\n";
    for (const ClaimResult& c : r->claims) {
      std::cerr << ClaimStatusName(c.status) << "  " << c.id << "\n";
      for (const std::string& d : c.details) std::cerr << "    " << d << "\n";
    }
    return VerificationExitCode(*r);
  }

  int Render(const std::string& file, const std::string& out, bool sight_lines, int cell) {
    absl::StatusOr<Representation> rep = ReadRepresentationFile(ResolveRepPath(file));
    if (!rep.ok()) return Error(kMalformed, std::string(rep.status().message()));
    SvgOptions options;
    options.sight_lines = sight_lines;
    options.cell = cell;
    const std::string svg = RenderSvg(*rep, options);
    if (absl::Status s = WriteTextFile(out, svg); !s.ok()) {
      return Error(kMalformed, std::string(s.message()));
    }
    Emit(ordered_json{{"out", out}, {"bytes", svg.size()}});
    std::cerr << "wrote " << out << "\n";
    return kOk;
  }

 private:
  const Globals& g_;
  SearchConfig cfg_;
  std::unique_ptr<ResultsCache> cache_;
};

int Main(int argc, char** argv) {
  CLI::App app{"Rectangle visibility graphs: checking, exact search, verification"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-width", g.max_width, "Width cap for searches (0: default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--time-budget", g.time_budget,
                 "Seconds per box search (<= 0: unlimited)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "Results cache directory")
      ->envname("RVG_CACHE_DIR");
  app.add_flag("--timing", g.timing, "Include wall-clock fields in the JSON");

  std::string rep_file, graph_a, graph_b, param, box, out, catalog_file;
  int n = 0, k7_width = 0, k8_width = 0, claim_jobs = 1, cell = 40;
  bool sight_lines = false;
  std::vector<std::string> claims;

  CLI::App* check = app.add_subcommand("check", "Validate a representation file");
  check->add_option("rep", rep_file)->required();
  CLI::App* graph = app.add_subcommand("graph", "Visibility graph of a representation");
  graph->add_option("rep", rep_file)->required();
  CLI::App* solve = app.add_subcommand("solve", "Minimize one parameter");
  solve->add_option("graph", graph_a, "Name, graph6, edge list or file")->required();
  solve->add_option("--param", param, "height, width, area or perimeter")->required();
  CLI::App* feasible = app.add_subcommand("feasible", "Decide one box");
  feasible->add_option("graph", graph_a)->required();
  feasible->add_option("--box", box, "HxW")->required();
  CLI::App* frontier = app.add_subcommand("frontier", "Minimal feasible boxes");
  frontier->add_option("graph", graph_a)->required();
  CLI::App* compose = app.add_subcommand("compose", "Parameters of a disjoint union");
  compose->add_option("a", graph_a)->required();
  compose->add_option("b", graph_b)->required();
  CLI::App* bounds = app.add_subcommand("bounds", "Lower bounds for n vertices");
  bounds->add_option("n", n)->required()->check(CLI::PositiveNumber);
  CLI::App* catalog = app.add_subcommand("catalog", "All parameters of each graph");
  catalog->add_option("file", catalog_file, "One graph6 string per line")->required();
  CLI::App* verify = app.add_subcommand("verify-paper", "Run the claim suite");
  verify->add_option("--claims", claims, "Claim ids (default: all)")->delimiter(',');
  verify->add_option("--k7-height-width", k7_width, "Width cap for the K7 height check");
  verify->add_option("--k8-height-width", k8_width, "Width cap for the K8 height check");
  verify->add_option("--claim-jobs", claim_jobs, "Claims run concurrently")
      ->check(CLI::PositiveNumber);
  CLI::App* render = app.add_subcommand("render", "Draw a representation as SVG");
  render->add_option("rep", rep_file)->required();
  render->add_option("--out", out)->required();
  render->add_flag("--sight-lines", sight_lines, "Draw one witness lane per edge");
  render->add_option("--cell", cell, "Pixels per unit")->check(CLI::PositiveNumber);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  Runner runner(g);
  if (absl::Status s = runner.Setup(); !s.ok()) {
    return Error(kMalformed, std::string(s.message()));
  }
  if (*check) return runner.Check(rep_file);
  if (*graph) return runner.GraphOf(rep_file);
  if (*solve) return runner.Solve(graph_a, param);
  if (*feasible) return runner.Feasible(graph_a, box);
  if (*frontier) return runner.Frontier(graph_a);
  if (*compose) return runner.Compose(graph_a, graph_b);
  if (*bounds) return runner.Bounds(n);
  if (*catalog) return runner.Catalog(catalog_file);
  if (*verify) return runner.VerifyPaper(claims, k7_width, k8_width, claim_jobs);
  if (*render) return runner.Render(rep_file, out, sight_lines, cell);
  return kMalformed;
}

}  // namespace
}  // namespace rvg

int main(int argc, char** argv) { return rvg::Main(argc, argv); }
