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

#include "rvg/search.h"

#include <algorithm>
#include <chrono>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "rvg/canonical.h"
#include "rvg/packing_search.h"

namespace rvg {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

// Bumped whenever the kernel's visiting order changes.
constexpr char kKernelVersion[] = "k3";

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> VertexNames(const Graph& g) {
  const int n = g.num_vertices();
  const std::vector<std::string>& labels = g.labels();
  if (static_cast<int>(labels.size()) == n) {
    std::set<std::string> unique(labels.begin(), labels.end());
    if (static_cast<int>(unique.size()) == n && unique.count("") == 0) {
      return labels;
    }
  }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(DefaultVertexName(v));
  return names;
}

// Grid rows run along the box width, so a grid rectangle (column, row) maps
// back by transposition.
Rect FromGrid(const Rect& r) { return Rect{r.y1, r.x1, r.y2, r.x2}; }
Rect ToGrid(const Rect& r) { return Rect{r.y1, r.x1, r.y2, r.x2}; }

absl::StatusOr<Representation> BuildWitness(const Graph& g,
                                            const std::vector<Rect>& rects) {
  const std::vector<std::string> names = VertexNames(g);
  std::vector<NamedRect> named;
  for (int v = 0; v < g.num_vertices(); ++v) named.push_back({names[v], rects[v]});
  absl::StatusOr<Representation> rep = Representation::Create(std::move(named));
  if (!rep.ok()) return absl::InternalError(rep.status().message());
  if (!(VisibilityGraph(*rep).graph == g)) {
    return absl::InternalError("search emitted a witness with the wrong graph");
  }
  return rep;
}

absl::Status CheckGraph(const Graph& g) {
  if (g.num_vertices() > kMaxPackingVertices) {
    return absl::InvalidArgumentError(absl::StrCat(
        "searches support at most ", kMaxPackingVertices, " vertices"));
  }
  return absl::OkStatus();
}

PackingLimits LimitsFor(const SearchConfig& cfg) {
  PackingLimits limits;
  limits.jobs = cfg.jobs;
  limits.max_nodes = cfg.node_budget;
  if (cfg.time_budget_seconds > 0) {
    limits.deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(cfg.time_budget_seconds));
  }
  return limits;
}

absl::StatusOr<BoxResult> RunBox(const Graph& g, Box box, bool exact,
                                 const SearchConfig& cfg) {
  if (absl::Status s = CheckGraph(g); !s.ok()) return s;
  if (box.height < 1 || box.width < 1) {
    return absl::InvalidArgumentError("box sides must be positive");
  }
  const Clock::time_point start = Clock::now();
  const int n = g.num_vertices();
  BoxResult out;
  out.box = box;
  out.exact = exact;
  if (n == 0) {
    out.verdict = exact ? Verdict::kInfeasible : Verdict::kFeasible;
    if (!exact) out.witness = Representation();
    return out;
  }
  if (box.area() < n) {
    out.verdict = Verdict::kInfeasible;
    return out;
  }
  if (g.num_edges() == 0) {
    // Isolated vertices need pairwise disjoint rows and columns.
    const bool fits = exact ? box == Box{n, n} : box.height >= n;
    out.verdict = fits ? Verdict::kFeasible : Verdict::kInfeasible;
    if (fits) {
      std::vector<Rect> diagonal;
      for (int i = 0; i < n; ++i) diagonal.push_back(Rect{i, i, i + 1, i + 1});
      absl::StatusOr<Representation> rep = BuildWitness(g, diagonal);
      if (!rep.ok()) return rep.status();
      out.witness = *std::move(rep);
    }
    return out;
  }

  // Search on the canonical relabelling so that witnesses do not depend on
  // the input's vertex order, cached or not.
  absl::StatusOr<CanonicalForm> form = Canonical(g);
  if (!form.ok()) return form.status();
  const Graph canon = g.Permuted(form->labeling);
  const CacheKey key{form->encoding, box.height, box.width, exact,
                     cfg.Fingerprint()};
  std::vector<Rect> canonical_witness;
  bool have_verdict = false;
  if (cfg.cache != nullptr) {
    if (std::optional<CacheRecord> hit = cfg.cache->Lookup(key)) {
      have_verdict = true;
      out.cached = true;
      out.verdict = hit->feasible ? Verdict::kFeasible : Verdict::kInfeasible;
      canonical_witness = hit->witness;
      out.nodes = hit->nodes;
      out.prunes = hit->prunes;
      if (hit->feasible && static_cast<int>(canonical_witness.size()) != n) {
        have_verdict = false;  // Damaged record; search again.
      }
    }
  }
  if (!have_verdict) {
    PackingProblem problem;
    problem.target = canon;
    problem.rows = box.width;
    problem.cols = box.height;
    problem.exact_box = exact;
    problem.canonical_leaves = cfg.canonical_leaves;
    problem.monotone_edge = cfg.monotone_edge;
    problem.degree_perimeter = cfg.degree_perimeter;
    problem.component_boxes = cfg.component_boxes;
    const PackingResult result = SolvePacking(problem, LimitsFor(cfg));
    out.nodes = result.nodes;
    out.prunes = result.prunes;
    out.cached = false;
    switch (result.outcome) {
      case PackingOutcome::kFound:
        out.verdict = Verdict::kFeasible;
        for (const Rect& r : result.witness) canonical_witness.push_back(FromGrid(r));
        break;
      case PackingOutcome::kExhausted:
        out.verdict = Verdict::kInfeasible;
        break;
      case PackingOutcome::kAborted:
        out.verdict = Verdict::kUnknown;
        break;
    }
    if (cfg.cache != nullptr && out.verdict != Verdict::kUnknown) {
      CacheRecord record{key, out.verdict == Verdict::kFeasible,
                         canonical_witness, out.nodes, out.prunes,
                         std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count()};
      if (absl::Status s = cfg.cache->Append(record); !s.ok()) return s;
    }
  }
  if (out.verdict == Verdict::kFeasible) {
    std::vector<Rect> rects(n);
    for (int v = 0; v < n; ++v) rects[v] = canonical_witness[form->labeling[v]];
    absl::StatusOr<Representation> rep = BuildWitness(g, rects);
    if (!rep.ok()) return rep.status();
    out.witness = *std::move(rep);
  }
  out.seconds = SecondsSince(start);
  return out;
}

void Accumulate(SearchReport& report, BoxResult r) {
  report.nodes += r.nodes;
  report.prunes += r.prunes;
  report.seconds += r.seconds;
  r.witness.reset();
  report.boxes.push_back(std::move(r));
}

}  // namespace

std::string SearchConfig::Fingerprint() const {
  return absl::StrCat(kKernelVersion, ";dp=", degree_perimeter ? 1 : 0,
                      ";me=", monotone_edge ? 1 : 0,
                      ";cl=", canonical_leaves ? 1 : 0);
}

int DefaultMaxWidth(int n) {
  return std::max({n, 2 * CeilSqrt(n) + 2, CompleteWidth(n)});
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kFeasible:
      return "feasible";
    case Verdict::kInfeasible:
      return "infeasible";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "?";
}

const char* ReportStatusName(ReportStatus s) {
  switch (s) {
    case ReportStatus::kProven:
      return "proven";
    case ReportStatus::kUpperBoundOnly:
      return "upper-bound-only";
    case ReportStatus::kInfeasibleUpTo:
      return "infeasible-up-to-caps";
  }
  return "?";
}

absl::StatusOr<BoxResult> DecideFeasible(const Graph& g, int h, int w,
                                         const SearchConfig& cfg) {
  return RunBox(g, Box::Normalized(h, w), /*exact=*/false, cfg);
}

absl::StatusOr<BoxResult> DecideExactBox(const Graph& g, int h, int w,
                                         const SearchConfig& cfg) {
  return RunBox(g, Box::Normalized(h, w), /*exact=*/true, cfg);
}

absl::StatusOr<SearchReport> Minimize(const Graph& g, Parameter p,
                                      const SearchConfig& cfg) {
  const int n = g.num_vertices();
  if (n < 1) return absl::InvalidArgumentError("graph has no vertices");
  if (absl::Status s = CheckGraph(g); !s.ok()) return s;
  absl::StatusOr<CanonicalForm> form = Canonical(g);
  if (!form.ok()) return form.status();
  const ParamBounds bounds = *LowerBounds(n);

  SearchReport report;
  report.graph_id = form->encoding;
  report.n = n;
  report.parameter = p;
  report.max_width = cfg.max_width > 0 ? cfg.max_width : DefaultMaxWidth(n);
  report.max_area =
      cfg.max_area > 0 ? cfg.max_area : report.max_width * report.max_width;
  const int cap = report.max_width;
  const int reach = CompleteWidth(n);
  // A negative answer counts only if it was exhaustive and no needed box
  // was skipped because of the caps.
  bool clean = true;
  bool capped = false;

  auto conclude = [&](BoxResult r, bool width_sensitive) -> bool {
    const bool found = r.verdict == Verdict::kFeasible;
    if (found) {
      report.value = r.box.Value(p);
      report.witness = r.witness;
      const bool proven = clean && !(width_sensitive && capped);
      report.status = proven ? ReportStatus::kProven : ReportStatus::kUpperBoundOnly;
    } else if (r.verdict == Verdict::kUnknown) {
      clean = false;
    }
    Accumulate(report, std::move(r));
    return found;
  };

  switch (p) {
    // Heights and widths also scan exact extents, each at most once: g fits
    // in h x cap iff some squeezed layout has extent a x b with a <= h,
    // b <= cap (a <= b), and the extents with a < h were already ruled out.
    case Parameter::kHeight: {
      capped = cap < reach;
      for (int h = bounds.height_lb; h <= cap; ++h) {
        for (int w = std::max(h, (n + h - 1) / h); w <= std::min(cap, reach); ++w) {
          absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
          if (!r.ok()) return r.status();
          if (conclude(*std::move(r), true)) return report;
        }
      }
      break;
    }
    case Parameter::kWidth: {
      // Extents with both sides below w were ruled out at smaller widths.
      for (int w = bounds.width_lb; w <= cap; ++w) {
        for (int h = (n + w - 1) / w; h <= w; ++h) {
          absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
          if (!r.ok()) return r.status();
          if (conclude(*std::move(r), false)) return report;
        }
      }
      break;
    }
    case Parameter::kArea: {
      for (int a = bounds.area_lb; a <= report.max_area; ++a) {
        for (int h = 1; h * h <= a; ++h) {
          if (a % h != 0) continue;
          const int w = a / h;
          if (w > reach) continue;
          if (w > cap) {
            capped = true;
            continue;
          }
          absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
          if (!r.ok()) return r.status();
          if (conclude(*std::move(r), true)) return report;
        }
      }
      break;
    }
    case Parameter::kPerimeter: {
      for (int s = bounds.perimeter_lb / 2; s <= 2 * cap; ++s) {
        for (int h = 1; 2 * h <= s; ++h) {
          const int w = s - h;
          if (h * w < n || w > reach) continue;
          if (w > cap) {
            capped = true;
            continue;
          }
          absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
          if (!r.ok()) return r.status();
          if (conclude(*std::move(r), true)) return report;
        }
      }
      break;
    }
  }
  report.status = ReportStatus::kInfeasibleUpTo;
  return report;
}

absl::StatusOr<BoxFrontier> ComputeFrontier(const Graph& g,
                                            const SearchConfig& cfg,
                                            std::vector<BoxResult>* log) {
  const int n = g.num_vertices();
  if (n < 1) return absl::InvalidArgumentError("graph has no vertices");
  if (absl::Status s = CheckGraph(g); !s.ok()) return s;
  if (g.num_edges() == 0) return EmptyGraphFrontier(n);
  absl::StatusOr<CanonicalForm> form = Canonical(g);
  if (!form.ok()) return form.status();
  BoxFrontier f;
  f.graph_id = form->encoding;
  f.max_width = cfg.max_width > 0 ? cfg.max_width : DefaultMaxWidth(n);
  f.complete = f.max_width >= CompleteWidth(n);

  auto decide = [&](int h, int w) -> absl::StatusOr<BoxResult> {
    absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
    if (r.ok() && log != nullptr) {
      log->push_back(BoxResult{r->box, r->exact, r->verdict, std::nullopt, r->nodes,
                               r->prunes, r->seconds, r->cached});
    }
    return r;
  };

  // With h <= w, g fits in h x w iff it fits in (h-1) x w, in h x (w-1), or
  // has a squeezed layout of extent exactly h x w. Below the previous
  // height's least width the first alternative is known to fail, so widths
  // are scanned upwards testing each exact extent once.
  // best_w: least width known feasible at a smaller height (0 = none).
  int best_w = 0;
  for (int h = 1; h <= f.max_width; ++h) {
    const int top = best_w == 0 ? f.max_width : best_w - 1;
    if (top < h) break;
    bool gap = false;  // Some narrower extent at this height is undecided.
    for (int w = std::max(h, (n + h - 1) / h); w <= top; ++w) {
      absl::StatusOr<BoxResult> r = decide(h, w);
      if (!r.ok()) return r.status();
      if (r->verdict == Verdict::kUnknown) {
        gap = true;
        f.complete = false;
        continue;
      }
      if (r->verdict == Verdict::kInfeasible) continue;
      f.boxes.push_back(FrontierBox{Box{h, w}, !gap, r->witness});
      best_w = w;
      break;
    }
  }
  return f;
}

namespace {

absl::StatusOr<PackingProblem> CompleteProblem(int n, Box box) {
  if (n < 6 || n > 8) {
    return absl::InvalidArgumentError("complete-graph solver needs 6 <= n <= 8");
  }
  PackingProblem problem;
  problem.target = CompleteGraph(n);
  problem.rows = box.width;
  problem.cols = box.height;
  problem.normal_form = false;
  problem.exact_box = false;
  problem.canonical_leaves = false;
  const int u = box.width;
  const int v = box.height;
  const Rect strips[] = {Rect{1, v - 1, u - 1, v}, Rect{u - 1, 1, u, v},
                         Rect{1, 0, u, 1}, Rect{0, 0, 1, v}};
  for (const Rect& s : strips) problem.preplaced.push_back(ToGrid(s));
  return problem;
}

}  // namespace

absl::StatusOr<BoxResult> SolveComplete(int n, int h, int w,
                                        const SearchConfig& cfg) {
  const Box box = Box::Normalized(h, w);
  const Clock::time_point start = Clock::now();
  BoxResult out;
  out.box = box;
  out.exact = true;
  if (box.height < 3) {
    // The strips leave no interior for the remaining n - 4 >= 2 rectangles.
    if (n < 6 || n > 8) {
      return absl::InvalidArgumentError("complete-graph solver needs 6 <= n <= 8");
    }
    out.verdict = Verdict::kInfeasible;
    return out;
  }
  absl::StatusOr<PackingProblem> problem = CompleteProblem(n, box);
  if (!problem.ok()) return problem.status();
  problem->monotone_edge = cfg.monotone_edge;
  problem->degree_perimeter = cfg.degree_perimeter;
  const PackingResult result = SolvePacking(*problem, LimitsFor(cfg));
  out.nodes = result.nodes;
  out.prunes = result.prunes;
  if (result.outcome == PackingOutcome::kFound) {
    out.verdict = Verdict::kFeasible;
    std::vector<Rect> rects;
    for (const Rect& r : result.witness) rects.push_back(FromGrid(r));
    absl::StatusOr<Representation> rep = BuildWitness(CompleteGraph(n), rects);
    if (!rep.ok()) return rep.status();
    out.witness = *std::move(rep);
  } else {
    out.verdict = result.outcome == PackingOutcome::kExhausted ? Verdict::kInfeasible
                                                               : Verdict::kUnknown;
  }
  out.seconds = SecondsSince(start);
  return out;
}

namespace {

absl::StatusOr<std::vector<Representation>> Collect(const Graph& g,
                                                    const PackingProblem& problem,
                                                    int limit) {
  std::vector<Representation> reps;
  absl::Status error;
  EnumeratePackings(problem, [&](const std::vector<Rect>& witness) {
    std::vector<Rect> rects;
    for (const Rect& r : witness) rects.push_back(FromGrid(r));
    absl::StatusOr<Representation> rep = BuildWitness(g, rects);
    if (!rep.ok()) {
      error = rep.status();
      return false;
    }
    reps.push_back(*std::move(rep));
    return static_cast<int>(reps.size()) < limit;
  });
  if (!error.ok()) return error;
  return reps;
}

}  // namespace

absl::StatusOr<std::vector<Representation>> SampleComplete(int n, int h, int w,
                                                           int limit) {
  absl::StatusOr<PackingProblem> problem = CompleteProblem(n, Box::Normalized(h, w));
  if (!problem.ok()) return problem.status();
  return Collect(CompleteGraph(n), *problem, limit);
}

absl::StatusOr<std::vector<Representation>> SampleRepresentations(
    const Graph& g, int h, int w, int limit) {
  if (absl::Status s = CheckGraph(g); !s.ok()) return s;
  const Box box = Box::Normalized(h, w);
  PackingProblem problem;
  problem.target = g;
  problem.rows = box.width;
  problem.cols = box.height;
  return Collect(g, problem, limit);
}

absl::StatusOr<CatalogEntry> CatalogOne(const Graph& g, const std::string& input,
                                        const SearchConfig& cfg) {
  CatalogEntry entry;
  entry.input = input;
  entry.n = g.num_vertices();
  absl::StatusOr<BoxFrontier> f = ComputeFrontier(g, cfg);
  if (!f.ok()) return f.status();
  entry.frontier = *std::move(f);
  entry.graph_id = entry.frontier.graph_id;
  entry.values = ParametersFromFrontier(entry.frontier);
  for (Parameter p : kAllParameters) {
    const int i = static_cast<int>(p);
    for (const FrontierBox& b : entry.frontier.boxes) {
      if (b.box == entry.values[i].box) entry.witnesses[i] = b.witness;
    }
  }
  return entry;
}

namespace {

ordered_json RepJson(const Representation& rep) {
  ordered_json rects = ordered_json::array();
  for (const NamedRect& r : rep.rects()) {
    rects.push_back(ordered_json{{"name", r.name},
                                 {"x1", r.rect.x1},
                                 {"y1", r.rect.y1},
                                 {"x2", r.rect.x2},
                                 {"y2", r.rect.y2}});
  }
  return ordered_json{{"width", rep.box_width()},
                      {"height", rep.box_height()},
                      {"rects", rects}};
}

ordered_json FrontierJson(const BoxFrontier& f) {
  ordered_json boxes = ordered_json::array();
  for (const FrontierBox& b : f.boxes) {
    ordered_json entry{{"height", b.box.height},
                       {"width", b.box.width},
                       {"proven", b.proven}};
    if (b.witness.has_value()) entry["witness"] = RepJson(*b.witness);
    boxes.push_back(entry);
  }
  return ordered_json{{"graph", f.graph_id},
                      {"complete", f.complete},
                      {"max_width", f.max_width},
                      {"boxes", boxes}};
}

}  // namespace

std::string ReportToJson(const SearchReport& r, bool with_timing) {
  ordered_json boxes = ordered_json::array();
  for (const BoxResult& b : r.boxes) {
    ordered_json entry{{"height", b.box.height},
                       {"width", b.box.width},
                       {"exact", b.exact},
                       {"verdict", VerdictName(b.verdict)},
                       {"nodes", b.nodes}};
    if (with_timing) entry["seconds"] = b.seconds;
    boxes.push_back(entry);
  }
  ordered_json j{{"graph", r.graph_id},
                 {"n", r.n},
                 {"parameter", ParameterName(r.parameter)},
                 {"status", ReportStatusName(r.status)}};
  if (r.status != ReportStatus::kInfeasibleUpTo) j["value"] = r.value;
  j["max_width"] = r.max_width;
  j["max_area"] = r.max_area;
  j["nodes"] = r.nodes;
  j["prunes"] = r.prunes;
  if (with_timing) j["seconds"] = r.seconds;
  j["boxes"] = boxes;
  if (r.witness.has_value()) j["witness"] = RepJson(*r.witness);
  return j.dump(2);
}

std::string FrontierToJson(const BoxFrontier& f) { return FrontierJson(f).dump(2); }

std::string CatalogEntryToJson(const CatalogEntry& e) {
  ordered_json values;
  for (Parameter p : kAllParameters) {
    const ParamValue& v = e.values[static_cast<int>(p)];
    values[ParameterName(p)] = ordered_json{
        {"value", v.value},
        {"proven", v.proven},
        {"box", ordered_json::array({v.box.height, v.box.width})}};
  }
  ordered_json j{{"input", e.input},
                 {"graph", e.graph_id},
                 {"n", e.n},
                 {"values", values},
                 {"frontier", FrontierJson(e.frontier)}};
  return j.dump();
}

}  // namespace rvg
