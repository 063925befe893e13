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

#include "rvg/verify.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "json.hpp"
#include "rvg/analysis.h"
#include "rvg/canonical.h"
#include "rvg/graph6.h"
#include "rvg/named_graphs.h"
#include "rvg/planarity.h"
#include "rvg/raster_oracle.h"
#include "rvg/rep_io.h"
#include "rvg/sampling.h"
#include "rvg/transforms.h"

namespace rvg {
namespace {

using nlohmann::ordered_json;

// Accumulates the outcome of one claim.
class Tracker {
 public:
  void Note(std::string line) { details_.push_back(std::move(line)); }
  void Fail(const std::string& line) {
    status_ = ClaimStatus::kFailed;
    details_.push_back(absl::StrCat("FAILED: ", line));
  }
  void Cap(const std::string& line) {
    if (status_ == ClaimStatus::kVerified) status_ = ClaimStatus::kVerifiedCapped;
    details_.push_back(absl::StrCat("capped: ", line));
  }
  // Records a search error as a failure.
  bool Check(const absl::Status& s, const std::string& what) {
    if (s.ok()) return true;
    Fail(absl::StrCat(what, ": ", s.ToString()));
    return false;
  }

  ordered_json& evidence() { return evidence_; }

  ClaimResult Finish(std::string id, std::string anchor) {
    ClaimResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = status_;
    r.details = std::move(details_);
    r.evidence = evidence_.dump();
    return r;
  }

 private:
  ClaimStatus status_ = ClaimStatus::kVerified;
  std::vector<std::string> details_;
  ordered_json evidence_ = ordered_json::object();
};

std::string BoxText(const Box& b) { return absl::StrCat(b.height, "x", b.width); }

ordered_json RepJson(const Representation& rep) {
  return ordered_json::parse(WriteRepresentation(rep));
}

ordered_json FrontierBoxes(const BoxFrontier& f) {
  ordered_json out = ordered_json::array();
  for (const FrontierBox& b : f.boxes) {
    out.push_back(ordered_json::array({b.box.height, b.box.width}));
  }
  return out;
}

std::string FrontierText(const BoxFrontier& f) {
  std::vector<std::string> parts;
  for (const FrontierBox& b : f.boxes) parts.push_back(BoxText(b.box));
  return absl::StrCat("{", absl::StrJoin(parts, ", "), "}");
}

// Minimize(g, p) must prove `expected`.
void ExpectValue(Tracker& t, const std::string& name, const Graph& g, Parameter p,
                 int expected, const SearchConfig& cfg, ordered_json& log) {
  absl::StatusOr<SearchReport> r = Minimize(g, p, cfg);
  const std::string what = absl::StrCat(ParameterName(p), "(", name, ")");
  if (!t.Check(r.status(), what)) return;
  log.push_back(ordered_json::parse(ReportToJson(*r, false)));
  switch (r->status) {
    case ReportStatus::kProven:
      if (r->value == expected) {
        t.Note(absl::StrCat(what, " = ", r->value, " proven"));
      } else {
        t.Fail(absl::StrCat(what, " = ", r->value, ", expected ", expected));
      }
      return;
    case ReportStatus::kUpperBoundOnly:
      if (r->value < expected) {
        t.Fail(absl::StrCat(what, " <= ", r->value, ", expected ", expected));
      } else if (r->value > expected) {
        t.Fail(absl::StrCat(what, ": no witness at ", expected, " within caps"));
      } else {
        t.Cap(absl::StrCat(what, " = ", r->value,
                           " found; smaller boxes not all exhausted"));
      }
      return;
    case ReportStatus::kInfeasibleUpTo:
      t.Fail(absl::StrCat(what, ": no representation within caps"));
      return;
  }
}

// Decides g in h x w and compares with the expectation.
void ExpectBox(Tracker& t, const std::string& name, const Graph& g, int h, int w,
               bool feasible, const SearchConfig& cfg, ordered_json& log) {
  absl::StatusOr<BoxResult> r = DecideFeasible(g, h, w, cfg);
  const std::string what = absl::StrCat(name, " in ", h, "x", w);
  if (!t.Check(r.status(), what)) return;
  log.push_back(ordered_json{{"graph", name},
                             {"box", ordered_json::array({h, w})},
                             {"verdict", VerdictName(r->verdict)},
                             {"nodes", r->nodes}});
  if (r->verdict == Verdict::kUnknown) {
    t.Cap(absl::StrCat(what, " undecided within the time budget"));
  } else if ((r->verdict == Verdict::kFeasible) != feasible) {
    t.Fail(absl::StrCat(what, " is ", VerdictName(r->verdict)));
  } else {
    t.Note(absl::StrCat(what, ": ", VerdictName(r->verdict)));
  }
}

// Frontier must be complete and equal `expected`.
void ExpectFrontier(Tracker& t, const std::string& name, const Graph& g,
                    const std::vector<Box>& expected, const SearchConfig& cfg,
                    ordered_json& log) {
  absl::StatusOr<BoxFrontier> f = ComputeFrontier(g, cfg);
  if (!t.Check(f.status(), absl::StrCat("frontier(", name, ")"))) return;
  log.push_back(ordered_json{{"graph", name}, {"frontier", FrontierBoxes(*f)}});
  std::vector<Box> got;
  for (const FrontierBox& b : f->boxes) got.push_back(b.box);
  if (got != expected) {
    t.Fail(absl::StrCat("frontier(", name, ") = ", FrontierText(*f)));
  } else if (!f->complete) {
    t.Cap(absl::StrCat("frontier(", name, ") = ", FrontierText(*f), " within caps"));
  } else {
    t.Note(absl::StrCat("frontier(", name, ") = ", FrontierText(*f)));
  }
}

std::string FixtureDir(const VerifyOptions& o) {
  return o.fixture_dir.empty() ? DefaultFixtureDir() : o.fixture_dir;
}

// Loads one fixture (which checks it) and records the outcome.
std::optional<Fixture> LoadChecked(Tracker& t, const VerifyOptions& o,
                                   const std::string& id) {
  absl::StatusOr<std::vector<Fixture>> all = LoadFixtures(FixtureDir(o));
  if (!t.Check(all.status(), "fixtures")) return std::nullopt;
  absl::StatusOr<Fixture> f = FindFixture(*all, id);
  if (!t.Check(f.status(), id)) return std::nullopt;
  t.Note(absl::StrCat("fixture ", id, " (", ProvenanceName(f->provenance),
                      "): valid, represents ", f->graph_spec, ", box ",
                      BoxText(f->box)));
  return *f;
}

// Connected graphs with n <= 5 and their catalog entries.
std::vector<std::pair<Graph, CatalogEntry>> SmallCatalog(Tracker& t,
                                                         const SearchConfig& cfg) {
  std::vector<std::pair<Graph, CatalogEntry>> out;
  for (int n = 1; n <= 5; ++n) {
    absl::StatusOr<std::vector<Graph>> graphs = AllGraphs(n, true);
    if (!t.Check(graphs.status(), "graph list")) return out;
    for (const Graph& g : *graphs) {
      absl::StatusOr<CatalogEntry> e = CatalogOne(g, ToGraph6(g), cfg);
      if (!t.Check(e.status(), absl::StrCat("catalog ", ToGraph6(g)))) continue;
      out.emplace_back(g, *std::move(e));
    }
  }
  return out;
}

ClaimResult OracleClaim(const VerifyOptions& o) {
  Tracker t;
  std::mt19937_64 rng(o.seed);
  int mismatches = 0;
  for (int i = 0; i < o.oracle_samples; ++i) {
    const Representation rep = RandomRepresentation(rng, 8, 8);
    if (!(VisibilityGraph(rep).graph == RasterVisibilityGraph(rep))) {
      if (mismatches++ == 0) {
        t.Fail(absl::StrCat("sample ", i, " differs: ", WriteRepresentation(rep)));
      }
    }
  }
  t.Note(absl::StrCat(o.oracle_samples, " random representations (n <= 8, box <= 8x8), ",
                      mismatches, " mismatches"));
  t.evidence() = ordered_json{{"samples", o.oracle_samples}, {"mismatches", mismatches}};
  return t.Finish("oracle-equivalence", "definition of lines of sight");
}

ClaimResult SeparatingPairsClaim(const VerifyOptions& o) {
  Tracker t;
  ordered_json log = ordered_json::array();
  const SearchConfig& cfg = o.search;
  const int p6[] = {1, 4, 6, 14};
  const int c6[] = {2, 3, 8, 12};
  for (Parameter p : kAllParameters) {
    ExpectValue(t, "P6", PathGraph(6), p, p6[static_cast<int>(p)], cfg, log);
  }
  for (Parameter p : kAllParameters) {
    ExpectValue(t, "C6", CycleGraph(6), p, c6[static_cast<int>(p)], cfg, log);
  }
  ExpectValue(t, "G1", G1Graph(), Parameter::kHeight, 2, cfg, log);
  ExpectValue(t, "G1", G1Graph(), Parameter::kArea, 10, cfg, log);
  ExpectValue(t, "G2", G2Graph(), Parameter::kHeight, 3, cfg, log);
  ExpectValue(t, "G2", G2Graph(), Parameter::kArea, 9, cfg, log);
  t.evidence()["reports"] = log;
  return t.Finish("separating-pairs",
                  "table of graph pairs ordered oppositely (P6, C6, G1, G2)");
}

ClaimResult SeparatingRepresentationsClaim(const VerifyOptions& o) {
  Tracker t;
  ordered_json log = ordered_json::array();
  const SearchConfig& cfg = o.search;
  const Graph star = StarGraph(4);
  const int k14[] = {2, 3, 9, 12};
  for (Parameter p : kAllParameters) {
    ExpectValue(t, "K1,4", star, p, k14[static_cast<int>(p)], cfg, log);
  }
  ExpectFrontier(t, "K1,4", star, {Box{2, 5}, Box{3, 3}}, cfg, log);

  const Graph g5 = G5Graph();
  const int g5v[] = {2, 4, 10, 14};
  for (Parameter p : kAllParameters) {
    ExpectValue(t, "G5", g5, p, g5v[static_cast<int>(p)], cfg, log);
  }
  ExpectBox(t, "G5", g5, 3, 4, false, cfg, log);
  ExpectBox(t, "G5", g5, 3, 3, false, cfg, log);
  ExpectBox(t, "G5", g5, 2, 4, false, cfg, log);
  ExpectBox(t, "G5", g5, 4, 4, true, cfg, log);
  ExpectFrontier(t, "G5", g5, {Box{2, 5}, Box{4, 4}}, cfg, log);

  const Graph g6 = G6Graph();
  ExpectValue(t, "G6", g6, Parameter::kArea, 14, cfg, log);
  ExpectValue(t, "G6", g6, Parameter::kPerimeter, 16, cfg, log);
  ExpectBox(t, "G6", g6, 2, 7, true, cfg, log);
  ExpectBox(t, "G6", g6, 4, 4, true, cfg, log);
  ExpectBox(t, "G6", g6, 2, 6, false, cfg, log);
  absl::StatusOr<BoxFrontier> f = ComputeFrontier(g6, cfg);
  if (t.Check(f.status(), "frontier(G6)")) {
    log.push_back(ordered_json{{"graph", "G6"}, {"frontier", FrontierBoxes(*f)}});
    const bool both = std::any_of(f->boxes.begin(), f->boxes.end(), [](const FrontierBox& b) {
      return b.box.area() <= 14 && b.box.perimeter() <= 16;
    });
    if (both) {
      t.Fail("some G6 box has area 14 and perimeter 16 together");
    } else if (!f->complete) {
      t.Cap(absl::StrCat("frontier(G6) = ", FrontierText(*f), " within caps"));
    } else {
      t.Note(absl::StrCat("frontier(G6) = ", FrontierText(*f),
                          "; no box attains area 14 and perimeter 16 together"));
    }
  }
  t.evidence()["reports"] = log;
  return t.Finish("separating-representations",
                  "table of representations minimizing each parameter (K1,4, G5, G6)");
}

ClaimResult BoundsClaim(const VerifyOptions& o) {
  Tracker t;
  int mismatches = 0;
  for (int n = 1; n <= 500; ++n) {
    // Exhaustive: every box h <= w with room for n unit squares.
    int height = INT_MAX, width = INT_MAX, area = INT_MAX, perimeter = INT_MAX;
    std::vector<Box> best;
    for (int h = 1; h <= n; ++h) {
      for (int w = h; w <= n; ++w) {
        if (h * w < n) continue;
        const Box b{h, w};
        height = std::min(height, h);
        width = std::min(width, w);
        area = std::min(area, b.area());
        if (b.perimeter() < perimeter) {
          perimeter = b.perimeter();
          best.clear();
        }
        if (b.perimeter() == perimeter) best.push_back(b);
        break;  // Larger w only grows every parameter.
      }
    }
    const ParamBounds lb = *LowerBounds(n);
    const ParamBounds direct{height, width, area, perimeter};
    const bool same = lb.height_lb == direct.height_lb && lb.width_lb == direct.width_lb &&
                      lb.area_lb == direct.area_lb &&
                      lb.perimeter_lb == direct.perimeter_lb &&
                      PerimeterEqualityBoxes(n) == best;
    if (!same && mismatches++ == 0) t.Fail(absl::StrCat("closed form differs at n = ", n));
  }
  t.Note(absl::StrCat("n in [1, 500]: ", mismatches, " mismatches with box enumeration"));
  ordered_json examples = ordered_json::array();
  for (auto [n, perimeter, boxes] :
       std::vector<std::tuple<int, int, std::vector<Box>>>{
           {70, 34, {Box{7, 10}, Box{8, 9}}}, {120, 44, {Box{10, 12}, Box{11, 11}}}}) {
    const int got = LowerBounds(n)->perimeter_lb;
    const std::vector<Box> eq = PerimeterEqualityBoxes(n);
    ordered_json list = ordered_json::array();
    for (const Box& b : eq) list.push_back(ordered_json::array({b.height, b.width}));
    examples.push_back(ordered_json{{"n", n}, {"perimeter", got}, {"boxes", list}});
    if (got != perimeter || eq != boxes) {
      t.Fail(absl::StrCat("n = ", n, ": perimeter bound ", got));
    } else {
      t.Note(absl::StrCat("n = ", n, ": perimeter bound ", got, ", equality boxes ",
                          absl::StrJoin(eq, ", ", [](std::string* out, const Box& b) {
                            out->append(BoxText(b));
                          })));
    }
  }
  int checked = 0;
  for (const auto& [g, e] : SmallCatalog(t, o.search)) {
    absl::StatusOr<CharacterizationReport> c =
        EqualityCharacterizations(g, e.values, e.frontier);
    if (!c.ok()) {
      if (absl::IsFailedPrecondition(c.status())) {
        t.Cap(absl::StrCat(e.graph_id, ": values not proven"));
      } else {
        t.Fail(absl::StrCat(e.graph_id, ": ", c.status().message()));
      }
      continue;
    }
    ++checked;
  }
  t.Note(absl::StrCat("height 1 <=> path, area n <=> grid, width and perimeter "
                      "equality cases: consistent on ",
                      checked, " connected graphs with n <= 5"));
  t.evidence() = ordered_json{{"mismatches", mismatches},
                              {"examples", examples},
                              {"characterized", checked}};
  return t.Finish("bounds", "general lower bounds and their equality cases");
}

ClaimResult DisjointUnionClaim(const VerifyOptions& o) {
  Tracker t;
  const SearchConfig& cfg = o.search;
  std::vector<Graph> small;
  for (int n = 1; n <= 4; ++n) {
    absl::StatusOr<std::vector<Graph>> graphs = AllGraphs(n, false);
    if (!t.Check(graphs.status(), "graph list")) return t.Finish("disjoint-union", "");
    small.insert(small.end(), graphs->begin(), graphs->end());
  }
  std::vector<BoxFrontier> frontiers;
  for (const Graph& g : small) {
    absl::StatusOr<BoxFrontier> f = ComputeFrontier(g, cfg);
    if (!t.Check(f.status(), "component frontier")) {
      return t.Finish("disjoint-union", "");
    }
    frontiers.push_back(*std::move(f));
  }
  int pairs = 0, capped = 0, mismatches = 0;
  ordered_json log = ordered_json::array();
  for (size_t i = 0; i < small.size(); ++i) {
    for (size_t j = i; j < small.size(); ++j) {
      ++pairs;
      const BoxFrontier composed = ComposeFrontiers(frontiers[i], frontiers[j]);
      absl::StatusOr<BoxFrontier> direct =
          ComputeFrontier(DisjointUnion(small[i], small[j]), cfg);
      if (!t.Check(direct.status(), "union frontier")) continue;
      const std::string name =
          absl::StrCat(ToGraph6(small[i]), "+", ToGraph6(small[j]));
      log.push_back(ordered_json{{"pair", name},
                                 {"composed", FrontierBoxes(composed)},
                                 {"direct", FrontierBoxes(*direct)},
                                 {"complete", direct->complete}});
      std::vector<Box> a, b;
      for (const FrontierBox& x : composed.boxes) a.push_back(x.box);
      for (const FrontierBox& x : direct->boxes) b.push_back(x.box);
      if (!direct->complete) {
        ++capped;
        // Whatever the search did prove must agree.
        bool contradicts = false;
        for (const Box& x : b) {
          contradicts |= std::none_of(a.begin(), a.end(), [&](const Box& y) {
            return y.FitsIn(x);
          });
        }
        if (contradicts) {
          ++mismatches;
          t.Fail(absl::StrCat(name, ": direct ", FrontierText(*direct), " vs composed ",
                              FrontierText(composed)));
        }
      } else if (a != b) {
        ++mismatches;
        t.Fail(absl::StrCat(name, ": direct ", FrontierText(*direct), " vs composed ",
                            FrontierText(composed)));
      }
    }
  }
  // Without the recursive component boxes, so the union search does not lean
  // on the component frontiers it is compared with.
  SearchConfig plain = cfg;
  plain.component_boxes = false;
  plain.cache = nullptr;
  int plain_pairs = 0;
  for (size_t i = 0; i < small.size(); ++i) {
    for (size_t j = i; j < small.size(); ++j) {
      if (small[i].num_vertices() + small[j].num_vertices() > 6) continue;
      ++plain_pairs;
      const BoxFrontier composed = ComposeFrontiers(frontiers[i], frontiers[j]);
      absl::StatusOr<BoxFrontier> direct =
          ComputeFrontier(DisjointUnion(small[i], small[j]), plain);
      if (!t.Check(direct.status(), "union frontier")) continue;
      std::vector<Box> a, b;
      for (const FrontierBox& x : composed.boxes) a.push_back(x.box);
      for (const FrontierBox& x : direct->boxes) b.push_back(x.box);
      const std::string name =
          absl::StrCat(ToGraph6(small[i]), "+", ToGraph6(small[j]));
      if (!direct->complete) {
        ++capped;
      } else if (a != b) {
        ++mismatches;
        t.Fail(absl::StrCat(name, " (no component boxes): direct ", FrontierText(*direct),
                            " vs composed ", FrontierText(composed)));
      }
    }
  }
  t.Note(absl::StrCat(plain_pairs, " pairs with at most 6 vertices in total rechecked "
                      "without component boxes"));
  if (capped > 0) t.Cap(absl::StrCat(capped, " union frontiers incomplete within caps"));
  t.Note(absl::StrCat(pairs, " pairs with at most 4 vertices each: ", mismatches,
                      " mismatches between composition and direct search"));

  // The remark's two areas, from the exact component frontiers.
  const Graph p4 = PathGraph(4), star = StarGraph(4);
  absl::StatusOr<BoxFrontier> fp4 = ComputeFrontier(p4, cfg);
  absl::StatusOr<BoxFrontier> fstar = ComputeFrontier(star, cfg);
  ordered_json remark = ordered_json::array();
  if (t.Check(fp4.status(), "frontier(P4)") && t.Check(fstar.status(), "frontier(K1,4)")) {
    for (auto [name, first, expected] :
         std::vector<std::tuple<std::string, const BoxFrontier*, int>>{
             {"P4+K1,4", &*fp4, 27}, {"K1,4+K1,4", &*fstar, 36}}) {
      absl::StatusOr<Composition> c = ComposeDisjoint(*first, *fstar);
      if (!t.Check(c.status(), name)) continue;
      const ComposedValue& v = c->values[static_cast<int>(Parameter::kArea)];
      remark.push_back(ordered_json{{"graph", name},
                                    {"area", v.result.value},
                                    {"proven", v.result.proven},
                                    {"first", ordered_json::array({v.first.height, v.first.width})},
                                    {"second", ordered_json::array({v.second.height, v.second.width})}});
      if (v.result.value != expected) {
        t.Fail(absl::StrCat("area(", name, ") = ", v.result.value));
      } else if (!v.result.proven) {
        t.Cap(absl::StrCat("area(", name, ") = ", expected, " from unproven frontiers"));
      } else {
        t.Note(absl::StrCat("area(", name, ") = ", expected, " from ", BoxText(v.first),
                            " and ", BoxText(v.second)));
      }
      if (v.witness.has_value()) {
        const Graph u = DisjointUnion(first == &*fp4 ? p4 : star, star);
        absl::StatusOr<bool> same = Isomorphic(VisibilityGraph(*v.witness).graph, u);
        if (!same.ok() || !*same) t.Fail(absl::StrCat(name, ": glued witness is wrong"));
      }
    }
  }
  // Direct confirmation for P4+K1,4.
  ExpectValue(t, "P4+K1,4", DisjointUnion(p4, star), Parameter::kArea, 27, cfg, remark);
  t.evidence() = ordered_json{{"pairs", log}, {"remark", remark}};
  return t.Finish("disjoint-union",
                  "disjoint union lemma and the remark on P4+K1,4 and K1,4+K1,4");
}

// Width cap for the height lower bound of K_n.
int CompleteCap(const VerifyOptions& o, int override_width, int n) {
  if (override_width > 0) return override_width;
  if (o.search.max_width > 0) return o.search.max_width;
  return DefaultMaxWidth(n);
}

void ExpectComplete(Tracker& t, int n, int h, int w, bool feasible,
                    const SearchConfig& cfg, ordered_json& log) {
  absl::StatusOr<BoxResult> r = SolveComplete(n, h, w, cfg);
  const std::string what = absl::StrCat("K", n, " in ", h, "x", w);
  if (!t.Check(r.status(), what)) return;
  ordered_json entry{{"graph", absl::StrCat("K", n)},
                     {"box", ordered_json::array({h, w})},
                     {"verdict", VerdictName(r->verdict)},
                     {"nodes", r->nodes}};
  if (r->verdict == Verdict::kUnknown) {
    t.Cap(absl::StrCat(what, " undecided within the time budget"));
  } else if ((r->verdict == Verdict::kFeasible) != feasible) {
    t.Fail(absl::StrCat(what, " is ", VerdictName(r->verdict)));
  } else if (feasible) {
    // Independent re-check of the emitted coordinates.
    const Representation& rep = *r->witness;
    const bool valid = Validate(rep.rects()).ok();
    const bool complete = VisibilityGraph(rep).graph == CompleteGraph(n);
    const bool raster = RasterVisibilityGraph(rep) == CompleteGraph(n);
    const Box box = Box::Normalized(rep.box_height(), rep.box_width());
    if (!valid || !complete || !raster || box != Box::Normalized(h, w)) {
      t.Fail(absl::StrCat(what, ": witness does not check"));
    } else {
      t.Note(absl::StrCat(what, ": witness checked (valid, graph K", n, ", box ",
                          BoxText(box), ")"));
    }
    entry["witness"] = RepJson(rep);
  } else {
    t.Note(absl::StrCat(what, ": exhausted, infeasible"));
  }
  log.push_back(entry);
}

// Height lower bound: no K_n in (h_max) x cap.
void ExpectCompleteHeight(Tracker& t, int n, int h_max, int cap,
                          const SearchConfig& cfg, ordered_json& log) {
  const size_t before = log.size();
  ExpectComplete(t, n, h_max, cap, false, cfg, log);
  if (log.size() == before) return;
  const bool infeasible = log.back()["verdict"] == "infeasible";
  if (!infeasible) return;
  if (cap >= CompleteWidth(n)) {
    t.Note(absl::StrCat("width cap ", cap, " >= 2n-1 = ", CompleteWidth(n),
                        " covers every squeezed layout: height(K", n, ") >= ",
                        h_max + 1, " for all widths"));
  } else {
    t.Cap(absl::StrCat("height(K", n, ") >= ", h_max + 1, " checked for widths <= ",
                       cap, " only"));
  }
}

ClaimResult K7Claim(const VerifyOptions& o) {
  Tracker t;
  ordered_json log = ordered_json::array();
  const SearchConfig& cfg = o.search;
  ExpectComplete(t, 7, 7, 8, true, cfg, log);
  ExpectComplete(t, 7, 7, 7, false, cfg, log);
  ExpectCompleteHeight(t, 7, 6, CompleteCap(o, o.k7_height_width, 7), cfg, log);
  if (std::optional<Fixture> f = LoadChecked(t, o, "fig13-K7")) {
    if (f->box != Box{7, 8}) t.Fail("fixture fig13-K7 is not 7x8");
  }
  t.evidence()["searches"] = log;
  return t.Finish("k7", "height 7 and width 8 of K7");
}

ClaimResult K8Claim(const VerifyOptions& o) {
  Tracker t;
  ordered_json log = ordered_json::array();
  const SearchConfig& cfg = o.search;
  ExpectComplete(t, 8, 10, 10, true, cfg, log);
  ExpectCompleteHeight(t, 8, 9, CompleteCap(o, o.k8_height_width, 8), cfg, log);
  if (std::optional<Fixture> f = LoadChecked(t, o, "fig13-K8")) {
    if (f->box != Box{10, 10}) t.Fail("fixture fig13-K8 is not 10x10");
  }
  int mismatches = 0;
  for (int n = 1; n <= 32; ++n) {
    const QK8Prediction a = *QK8Construction(n);
    const QK8Prediction b = *QK8ByComposition(n);
    const bool same = a.height == b.height && a.width == b.width && a.area == b.area &&
                      a.perimeter == b.perimeter;
    if (!same && mismatches++ == 0) {
      t.Fail(absl::StrCat("qK8 + E_r formulas differ from composition at n = ", n));
    }
  }
  t.Note(absl::StrCat("qK8 + E_r closed forms match composition for n <= 32 (",
                      mismatches, " mismatches)"));
  t.evidence()["searches"] = log;
  t.evidence()["qk8_mismatches"] = mismatches;
  return t.Finish("k8", "height and width 10 of K8; unions of copies of K8");
}

ClaimResult ExtractionClaim(const VerifyOptions& o) {
  Tracker t;
  std::vector<std::pair<int, Representation>> samples;
  const int half = (o.extraction_samples + 1) / 2;
  struct Source {
    int n, h, w;
  };
  for (const Source& s : {Source{6, 5, 6}, Source{6, 6, 6}, Source{6, 5, 7}, Source{6, 6, 7},
                         Source{7, 7, 8}, Source{7, 7, 9}, Source{7, 8, 8}}) {
    const int want = o.extraction_samples - static_cast<int>(samples.size());
    if (want <= 0) break;
    absl::StatusOr<std::vector<Representation>> reps =
        SampleRepresentations(CompleteGraph(s.n), s.h, s.w, std::min(want, half));
    if (!t.Check(reps.status(), "sampling")) continue;
    for (Representation& r : *reps) samples.emplace_back(s.n, std::move(r));
  }
  if (static_cast<int>(samples.size()) < o.extraction_samples) {
    t.Fail(absl::StrCat("only ", samples.size(), " complete-graph samples"));
  }
  int top_ok = 0, extract_ok = 0, normal_ok = 0;
  for (const auto& [n, rep] : samples) {
    const Box box = Box::Normalized(rep.box_height(), rep.box_width());
    absl::StatusOr<std::vector<int>> top = TopSet(rep);
    if (!top.ok() || top->size() != 1) {
      t.Fail(absl::StrCat("top set is not a singleton: ", WriteRepresentation(rep)));
      continue;
    }
    ++top_ok;
    absl::StatusOr<Representation> up = ExtractUp(rep, top->front());
    if (!up.ok() || !(VisibilityGraph(*up).graph == CompleteGraph(n)) ||
        Box::Normalized(up->box_height(), up->box_width()) != box) {
      t.Fail(absl::StrCat("extraction broke K", n, ": ", WriteRepresentation(rep)));
      continue;
    }
    ++extract_ok;
    absl::StatusOr<NormalizedBoundary> nb = NormalizeBoundary(rep);
    if (!nb.ok() || !BoundaryCoveredByFourStrips(nb->rep) ||
        !(VisibilityGraph(nb->rep).graph == CompleteGraph(n)) ||
        Box::Normalized(nb->rep.box_height(), nb->rep.box_width()) != box) {
      t.Fail(absl::StrCat("boundary normalization broke K", n, ": ",
                          WriteRepresentation(rep)));
      continue;
    }
    ++normal_ok;
  }
  t.Note(absl::StrCat(samples.size(), " K6/K7 search leaves: singleton top set ", top_ok,
                      ", extraction preserved ", extract_ok,
                      ", boundary normalized ", normal_ok));
  std::mt19937_64 rng(o.seed + 1);
  int planar_ok = 0, tested = 0;
  auto split_planar = [&](const Representation& rep) {
    ++tested;
    const DirectionSplit s = SplitByDirection(rep);
    absl::StatusOr<bool> v = IsPlanar(s.vertical);
    absl::StatusOr<bool> h = IsPlanar(s.horizontal);
    if (v.ok() && h.ok() && *v && *h) {
      ++planar_ok;
    } else {
      t.Fail(absl::StrCat("direction split not planar: ", WriteRepresentation(rep)));
    }
  };
  for (const auto& [n, rep] : samples) split_planar(rep);
  for (int i = 0; i < o.extraction_samples; ++i) {
    split_planar(RandomRepresentation(rng, 12, 10));
  }
  t.Note(absl::StrCat(tested, " representations: both direction classes planar on ",
                      planar_ok));
  t.evidence() = ordered_json{{"samples", samples.size()},
                              {"top_singleton", top_ok},
                              {"extracted", extract_ok},
                              {"normalized", normal_ok},
                              {"split_tested", tested},
                              {"split_planar", planar_ok}};
  return t.Finish("extraction",
                  "top-set, extraction and boundary lemmas for complete graphs");
}

ClaimResult WidthPerimeterClaim(const VerifyOptions& o) {
  Tracker t;
  ordered_json log = ordered_json::array();
  const SearchConfig& cfg = o.search;
  struct Case {
    const char* fixture;
    const char* name;
    int perimeter, width;
    std::vector<Box> infeasible;  // Every box below both values fits in one.
  };
  const Case cases[] = {
      {"fig5-G3", "G3", 18, 6, {Box{5, 5}, Box{2, 6}, Box{1, 7}}},
      {"fig5-G4", "G4", 20, 5, {Box{4, 5}, Box{3, 6}, Box{2, 7}, Box{1, 8}}},
  };
  for (const Case& c : cases) {
    std::optional<Fixture> f = LoadChecked(t, o, c.fixture);
    if (!f.has_value()) continue;
    if (f->box.perimeter() != c.perimeter || f->box.width != c.width) {
      t.Fail(absl::StrCat(c.fixture, " has perimeter ", f->box.perimeter(),
                          " and width ", f->box.width));
    }
    for (const Box& b : c.infeasible) {
      ExpectBox(t, c.name, f->graph, b.height, b.width, false, cfg, log);
    }
  }
  t.evidence()["searches"] = log;
  return t.Finish("width-perimeter",
                  "G3 (perimeter 18, width 6) and G4 (perimeter 20, width 5)");
}

ClaimResult CatalogClaim(const VerifyOptions& o) {
  Tracker t;
  ordered_json rows = ordered_json::array();
  int proven = 0, total = 0;
  for (const auto& [g, e] : SmallCatalog(t, o.search)) {
    ++total;
    const int n = g.num_vertices();
    const int limit[] = {n, n, n * n, 4 * n};
    bool all_proven = true;
    ordered_json values = ordered_json::array();
    for (Parameter p : kAllParameters) {
      const ParamValue& v = e.values[static_cast<int>(p)];
      values.push_back(v.value);
      all_proven &= v.proven;
      if (v.value > limit[static_cast<int>(p)]) {
        t.Fail(absl::StrCat(e.graph_id, ": ", ParameterName(p), " ", v.value,
                            " exceeds the empty graph's ", limit[static_cast<int>(p)]));
      }
    }
    if (all_proven) {
      ++proven;
    } else {
      t.Cap(absl::StrCat(e.graph_id, ": values not all proven"));
    }
    rows.push_back(ordered_json{{"graph", e.graph_id}, {"values", values}});
  }
  if (total != 31) t.Fail(absl::StrCat(total, " connected graphs, expected 31"));
  t.Note(absl::StrCat(total, " connected graphs with n <= 5, ", proven,
                      " with all four values proven; none above (n, n, n^2, 4n)"));
  t.evidence()["graphs"] = rows;
  return t.Finish("catalog", "connected graphs on at most 5 vertices");
}

ClaimResult DeterminismClaim(const VerifyOptions& o) {
  Tracker t;
  VerifyOptions single = o;
  single.search.jobs = 1;
  single.search.cache = nullptr;
  VerifyOptions many = single;
  many.search.jobs = std::max(2, o.determinism_jobs);
  using Fn = ClaimResult (*)(const VerifyOptions&);
  const std::pair<const char*, Fn> subjects[] = {
      {"separating-pairs", SeparatingPairsClaim},
      {"separating-representations", SeparatingRepresentationsClaim},
      {"k7", K7Claim}};
  ordered_json log = ordered_json::array();
  for (const auto& [id, fn] : subjects) {
    const ClaimResult a = fn(single);
    const ClaimResult b = fn(many);
    const bool same = a.evidence == b.evidence && a.status == b.status &&
                      a.details == b.details;
    log.push_back(ordered_json{{"claim", id}, {"identical", same}, {"bytes", a.evidence.size()}});
    if (same) {
      t.Note(absl::StrCat(id, ": jobs=1 and jobs=", many.search.jobs, " identical (",
                          a.evidence.size(), " bytes of reports and witnesses)"));
    } else {
      t.Fail(absl::StrCat(id, ": output depends on the worker count"));
    }
  }
  t.evidence()["runs"] = log;
  return t.Finish("determinism", "results independent of the number of workers");
}

const std::map<std::string, ClaimResult (*)(const VerifyOptions&)>& Registry() {
  static const auto* registry =
      new std::map<std::string, ClaimResult (*)(const VerifyOptions&)>{
          {"oracle-equivalence", OracleClaim},
          {"separating-pairs", SeparatingPairsClaim},
          {"separating-representations", SeparatingRepresentationsClaim},
          {"bounds", BoundsClaim},
          {"disjoint-union", DisjointUnionClaim},
          {"k7", K7Claim},
          {"k8", K8Claim},
          {"extraction", ExtractionClaim},
          {"width-perimeter", WidthPerimeterClaim},
          {"catalog", CatalogClaim},
          {"determinism", DeterminismClaim},
      };
  return *registry;
}

}  // namespace

const char* ClaimStatusName(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kVerified:
      return "verified";
    case ClaimStatus::kVerifiedCapped:
      return "verified-capped";
    case ClaimStatus::kSkipped:
      return "skipped";
    case ClaimStatus::kFailed:
      return "failed";
  }
  return "?";
}

const std::vector<std::string>& ClaimIds() {
  static const auto* ids = new std::vector<std::string>{
      "oracle-equivalence", "separating-pairs", "separating-representations",
      "bounds",             "disjoint-union",   "k7",
      "k8",                 "extraction",       "width-perimeter",
      "catalog",            "determinism"};
  return *ids;
}

absl::StatusOr<ClaimResult> RunClaim(const std::string& id,
                                     const VerifyOptions& options) {
  auto it = Registry().find(id);
  if (it == Registry().end()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown claim '", id, "'; known: ", absl::StrJoin(ClaimIds(), ", ")));
  }
  const auto start = std::chrono::steady_clock::now();
  ClaimResult r = it->second(options);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

absl::StatusOr<VerificationReport> VerifyClaims(const std::vector<std::string>& filter,
                                                const VerifyOptions& options) {
  for (const std::string& id : filter) {
    if (Registry().count(id) == 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unknown claim '", id, "'; known: ", absl::StrJoin(ClaimIds(), ", ")));
    }
  }
  std::vector<std::string> ids;
  for (const std::string& id : ClaimIds()) {
    if (filter.empty() || std::find(filter.begin(), filter.end(), id) != filter.end()) {
      ids.push_back(id);
    }
  }
  VerificationReport report;
  report.claims.resize(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1)) {
      report.claims[i] = *RunClaim(ids[i], options);
    }
  };
  const int jobs = std::clamp(options.claim_jobs, 1, static_cast<int>(ids.size()) + 1);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  return report;
}

std::string VerificationReportToJson(const VerificationReport& report,
                                     bool with_timing) {
  ordered_json claims = ordered_json::array();
  for (const ClaimResult& c : report.claims) {
    ordered_json entry{{"id", c.id},
                       {"anchor", c.anchor},
                       {"status", ClaimStatusName(c.status)},
                       {"details", c.details},
                       {"evidence", ordered_json::parse(c.evidence)}};
    if (with_timing) entry["seconds"] = c.seconds;
    claims.push_back(entry);
  }
  return ordered_json{{"claims", claims}}.dump(2);
}

int VerificationExitCode(const VerificationReport& report) {
  int code = 0;
  for (const ClaimResult& c : report.claims) {
    if (c.status == ClaimStatus::kFailed) return 2;
    if (c.status == ClaimStatus::kVerifiedCapped) code = 3;
  }
  return code;
}

}  // namespace rvg
