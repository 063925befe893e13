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

// Regenerates the bundled fixtures: rvg_make_fixtures <dir>
//
// Transcribed layouts are written as given; the rest come from the search.
// Every file is checked through LoadFixtures before the tool exits.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "rvg/fixtures.h"
#include "rvg/graph6.h"
#include "rvg/named_graphs.h"
#include "rvg/rep_io.h"
#include "rvg/search.h"

namespace rvg {
namespace {

using nlohmann::ordered_json;

struct Entry {
  std::string id;
  std::string graph;
  Provenance provenance;
  Representation rep;
  std::vector<std::pair<std::string, std::string>> non_edges;
  std::string note;
};

Representation Make(std::vector<NamedRect> rects) {
  return *Representation::Create(std::move(rects));
}

// Witness of g in exactly h x w, found by search.
Representation Searched(const Graph& g, int h, int w) {
  SearchConfig cfg;
  cfg.time_budget_seconds = 0;
  absl::StatusOr<BoxResult> r = DecideExactBox(g, h, w, cfg);
  if (!r.ok() || r->verdict != Verdict::kFeasible) {
    std::cerr << "no witness in " << h << "x" << w << "\n";
    std::exit(2);
  }
  return *r->witness;
}

Representation SearchedComplete(int n, int h, int w) {
  SearchConfig cfg;
  cfg.time_budget_seconds = 0;
  absl::StatusOr<BoxResult> r = SolveComplete(n, h, w, cfg);
  if (!r.ok() || r->verdict != Verdict::kFeasible) {
    std::cerr << "no K" << n << " in " << h << "x" << w << "\n";
    std::exit(2);
  }
  return *r->witness;
}

std::vector<Entry> Entries() {
  std::vector<Entry> out;
  // x range then y range, origin lower left.
  const Representation fig1 = Make({{"A", Rect{0, 2, 1, 6}},
                                    {"B", Rect{1, 5, 3, 7}},
                                    {"C", Rect{5, 0, 6, 2}},
                                    {"D", Rect{2, 1, 4, 3}},
                                    {"E", Rect{3, 4, 5, 5}},
                                    {"F", Rect{0, 7, 1, 8}}});
  out.push_back({"fig1", ToGraph6(VisibilityGraph(fig1).graph),
                 Provenance::kTranscribedFromFigure, fig1, {{"B", "F"}},
                 "six rectangles; B and F do not see each other"});
  std::vector<NamedRect> path;
  for (int i = 0; i < 6; ++i) path.push_back({DefaultVertexName(i), Rect{i, 0, i + 1, 1}});
  out.push_back({"fig3-P6", "P6", Provenance::kTranscribedFromFigure, Make(path), {},
                 "P6 in a 1x6 row"});
  out.push_back({"fig3-C6", "C6", Provenance::kDerivedBySearch,
                 Searched(CycleGraph(6), 2, 4), {}, "C6 at least area 8 (2x4)"});
  out.push_back({"fig4-G1", "G1", Provenance::kDerivedBySearch, Searched(G1Graph(), 2, 5),
                 {}, "G1 at height 2, area 10"});
  out.push_back({"fig4-G2", "G2", Provenance::kDerivedBySearch, Searched(G2Graph(), 3, 3),
                 {}, "G2 at height 3, area 9"});
  out.push_back({"fig5-G3", ToGraph6(G3Graph()), Provenance::kTranscribedFromFigure,
                 G3Layout(), {}, "G3 layout rebuilt from its description; 3x6"});
  out.push_back({"fig5-G4", ToGraph6(G4Graph()), Provenance::kTranscribedFromFigure,
                 G4Layout(), {}, "G4 layout rebuilt from its description; 5x5"});
  out.push_back({"fig7-K14-S1", "K1,4", Provenance::kDerivedBySearch,
                 Searched(StarGraph(4), 2, 5), {}, "least height"});
  out.push_back({"fig7-K14-S2", "K1,4", Provenance::kDerivedBySearch,
                 Searched(StarGraph(4), 3, 3), {}, "least width, area and perimeter"});
  out.push_back({"fig7-G5-S1", "G5", Provenance::kDerivedBySearch, Searched(G5Graph(), 2, 5),
                 {}, "least height, area and perimeter"});
  out.push_back({"fig7-G5-S2", "G5", Provenance::kDerivedBySearch, Searched(G5Graph(), 4, 4),
                 {}, "least width"});
  out.push_back({"fig8-G6-S1", "G6", Provenance::kDerivedBySearch, Searched(G6Graph(), 2, 7),
                 {}, "least area"});
  out.push_back({"fig8-G6-S2", "G6", Provenance::kDerivedBySearch, Searched(G6Graph(), 4, 4),
                 {}, "least perimeter"});
  out.push_back({"fig13-K7", "K7", Provenance::kDerivedBySearch, SearchedComplete(7, 7, 8),
                 {}, "K7 in 7x8"});
  out.push_back({"fig13-K8", "K8", Provenance::kDerivedBySearch,
                 SearchedComplete(8, 10, 10), {}, "K8 in 10x10"});
  return out;
}

int Main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: rvg_make_fixtures <dir>\n";
    return 1;
  }
  const std::string dir = argv[1];
  std::filesystem::create_directories(dir);
  ordered_json list = ordered_json::array();
  for (const Entry& e : Entries()) {
    const std::string file = absl::StrCat(e.id, ".json");
    if (absl::Status s = WriteRepresentationFile(e.rep, absl::StrCat(dir, "/", file));
        !s.ok()) {
      std::cerr << s << "\n";
      return 1;
    }
    const Box box = Box::Normalized(e.rep.box_height(), e.rep.box_width());
    ordered_json item{{"id", e.id},
                      {"file", file},
                      {"graph", e.graph},
                      {"height", box.height},
                      {"width", box.width},
                      {"provenance", ProvenanceName(e.provenance)}};
    if (!e.non_edges.empty()) {
      ordered_json pairs = ordered_json::array();
      for (const auto& [a, b] : e.non_edges) pairs.push_back(ordered_json::array({a, b}));
      item["non_edges"] = pairs;
    }
    item["note"] = e.note;
    list.push_back(item);
  }
  ordered_json manifest{{"fixtures", list}};
  if (absl::Status s = WriteTextFile(absl::StrCat(dir, "/manifest.json"),
                                     manifest.dump(2) + "\n");
      !s.ok()) {
    std::cerr << s << "\n";
    return 1;
  }
  absl::StatusOr<std::vector<Fixture>> loaded = LoadFixtures(dir);
  if (!loaded.ok()) {
    std::cerr << loaded.status() << "\n";
    return 2;
  }
  std::cerr << loaded->size() << " fixtures written to " << dir << "\n";
  return 0;
}

}  // namespace
}  // namespace rvg

int main(int argc, char** argv) { return rvg::Main(argc, argv); }
