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

#include "rvg/named_graphs.h"

#include <filesystem>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "rvg/canonical.h"
#include "rvg/graph6.h"
#include "rvg/rep_io.h"

namespace rvg {
namespace {

Graph FromEdges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Representation Layout(std::vector<NamedRect> rects) {
  return *Representation::Create(std::move(rects));
}

constexpr char kG1Encoding[] = "E?NG";
constexpr char kG2Encoding[] = "E@Rw";

bool ParseCount(absl::string_view text, int& out) {
  return !text.empty() && absl::SimpleAtoi(text, &out);
}

}  // namespace

Graph StarGraph(int leaves) { return CompleteBipartiteGraph(1, leaves); }

Graph G5Graph() {
  return FromEdges(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6},
                       {5, 6}});
}

Graph G6Graph() {
  return FromEdges(7, {{0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
}

Graph G1Graph() { return *FromGraph6(kG1Encoding); }
Graph G2Graph() { return *FromGraph6(kG2Encoding); }

Representation G3Layout() {
  std::vector<NamedRect> rects;
  rects.push_back({"V", Rect{1, 1, 5, 2}});
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 6; ++x) {
      if (y == 1 && x >= 1 && x < 5) continue;
      rects.push_back({DefaultVertexName(static_cast<int>(rects.size()) - 1),
                       Rect{x, y, x + 1, y + 1}});
    }
  }
  return Layout(std::move(rects));
}

Representation G4Layout() {
  return Layout({
      {"U", Rect{1, 2, 4, 3}},  {"L", Rect{0, 1, 1, 4}},
      {"R", Rect{4, 1, 5, 4}},  {"N1", Rect{1, 3, 2, 4}},
      {"N2", Rect{2, 3, 3, 4}}, {"N3", Rect{3, 3, 4, 4}},
      {"S1", Rect{1, 1, 2, 2}}, {"S2", Rect{2, 1, 3, 2}},
      {"S3", Rect{3, 1, 4, 2}}, {"T1", Rect{0, 4, 2, 5}},
      {"T2", Rect{2, 4, 3, 5}}, {"T3", Rect{3, 4, 5, 5}},
      {"B1", Rect{0, 0, 2, 1}}, {"B2", Rect{2, 0, 3, 1}},
      {"B3", Rect{3, 0, 5, 1}},
  });
}

Graph G3Graph() { return VisibilityGraph(G3Layout()).graph; }
Graph G4Graph() { return VisibilityGraph(G4Layout()).graph; }

absl::StatusOr<Graph> NamedGraph(std::string_view name_in) {
  const absl::string_view name(name_in.data(), name_in.size());
  if (name == "G1") return G1Graph();
  if (name == "G2") return G2Graph();
  if (name == "G3") return G3Graph();
  if (name == "G4") return G4Graph();
  if (name == "G5") return G5Graph();
  if (name == "G6") return G6Graph();
  int a = 0, b = 0;
  absl::string_view rest = name;
  if (absl::ConsumePrefix(&rest, "grid")) {
    std::vector<absl::string_view> parts = absl::StrSplit(rest, 'x');
    if (parts.size() == 2 && ParseCount(parts[0], a) && ParseCount(parts[1], b)) {
      return MakeFamily(FamilyKind::kGrid, {a, b});
    }
  } else if (!rest.empty()) {
    const char kind = rest[0];
    rest.remove_prefix(1);
    std::vector<absl::string_view> parts = absl::StrSplit(rest, ',');
    if (kind == 'K' && parts.size() == 2 && ParseCount(parts[0], a) &&
        ParseCount(parts[1], b)) {
      return MakeFamily(FamilyKind::kCompleteBipartite, {a, b});
    }
    if (parts.size() == 1 && ParseCount(parts[0], a)) {
      switch (kind) {
        case 'P':
          return MakeFamily(FamilyKind::kPath, {a});
        case 'C':
          return MakeFamily(FamilyKind::kCycle, {a});
        case 'K':
          return MakeFamily(FamilyKind::kComplete, {a});
        case 'E':
          return MakeFamily(FamilyKind::kEmpty, {a});
        default:
          break;
      }
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown graph name '", std::string(name_in), "'"));
}

absl::StatusOr<Graph> ParseGraphArgument(std::string_view arg) {
  if (absl::StatusOr<Graph> g = NamedGraph(arg); g.ok()) return g;
  std::string text(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    absl::StatusOr<std::string> contents = ReadTextFile(text);
    if (!contents.ok()) return contents.status();
    text = *contents;
  }
  if (text.find(';') != std::string::npos) return ParseEdgeList(text);
  absl::StatusOr<Graph> g = FromGraph6(text);
  if (!g.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "'", std::string(arg),
        "' is not a graph name, graph6 string, edge list, or readable file"));
  }
  return g;
}

absl::StatusOr<std::vector<Graph>> AllGraphs(int n, bool connected_only) {
  if (n < 0 || n > 7) return absl::InvalidArgumentError("need 0 <= n <= 7");
  // Every graph on n vertices is a graph on n - 1 vertices plus one vertex
  // with some neighbourhood.
  std::map<std::string, Graph> level;
  level.emplace(ToGraph6(Graph(0)), Graph(0));
  for (int k = 1; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (const auto& [code, base] : level) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << (k - 1)); ++mask) {
        Graph g(k);
        for (auto [u, v] : base.Edges()) g.AddEdge(u, v);
        for (int u = 0; u < k - 1; ++u) {
          if ((mask >> u) & 1) g.AddEdge(u, k - 1);
        }
        absl::StatusOr<CanonicalForm> c = Canonical(g);
        if (!c.ok()) return c.status();
        if (next.count(c->encoding) == 0) {
          next.emplace(c->encoding, g.Permuted(c->labeling));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) {
    if (!connected_only || g.IsConnected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace rvg
