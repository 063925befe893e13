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

#include "rvg/graph.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "absl/strings/ascii.h"

namespace rvg {

Graph::Graph(int n) : adj_(n, 0) {}

int Graph::num_edges() const {
  int twice = 0;
  for (uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

void Graph::AddEdge(int u, int v) {
  if (u == v) return;
  adj_[u] |= uint64_t{1} << v;
  adj_[v] |= uint64_t{1} << u;
}

void Graph::RemoveEdge(int u, int v) {
  adj_[u] &= ~(uint64_t{1} << v);
  adj_[v] &= ~(uint64_t{1} << u);
}

int Graph::Degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::DegreeSequence() const {
  std::vector<int> degrees;
  degrees.reserve(adj_.size());
  for (uint64_t row : adj_) degrees.push_back(std::popcount(row));
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  return degrees;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v = u + 1; v < num_vertices(); ++v) {
      if (HasEdge(u, v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<std::vector<int>> Graph::Components() const {
  std::vector<std::vector<int>> components;
  uint64_t seen = 0;
  for (int start = 0; start < num_vertices(); ++start) {
    if ((seen >> start) & 1) continue;
    uint64_t frontier = uint64_t{1} << start;
    uint64_t comp = frontier;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      uint64_t fresh = adj_[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    std::vector<int>& members = components.emplace_back();
    for (uint64_t m = comp; m != 0; m &= m - 1) {
      members.push_back(std::countr_zero(m));
    }
  }
  return components;
}

bool Graph::IsConnected() const { return Components().size() <= 1; }

Graph Graph::InducedSubgraph(const std::vector<int>& vertices) const {
  Graph sub(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (HasEdge(vertices[i], vertices[j])) sub.AddEdge(i, j);
    }
  }
  return sub;
}

Graph Graph::Permuted(const std::vector<int>& perm) const {
  Graph out(num_vertices());
  for (auto [u, v] : Edges()) out.AddEdge(perm[u], perm[v]);
  return out;
}

Graph EmptyGraph(int n) { return Graph(n); }

Graph PathGraph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(i, i + 1);
  return g;
}

Graph CycleGraph(int n) {
  Graph g = PathGraph(n);
  if (n >= 3) g.AddEdge(0, n - 1);
  return g;
}

Graph CompleteGraph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph CompleteBipartiteGraph(int p, int q) {
  Graph g(p + q);
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) g.AddEdge(u, p + v);
  }
  return g;
}

Graph GridGraph(int h, int w) {
  Graph g(h * w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (c + 1 < w) g.AddEdge(r * w + c, r * w + c + 1);
      if (r + 1 < h) g.AddEdge(r * w + c, (r + 1) * w + c);
    }
  }
  return g;
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  Graph g(na + b.num_vertices());
  for (auto [u, v] : a.Edges()) g.AddEdge(u, v);
  for (auto [u, v] : b.Edges()) g.AddEdge(na + u, na + v);
  return g;
}

absl::StatusOr<Graph> MakeFamily(FamilyKind kind,
                                 const std::vector<int>& params) {
  const size_t arity =
      (kind == FamilyKind::kCompleteBipartite || kind == FamilyKind::kGrid) ? 2
                                                                            : 1;
  if (params.size() != arity) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", arity, " parameter(s), got ", params.size()));
  }
  const int min_value = kind == FamilyKind::kCycle ? 3 : 1;
  for (int p : params) {
    if (p < min_value || p > Graph::kMaxVertices) {
      return absl::InvalidArgumentError(
          absl::StrCat("parameter ", p, " out of range"));
    }
  }
  int vertices = params[0];
  if (kind == FamilyKind::kCompleteBipartite) vertices = params[0] + params[1];
  if (kind == FamilyKind::kGrid) vertices = params[0] * params[1];
  if (vertices > Graph::kMaxVertices) {
    return absl::InvalidArgumentError("too many vertices");
  }
  switch (kind) {
    case FamilyKind::kEmpty:
      return EmptyGraph(params[0]);
    case FamilyKind::kPath:
      return PathGraph(params[0]);
    case FamilyKind::kCycle:
      return CycleGraph(params[0]);
    case FamilyKind::kComplete:
      return CompleteGraph(params[0]);
    case FamilyKind::kCompleteBipartite:
      return CompleteBipartiteGraph(params[0], params[1]);
    case FamilyKind::kGrid:
      return GridGraph(params[0], params[1]);
  }
  return absl::InvalidArgumentError("unknown family");
}

namespace {

absl::string_view Abseil(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}

bool ParseInt(absl::string_view text, int& out) {
  text = absl::StripAsciiWhitespace(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

absl::StatusOr<Graph> ParseEdgeList(std::string_view input) {
  const absl::string_view text = Abseil(input);
  const size_t semi = text.find(';');
  if (semi == absl::string_view::npos) {
    return absl::InvalidArgumentError("edge list needs 'n;' prefix");
  }
  int n = 0;
  if (!ParseInt(text.substr(0, semi), n) || n < 0 || n > Graph::kMaxVertices) {
    return absl::InvalidArgumentError("bad vertex count in edge list");
  }
  Graph g(n);
  const absl::string_view rest = absl::StripAsciiWhitespace(text.substr(semi + 1));
  if (rest.empty()) return g;
  for (absl::string_view item : absl::StrSplit(rest, ',')) {
    std::vector<absl::string_view> ends = absl::StrSplit(item, '-');
    int u = 0, v = 0;
    if (ends.size() != 2 || !ParseInt(ends[0], u) || !ParseInt(ends[1], v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed edge '", item, "'"));
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge out of range '", item, "'"));
    }
    g.AddEdge(u, v);
  }
  return g;
}

std::string ToEdgeList(const Graph& g) {
  std::string out = absl::StrCat(g.num_vertices(), ";");
  bool first = true;
  for (auto [u, v] : g.Edges()) {
    absl::StrAppend(&out, first ? " " : ", ", u, "-", v);
    first = false;
  }
  return out;
}

std::string DefaultVertexName(int v) {
  if (v < 26) return std::string(1, static_cast<char>('A' + v));
  return absl::StrCat("V", v);
}

}  // namespace rvg
