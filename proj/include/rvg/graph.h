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

#ifndef RVG_GRAPH_H_
#define RVG_GRAPH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace rvg {

// Small simple undirected graph stored as adjacency bit rows. Vertex ids are
// 0..n-1; the representation caps n at kMaxVertices.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;

  // Adds or removes the undirected edge {u, v}. Self-loops are ignored.
  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);
  bool HasEdge(int u, int v) const { return (adj_[u] >> v) & 1; }

  uint64_t Neighbors(int v) const { return adj_[v]; }
  int Degree(int v) const;
  std::vector<int> DegreeSequence() const;  // Non-increasing.
  std::vector<std::pair<int, int>> Edges() const;  // u < v, sorted.

  bool IsConnected() const;
  // Vertex sets of the connected components, each sorted, ordered by their
  // smallest vertex.
  std::vector<std::vector<int>> Components() const;

  // Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
  Graph InducedSubgraph(const std::vector<int>& vertices) const;
  // Relabels vertex v as perm[v].
  Graph Permuted(const std::vector<int>& perm) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    labels_ = std::move(labels);
  }

  // Equality of labelled adjacency; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<uint64_t> adj_;
  std::vector<std::string> labels_;
};

// Named families. Parameters are expected to be valid (n >= 1 etc.); use
// MakeFamily for checked construction from untrusted input.
Graph EmptyGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph CompleteGraph(int n);
Graph CompleteBipartiteGraph(int p, int q);
Graph GridGraph(int h, int w);  // P_h box P_w, vertex r*w + c.
Graph DisjointUnion(const Graph& a, const Graph& b);

enum class FamilyKind {
  kEmpty,
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kGrid,
};

absl::StatusOr<Graph> MakeFamily(FamilyKind kind, const std::vector<int>& params);

// Edge-list text form "n; u-v, u-v, ...". Whitespace is insignificant and the
// edge list may be empty ("3;").
absl::StatusOr<Graph> ParseEdgeList(std::string_view text);
std::string ToEdgeList(const Graph& g);

// Default rectangle name for vertex v: "A".."Z", then "V26", "V27", ...
std::string DefaultVertexName(int v);

}  // namespace rvg

#endif  // RVG_GRAPH_H_
