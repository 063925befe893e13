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

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "rvg/canonical.h"
#include "rvg/graph.h"
#include "rvg/graph6.h"
#include "rvg/named_graphs.h"

namespace rvg {
namespace {

Graph RandomGraph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.AddEdge(u, v);
    }
  }
  return g;
}

// Tries every permutation.
bool BruteIsomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> p(a.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (a.Permuted(p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

TEST(Graph6Test, SmallCases) {
  absl::StatusOr<Graph> k1 = FromGraph6("@");
  ASSERT_TRUE(k1.ok());
  EXPECT_EQ(k1->num_vertices(), 1);
  absl::StatusOr<Graph> k2 = FromGraph6("A_");
  ASSERT_TRUE(k2.ok());
  EXPECT_EQ(k2->num_vertices(), 2);
  EXPECT_TRUE(k2->HasEdge(0, 1));
  EXPECT_EQ(ToGraph6(CompleteGraph(2)), "A_");
  EXPECT_EQ(ToGraph6(CompleteGraph(7)), "F~~~w");
}

TEST(Graph6Test, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = RandomGraph(rng, 1 + i % 16, 0.4);
    absl::StatusOr<Graph> back = FromGraph6(ToGraph6(g));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, g);
  }
}

TEST(Graph6Test, RejectsMalformed) {
  EXPECT_FALSE(FromGraph6("").ok());
  EXPECT_FALSE(FromGraph6("A").ok());
  EXPECT_FALSE(FromGraph6("A_x").ok());
  EXPECT_FALSE(FromGraph6(std::string(1, '\x7f')).ok());
}

TEST(GraphTest, Families) {
  EXPECT_EQ(PathGraph(6).num_edges(), 5);
  EXPECT_EQ(CycleGraph(6).num_edges(), 6);
  EXPECT_EQ(CompleteGraph(8).num_edges(), 28);
  EXPECT_EQ(CompleteBipartiteGraph(1, 4).num_edges(), 4);
  EXPECT_EQ(GridGraph(2, 3).num_edges(), 7);
  EXPECT_EQ(EmptyGraph(5).num_edges(), 0);
  const Graph u = DisjointUnion(PathGraph(4), StarGraph(4));
  EXPECT_EQ(u.num_vertices(), 9);
  EXPECT_EQ(u.Components().size(), 2u);
  EXPECT_FALSE(u.IsConnected());
}

TEST(GraphTest, EdgeListRoundTrip) {
  const Graph g = G5Graph();
  absl::StatusOr<Graph> back = ParseEdgeList(ToEdgeList(g));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, g);
  EXPECT_FALSE(ParseEdgeList("3; 0-0").ok());
  EXPECT_FALSE(ParseEdgeList("3; 0-5").ok());
  EXPECT_EQ(ParseEdgeList("3;")->num_edges(), 0);
}

TEST(CanonicalTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 6;
    const Graph a = RandomGraph(rng, n, 0.5);
    const Graph b = i % 2 == 0 ? RandomGraph(rng, n, 0.5) : [&] {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      return a.Permuted(p);
    }();
    absl::StatusOr<bool> fast = Isomorphic(a, b);
    ASSERT_TRUE(fast.ok());
    EXPECT_EQ(*fast, BruteIsomorphic(a, b)) << ToGraph6(a) << " " << ToGraph6(b);
  }
}

TEST(CanonicalTest, LabelingReproducesEncoding) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = RandomGraph(rng, 2 + i % 10, 0.3);
    absl::StatusOr<CanonicalForm> c = Canonical(g);
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(ToGraph6(g.Permuted(c->labeling)), c->encoding);
  }
}

TEST(CanonicalTest, FindIsomorphismMaps) {
  const Graph a = G6Graph();
  const Graph b = a.Permuted({6, 5, 4, 3, 2, 1, 0});
  absl::StatusOr<std::optional<std::vector<int>>> p = FindIsomorphism(a, b);
  ASSERT_TRUE(p.ok());
  ASSERT_TRUE(p->has_value());
  EXPECT_EQ(a.Permuted(**p), b);
}

TEST(NamedGraphsTest, AllGraphsCounts) {
  const int all[] = {1, 2, 4, 11, 34, 156};
  const int connected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(AllGraphs(n, false)->size(), static_cast<size_t>(all[n - 1])) << n;
    EXPECT_EQ(AllGraphs(n, true)->size(), static_cast<size_t>(connected[n - 1])) << n;
  }
}

TEST(NamedGraphsTest, Names) {
  EXPECT_EQ(*NamedGraph("K7"), CompleteGraph(7));
  EXPECT_EQ(*NamedGraph("K1,4"), CompleteBipartiteGraph(1, 4));
  EXPECT_EQ(*NamedGraph("P6"), PathGraph(6));
  EXPECT_EQ(*NamedGraph("grid2x3"), GridGraph(2, 3));
  EXPECT_FALSE(NamedGraph("Q3").ok());
  EXPECT_EQ(*ParseGraphArgument("F~~~w"), CompleteGraph(7));
  EXPECT_EQ(ParseGraphArgument("3; 0-1, 1-2")->num_edges(), 2);
  EXPECT_EQ(G1Graph().num_vertices(), 6);
  EXPECT_EQ(G2Graph().num_vertices(), 6);
  EXPECT_EQ(G5Graph().num_edges(), 8);
  EXPECT_EQ(G6Graph().num_edges(), 6);
  EXPECT_EQ(G3Graph().num_vertices(), 15);
  EXPECT_EQ(G4Graph().num_vertices(), 15);
}

}  // namespace
}  // namespace rvg
