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

#include <random>

#include "gtest/gtest.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"
#include "rvg/planarity.h"
#include "rvg/raster_oracle.h"
#include "rvg/sampling.h"

namespace rvg {
namespace {

Representation Make(std::vector<NamedRect> rects) {
  absl::StatusOr<Representation> r = Representation::Create(std::move(rects));
  EXPECT_TRUE(r.ok()) << r.status();
  return *r;
}

TEST(ValidateTest, Issues) {
  std::vector<NamedRect> bad = {{"A", Rect{0, 0, 0, 1}}};
  EXPECT_FALSE(Validate(bad).ok());
  std::vector<NamedRect> dup = {{"A", Rect{0, 0, 1, 1}}, {"A", Rect{2, 0, 3, 1}}};
  EXPECT_EQ(FindValidationIssue(dup)->kind, ValidationIssue::Kind::kDuplicateName);
  std::vector<NamedRect> overlap = {{"A", Rect{0, 0, 2, 2}}, {"B", Rect{1, 1, 3, 3}}};
  const std::optional<ValidationIssue> issue = FindValidationIssue(overlap);
  ASSERT_TRUE(issue.has_value());
  EXPECT_EQ(issue->kind, ValidationIssue::Kind::kInteriorOverlap);
  EXPECT_EQ(issue->first, "A");
  EXPECT_EQ(issue->second, "B");
  // Touching edges and corners are fine.
  std::vector<NamedRect> touching = {{"A", Rect{0, 0, 1, 1}}, {"B", Rect{1, 0, 2, 1}},
                                     {"C", Rect{2, 1, 3, 2}}};
  EXPECT_TRUE(Validate(touching).ok());
}

TEST(ValidateTest, CreateTranslatesToOrigin) {
  const Representation r = Make({{"A", Rect{3, 5, 4, 7}}, {"B", Rect{5, 5, 6, 6}}});
  EXPECT_EQ(r.box_width(), 3);
  EXPECT_EQ(r.box_height(), 2);
  EXPECT_EQ(r.rect(0), (Rect{0, 0, 1, 2}));
}

TEST(SightTest, OpenLaneSemantics) {
  // Corner contact only: no shared open lane.
  const Representation corner = Make({{"A", Rect{0, 0, 1, 1}}, {"B", Rect{1, 1, 2, 2}}});
  EXPECT_FALSE(Sees(corner, 0, 1).has_value());
  // Adjacent rectangles see each other along the shared lane.
  const Representation adjacent = Make({{"A", Rect{0, 0, 1, 1}}, {"B", Rect{1, 0, 2, 1}}});
  const std::optional<SightEdge> e = Sees(adjacent, 0, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->orientation, Orientation::kHorizontal);
  EXPECT_EQ(e->lane, 0);
  // A blocker covering the only lane.
  const Representation blocked =
      Make({{"A", Rect{0, 0, 1, 1}}, {"M", Rect{1, 0, 2, 1}}, {"B", Rect{2, 0, 3, 1}}});
  EXPECT_FALSE(Sees(blocked, 0, 2).has_value());
  // The blocker leaves the upper lane free.
  const Representation partial =
      Make({{"A", Rect{0, 0, 1, 2}}, {"M", Rect{1, 0, 2, 1}}, {"B", Rect{2, 0, 3, 2}}});
  const std::optional<SightEdge> f = Sees(partial, 0, 2);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lane, 1);
  EXPECT_FALSE(Sees(partial, "A", "Z").ok());
}

TEST(SightTest, FigureOneLayout) {
  const Representation r = Make({{"A", Rect{0, 2, 1, 6}},
                                 {"B", Rect{1, 5, 3, 7}},
                                 {"C", Rect{5, 0, 6, 2}},
                                 {"D", Rect{2, 1, 4, 3}},
                                 {"E", Rect{3, 4, 5, 5}},
                                 {"F", Rect{0, 7, 1, 8}}});
  const Graph g = VisibilityGraph(r).graph;
  EXPECT_FALSE(g.HasEdge(1, 5));  // B, F
  EXPECT_TRUE(g.HasEdge(0, 1));   // A, B through row 5
  EXPECT_TRUE(g.HasEdge(0, 5));   // A, F through column 0
  EXPECT_TRUE(g.HasEdge(2, 3));   // C, D through row 1
  EXPECT_EQ(g, RasterVisibilityGraph(r));
}

TEST(SightTest, MatchesRasterOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    const Representation r = RandomRepresentation(rng, 1 + i % 10, 2 + i % 9);
    ASSERT_EQ(VisibilityGraph(r).graph, RasterVisibilityGraph(r));
  }
}

TEST(SightTest, WitnessLanesAreFree) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const Representation r = RandomRepresentation(rng, 8, 8);
    for (const SightEdge& e : VisibilityGraph(r).edges) {
      const Rect& a = r.rect(e.a);
      const Rect& b = r.rect(e.b);
      if (e.orientation == Orientation::kHorizontal) {
        EXPECT_TRUE(a.y1 <= e.lane && e.lane + 1 <= a.y2);
        EXPECT_TRUE(b.y1 <= e.lane && e.lane + 1 <= b.y2);
      } else {
        EXPECT_TRUE(a.x1 <= e.lane && e.lane + 1 <= a.x2);
        EXPECT_TRUE(b.x1 <= e.lane && e.lane + 1 <= b.x2);
      }
    }
  }
}

TEST(SymmetryTest, GraphInvariantUnderDihedralGroup) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Representation r = RandomRepresentation(rng, 7, 7);
    const Graph g = VisibilityGraph(r).graph;
    for (Symmetry s : kAllSymmetries) {
      const Representation t = Transform(r, s);
      EXPECT_EQ(VisibilityGraph(t).graph, g);
      const bool swap = SwapsAxes(s);
      EXPECT_EQ(t.box_width(), swap ? r.box_height() : r.box_width());
      EXPECT_EQ(Transform(t, Inverse(s)), r);
    }
  }
}

TEST(DirectionsTest, Partition) {
  const Representation r = Make({{"C", Rect{1, 1, 2, 2}},
                                 {"N", Rect{1, 3, 2, 4}},
                                 {"S", Rect{0, 0, 3, 1}},
                                 {"E", Rect{2, 1, 3, 3}},
                                 {"W", Rect{0, 1, 1, 2}}});
  const DirectionalSets d = Directions(r, 0);
  EXPECT_EQ(d.north, std::vector<int>{1});
  EXPECT_EQ(d.south, std::vector<int>{2});
  EXPECT_EQ(d.east, std::vector<int>{3});
  EXPECT_EQ(d.west, std::vector<int>{4});
}

TEST(PlanarityTest, KnownGraphs) {
  EXPECT_TRUE(*IsPlanar(CompleteGraph(4)));
  EXPECT_FALSE(*IsPlanar(CompleteGraph(5)));
  EXPECT_FALSE(*IsPlanar(CompleteBipartiteGraph(3, 3)));
  EXPECT_TRUE(*IsPlanar(GridGraph(4, 4)));
}

TEST(PlanarityTest, DirectionSplitCoversEdges) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Representation r = RandomRepresentation(rng, 12, 10);
    const DirectionSplit s = SplitByDirection(r);
    EXPECT_EQ(s.vertical.num_edges() + s.horizontal.num_edges(),
              VisibilityGraph(r).graph.num_edges());
    EXPECT_TRUE(*IsPlanar(s.vertical));
    EXPECT_TRUE(*IsPlanar(s.horizontal));
  }
}

}  // namespace
}  // namespace rvg
