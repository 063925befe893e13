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

#include <climits>

#include "gtest/gtest.h"
#include "rvg/analysis.h"
#include "rvg/canonical.h"
#include "rvg/named_graphs.h"
#include "rvg/search.h"

namespace rvg {
namespace {

// Least value of each parameter over boxes with room for n unit squares.
ParamBounds Enumerated(int n) {
  ParamBounds b{INT_MAX, INT_MAX, INT_MAX, INT_MAX};
  for (int h = 1; h <= n; ++h) {
    for (int w = h; w <= n; ++w) {
      if (h * w < n) continue;
      b.height_lb = std::min(b.height_lb, h);
      b.width_lb = std::min(b.width_lb, w);
      b.area_lb = std::min(b.area_lb, h * w);
      b.perimeter_lb = std::min(b.perimeter_lb, 2 * (h + w));
    }
  }
  return b;
}

TEST(BoundsTest, ClosedFormMatchesEnumeration) {
  for (int n = 1; n <= 200; ++n) {
    const ParamBounds a = *LowerBounds(n);
    const ParamBounds b = Enumerated(n);
    EXPECT_EQ(a.height_lb, b.height_lb) << n;
    EXPECT_EQ(a.width_lb, b.width_lb) << n;
    EXPECT_EQ(a.area_lb, b.area_lb) << n;
    EXPECT_EQ(a.perimeter_lb, b.perimeter_lb) << n;
    for (const Box& e : PerimeterEqualityBoxes(n)) {
      EXPECT_GE(e.area(), n);
      EXPECT_EQ(e.perimeter(), b.perimeter_lb);
    }
  }
  EXPECT_FALSE(LowerBounds(0).ok());
}

TEST(BoundsTest, Examples) {
  EXPECT_EQ(LowerBounds(70)->perimeter_lb, 34);
  EXPECT_EQ(PerimeterEqualityBoxes(70), (std::vector<Box>{{7, 10}, {8, 9}}));
  EXPECT_EQ(LowerBounds(120)->perimeter_lb, 44);
  EXPECT_EQ(PerimeterEqualityBoxes(120), (std::vector<Box>{{10, 12}, {11, 11}}));
  EXPECT_EQ(CeilSqrt(10), 4);
  EXPECT_EQ(RoundSqrt(12), 3);
  EXPECT_EQ(RoundSqrt(13), 4);
}

TEST(BoxTest, Basics) {
  EXPECT_EQ(Box::Normalized(5, 2), (Box{2, 5}));
  EXPECT_TRUE((Box{2, 5}).FitsIn(Box{5, 3}));
  EXPECT_FALSE((Box{3, 3}).FitsIn(Box{2, 9}));
  EXPECT_EQ((Box{3, 4}).Value(Parameter::kPerimeter), 14);
  EXPECT_EQ(*ParseParameter("Area"), Parameter::kArea);
  EXPECT_FALSE(ParseParameter("depth").ok());
}

SearchConfig Unlimited() {
  SearchConfig cfg;
  cfg.time_budget_seconds = 0;
  return cfg;
}

TEST(ComposeTest, MatchesDirectSearch) {
  const std::vector<std::pair<Graph, Graph>> pairs = {
      {PathGraph(2), CompleteGraph(3)},
      {StarGraph(3), EmptyGraph(1)},
      {CycleGraph(4), PathGraph(3)},
      {CompleteGraph(4), EmptyGraph(2)}};
  for (const auto& [a, b] : pairs) {
    const BoxFrontier fa = *ComputeFrontier(a, Unlimited());
    const BoxFrontier fb = *ComputeFrontier(b, Unlimited());
    const BoxFrontier joint = ComposeFrontiers(fa, fb);
    const BoxFrontier direct = *ComputeFrontier(DisjointUnion(a, b), Unlimited());
    ASSERT_EQ(joint.boxes.size(), direct.boxes.size());
    for (size_t i = 0; i < joint.boxes.size(); ++i) {
      EXPECT_EQ(joint.boxes[i].box, direct.boxes[i].box);
      ASSERT_TRUE(joint.boxes[i].witness.has_value());
      EXPECT_TRUE(*Isomorphic(VisibilityGraph(*joint.boxes[i].witness).graph,
                              DisjointUnion(a, b)));
    }
    const Composition c = *ComposeDisjoint(fa, fb);
    for (Parameter p : kAllParameters) {
      const ParamValue& v = c.values[static_cast<int>(p)].result;
      EXPECT_TRUE(v.proven);
      EXPECT_EQ(v.value, Minimize(DisjointUnion(a, b), p, Unlimited())->value);
    }
  }
}

TEST(ComposeTest, RemarkAreas) {
  const BoxFrontier p4 = *ComputeFrontier(PathGraph(4), Unlimited());
  const BoxFrontier star = *ComputeFrontier(StarGraph(4), Unlimited());
  EXPECT_EQ(ComposeDisjoint(p4, star)->values[static_cast<int>(Parameter::kArea)].result.value,
            27);
  EXPECT_EQ(
      ComposeDisjoint(star, star)->values[static_cast<int>(Parameter::kArea)].result.value,
      36);
}

TEST(ComposeTest, GlueOffsetsAndRenames) {
  const Representation a = *Representation::Create({{"A", Rect{0, 0, 2, 1}}});
  const Representation glued = Glue(a, a, true);
  ASSERT_EQ(glued.size(), 2);
  EXPECT_EQ(glued.name(1), "A'");
  EXPECT_EQ(glued.rect(1), (Rect{2, 1, 3, 3}));
  EXPECT_EQ(VisibilityGraph(glued).graph.num_edges(), 0);
}

TEST(QK8Test, FormulasMatchComposition) {
  for (int n = 1; n <= 40; ++n) {
    const QK8Prediction a = *QK8Construction(n);
    const QK8Prediction b = *QK8ByComposition(n);
    EXPECT_EQ(a.height, b.height) << n;
    EXPECT_EQ(a.area, b.area) << n;
    EXPECT_EQ(a.perimeter, b.perimeter) << n;
  }
  EXPECT_EQ(QK8Construction(16)->height, 20);
  EXPECT_EQ(QK8Construction(11)->area, 13 * 13);
}

TEST(CharacterizationTest, SmallCatalog) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : std::vector<Graph>(*AllGraphs(n, true))) {
      const CatalogEntry e = *CatalogOne(g, "", Unlimited());
      absl::StatusOr<CharacterizationReport> r =
          EqualityCharacterizations(g, e.values, e.frontier);
      ASSERT_TRUE(r.ok()) << e.graph_id << " " << r.status();
      EXPECT_EQ(r->height_is_one, r->is_path);
      EXPECT_EQ(r->area_is_n, r->is_grid);
    }
  }
}

TEST(CharacterizationTest, RejectsUnproven) {
  std::array<ParamValue, 4> values{};
  EXPECT_FALSE(EqualityCharacterizations(PathGraph(3), values, BoxFrontier{}).ok());
}

TEST(EmptyGraphTest, Frontier) {
  const BoxFrontier f = EmptyGraphFrontier(5);
  ASSERT_EQ(f.boxes.size(), 1u);
  EXPECT_EQ(f.boxes[0].box, (Box{5, 5}));
  EXPECT_EQ(VisibilityGraph(*f.boxes[0].witness).graph, EmptyGraph(5));
  const BoxFrontier searched = *ComputeFrontier(EmptyGraph(4), Unlimited());
  ASSERT_EQ(searched.boxes.size(), 1u);
  EXPECT_EQ(searched.boxes[0].box, (Box{4, 4}));
}

}  // namespace
}  // namespace rvg
