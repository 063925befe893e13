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
#include "rvg/canonical.h"
#include "rvg/sampling.h"
#include "rvg/search.h"
#include "rvg/transforms.h"

namespace rvg {
namespace {

std::vector<Representation> K6Samples(int limit) {
  std::vector<Representation> out = *SampleRepresentations(CompleteGraph(6), 5, 6, limit);
  EXPECT_FALSE(out.empty());
  return out;
}

Box BoxOf(const Representation& r) { return Box::Normalized(r.box_height(), r.box_width()); }

TEST(TopSetTest, Simple) {
  const Representation r = *Representation::Create(
      {{"A", Rect{0, 0, 1, 3}}, {"B", Rect{1, 2, 2, 3}}, {"C", Rect{2, 2, 3, 3}}});
  EXPECT_EQ(*TopSet(r), (std::vector<int>{1, 2}));
  EXPECT_FALSE(TopSet(Representation()).ok());
}

TEST(TopSetTest, SingletonOnCompleteGraphs) {
  for (const Representation& r : K6Samples(200)) {
    EXPECT_EQ(TopSet(r)->size(), 1u);
  }
}

TEST(ExtractTest, PreservesCompleteGraphAndBox) {
  for (const Representation& r : K6Samples(200)) {
    const int top = TopSet(r)->front();
    absl::StatusOr<Representation> up = ExtractUp(r, top);
    ASSERT_TRUE(up.ok()) << up.status();
    EXPECT_EQ(VisibilityGraph(*up).graph, CompleteGraph(6));
    EXPECT_EQ(BoxOf(*up), BoxOf(r));
    // The extracted rectangle spans the top row.
    EXPECT_EQ(up->rect(top), (Rect{0, up->box_height() - 1, up->box_width(), up->box_height()}));
    for (Side s : {Side::kTop, Side::kRight, Side::kBottom, Side::kLeft}) {
      absl::StatusOr<Representation> t = ExtractToward(r, s);
      ASSERT_TRUE(t.ok());
      EXPECT_EQ(VisibilityGraph(*t).graph, CompleteGraph(6));
    }
  }
}

TEST(ExtractTest, CheckedModeRejectsIncompleteInput) {
  const Representation path = *Representation::Create(
      {{"A", Rect{0, 0, 1, 1}}, {"B", Rect{1, 0, 2, 1}}, {"C", Rect{2, 1, 3, 2}}});
  EXPECT_FALSE(ExtractUp(path, 2).ok());
  EXPECT_TRUE(ExtractUp(path, 2, ExtractMode::kUnchecked).ok());
  EXPECT_FALSE(ExtractUp(path, 0, ExtractMode::kUnchecked).ok());  // Not on top.
}

TEST(NormalizeTest, FourStripBoundary) {
  for (const Representation& r : K6Samples(200)) {
    absl::StatusOr<NormalizedBoundary> nb = NormalizeBoundary(r);
    ASSERT_TRUE(nb.ok()) << nb.status();
    EXPECT_TRUE(BoundaryCoveredByFourStrips(nb->rep));
    EXPECT_EQ(VisibilityGraph(nb->rep).graph, CompleteGraph(6));
    EXPECT_EQ(BoxOf(nb->rep), BoxOf(r));
    const int u = nb->rep.box_width(), v = nb->rep.box_height();
    EXPECT_EQ(nb->rep.rect(nb->strips[static_cast<int>(Side::kLeft)]), (Rect{0, 0, 1, v}));
    EXPECT_EQ(nb->rep.rect(nb->strips[static_cast<int>(Side::kBottom)]), (Rect{1, 0, u, 1}));
  }
}

TEST(CompressTest, KeepsGraph) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const Representation r = RandomRepresentation(rng, 7, 9);
    const CompressResult c = Compress(r);
    EXPECT_EQ(c.rep.size(), r.size());
    EXPECT_TRUE(*Isomorphic(VisibilityGraph(c.rep).graph, VisibilityGraph(r).graph));
    EXPECT_LE(c.rep.box_width(), r.box_width());
    EXPECT_LE(c.rep.box_height(), r.box_height());
    EXPECT_LE(c.rep.box_width(), 2 * r.size() - 1);
  }
}

}  // namespace
}  // namespace rvg
