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

#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "rvg/cache.h"
#include "rvg/fixtures.h"
#include "rvg/named_graphs.h"
#include "rvg/rep_io.h"
#include "rvg/sampling.h"
#include "rvg/svg.h"

namespace rvg {
namespace {

std::string TempDir(const std::string& name) {
  const std::string dir = ::testing::TempDir() + "/" + name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(RepIoTest, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Representation r = RandomRepresentation(rng, 9, 9);
    absl::StatusOr<Representation> back = ParseRepresentation(WriteRepresentation(r));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, r);
  }
}

TEST(RepIoTest, RejectsMalformed) {
  EXPECT_FALSE(ParseRepresentation("not json").ok());
  EXPECT_FALSE(ParseRepresentation(R"({"rects": 3})").ok());
  EXPECT_FALSE(ParseRepresentation(
                   R"({"rects": [{"name": "A", "x1": 0, "y1": 0, "x2": 2, "y2": 2},
                                 {"name": "B", "x1": 1, "y1": 1, "x2": 3, "y2": 3}]})")
                   .ok());
  EXPECT_FALSE(ReadRepresentationFile("/nonexistent/file.json").ok());
}

TEST(CacheTest, AppendAndReload) {
  const std::string dir = TempDir("rvg_cache");
  CacheRecord rec;
  rec.key = CacheKey{"E@U_", 2, 4, true, "fp"};
  rec.feasible = true;
  rec.witness = {Rect{0, 0, 1, 1}, Rect{1, 0, 2, 2}};
  rec.nodes = 42;
  {
    std::unique_ptr<ResultsCache> c = *ResultsCache::Open(dir);
    ASSERT_TRUE(c->Append(rec).ok());
    EXPECT_EQ(c->size(), 1u);
  }
  // A damaged line is skipped on reload.
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path(), std::ios::app) << "{broken\n";
  }
  std::unique_ptr<ResultsCache> c = *ResultsCache::Open(dir);
  EXPECT_EQ(c->size(), 1u);
  const std::optional<CacheRecord> hit = c->Lookup(rec.key);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->witness, rec.witness);
  EXPECT_EQ(hit->nodes, 42);
  CacheKey other = rec.key;
  other.fingerprint = "different";
  EXPECT_FALSE(c->Lookup(other).has_value());
}

TEST(SvgTest, Elements) {
  const Representation r = *Representation::Create(
      {{"A", Rect{0, 0, 1, 2}}, {"B", Rect{1, 0, 3, 1}}, {"C", Rect{1, 1, 2, 2}}});
  SvgOptions o;
  o.sight_lines = true;
  const std::string svg = RenderSvg(r, o);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find(">A<"), std::string::npos);
  EXPECT_NE(svg.find(">C<"), std::string::npos);
  size_t lines = 0;
  for (size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) {
    ++lines;
  }
  // Grid lines plus one lane per edge.
  const int grid = r.box_width() + 1 + r.box_height() + 1;
  EXPECT_EQ(lines, static_cast<size_t>(grid + VisibilityGraph(r).graph.num_edges()));
  const std::string empty = RenderSvg(Representation());
  EXPECT_NE(empty.find("<svg"), std::string::npos);
}

TEST(FixturesTest, BundledFixturesLoad) {
  absl::StatusOr<std::vector<Fixture>> all = LoadFixtures(DefaultFixtureDir());
  ASSERT_TRUE(all.ok()) << all.status();
  EXPECT_EQ(all->size(), 15u);
  for (const char* id : {"fig1", "fig3-P6", "fig4-G1", "fig5-G3", "fig5-G4", "fig7-G5-S2",
                         "fig8-G6-S1", "fig13-K7", "fig13-K8"}) {
    EXPECT_TRUE(FindFixture(*all, id).ok()) << id;
  }
  EXPECT_EQ(FindFixture(*all, "fig13-K7")->box, (Box{7, 8}));
  EXPECT_EQ(FindFixture(*all, "fig13-K8")->box, (Box{10, 10}));
  EXPECT_EQ(FindFixture(*all, "fig5-G3")->box.perimeter(), 18);
  EXPECT_EQ(FindFixture(*all, "fig5-G4")->box.perimeter(), 20);
  EXPECT_FALSE(FindFixture(*all, "fig99").ok());
}

TEST(FixturesTest, MismatchesAreRejected) {
  absl::StatusOr<std::vector<Fixture>> all = LoadFixtures(DefaultFixtureDir());
  ASSERT_TRUE(all.ok());
  Fixture f = *FindFixture(*all, "fig13-K7");
  EXPECT_TRUE(CheckFixture(f).ok());
  Fixture wrong_box = f;
  wrong_box.box = Box{7, 7};
  EXPECT_FALSE(CheckFixture(wrong_box).ok());
  Fixture wrong_graph = f;
  wrong_graph.graph = CompleteGraph(6);
  EXPECT_FALSE(CheckFixture(wrong_graph).ok());
  Fixture wrong_pair = f;
  wrong_pair.non_edges = {{"A", "B"}};
  EXPECT_FALSE(CheckFixture(wrong_pair).ok());
}

TEST(FixturesTest, BadManifest) {
  const std::string dir = TempDir("rvg_bad_fixtures");
  std::ofstream(dir + "/manifest.json") << R"({"fixtures": [{"id": "x"}]})";
  EXPECT_FALSE(LoadFixtures(dir).ok());
  EXPECT_FALSE(LoadFixtures(dir + "/missing").ok());
}

}  // namespace
}  // namespace rvg
