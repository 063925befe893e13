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
#include <climits>
#include <filesystem>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "rvg/cache.h"
#include "rvg/canonical.h"
#include "rvg/graph6.h"
#include "rvg/named_graphs.h"
#include "rvg/raster_oracle.h"
#include "rvg/search.h"

namespace rvg {
namespace {

// Canonical encodings of every graph realized by some set of at most
// `max_n` interior-disjoint rectangles inside h x w, by size.
using Realized = std::map<int, std::set<std::string>>;

void Extend(const std::vector<Rect>& all, size_t from, std::vector<NamedRect>& chosen,
            int max_n, Realized& out) {
  if (!chosen.empty()) {
    const Representation rep = *Representation::Create(chosen);
    out[rep.size()].insert(Canonical(RasterVisibilityGraph(rep))->encoding);
  }
  if (static_cast<int>(chosen.size()) == max_n) return;
  for (size_t i = from; i < all.size(); ++i) {
    bool free = true;
    for (const NamedRect& c : chosen) free &= !InteriorsOverlap(c.rect, all[i]);
    if (!free) continue;
    chosen.push_back(NamedRect{DefaultVertexName(static_cast<int>(chosen.size())), all[i]});
    Extend(all, i + 1, chosen, max_n, out);
    chosen.pop_back();
  }
}

Realized BruteForce(int h, int w, int max_n) {
  std::vector<Rect> all;
  for (int y1 = 0; y1 < h; ++y1) {
    for (int y2 = y1 + 1; y2 <= h; ++y2) {
      for (int x1 = 0; x1 < w; ++x1) {
        for (int x2 = x1 + 1; x2 <= w; ++x2) all.push_back(Rect{x1, y1, x2, y2});
      }
    }
  }
  Realized out;
  std::vector<NamedRect> chosen;
  Extend(all, 0, chosen, max_n, out);
  return out;
}

std::vector<Graph> GraphsUpTo(int n, bool connected_only) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    for (const Graph& g : std::vector<Graph>(*AllGraphs(k, connected_only))) out.push_back(g);
  }
  return out;
}

SearchConfig Unlimited() {
  SearchConfig cfg;
  cfg.time_budget_seconds = 0;
  return cfg;
}

struct BoxCase {
  int h, w, max_n;
};

constexpr BoxCase kBoxes[] = {{1, 4, 4}, {2, 2, 4}, {2, 3, 4}, {2, 4, 5}, {2, 5, 5},
                              {2, 6, 4}, {3, 3, 5}, {3, 4, 4}};

class BruteForceTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    realized_ = new std::map<std::pair<int, int>, Realized>;
    for (const BoxCase& b : kBoxes) (*realized_)[{b.h, b.w}] = BruteForce(b.h, b.w, b.max_n);
  }
  static void TearDownTestSuite() { delete realized_; }
  static bool Fits(const Graph& g, int h, int w) {
    const Realized& r = realized_->at({h, w});
    auto it = r.find(g.num_vertices());
    return it != r.end() && it->second.count(Canonical(g)->encoding) > 0;
  }
  static std::map<std::pair<int, int>, Realized>* realized_;
};

std::map<std::pair<int, int>, Realized>* BruteForceTest::realized_ = nullptr;

TEST_F(BruteForceTest, FeasibilityMatches) {
  for (const BoxCase& b : kBoxes) {
    for (const Graph& g : GraphsUpTo(b.max_n, b.max_n <= 4 ? false : true)) {
      absl::StatusOr<BoxResult> r = DecideFeasible(g, b.h, b.w, Unlimited());
      ASSERT_TRUE(r.ok());
      const bool expected = Fits(g, b.h, b.w);
      EXPECT_EQ(r->verdict == Verdict::kFeasible, expected)
          << ToGraph6(g) << " in " << b.h << "x" << b.w;
      if (r->verdict == Verdict::kFeasible) {
        const Representation& w = *r->witness;
        EXPECT_EQ(VisibilityGraph(w).graph, g);
        EXPECT_LE(std::min(w.box_height(), w.box_width()), b.h);
        EXPECT_LE(std::max(w.box_height(), w.box_width()), b.w);
      }
    }
  }
}

TEST_F(BruteForceTest, FrontierConsistent) {
  for (const Graph& g : GraphsUpTo(4, false)) {
    absl::StatusOr<BoxFrontier> f = ComputeFrontier(g, Unlimited());
    ASSERT_TRUE(f.ok());
    EXPECT_TRUE(f->complete);
    for (const BoxCase& b : kBoxes) {
      const bool fits = std::any_of(f->boxes.begin(), f->boxes.end(), [&](const FrontierBox& x) {
        return x.box.FitsIn(Box{b.h, b.w});
      });
      EXPECT_EQ(fits, Fits(g, b.h, b.w)) << ToGraph6(g) << " " << b.h << "x" << b.w;
    }
    for (const FrontierBox& x : f->boxes) {
      ASSERT_TRUE(x.witness.has_value());
      EXPECT_EQ(VisibilityGraph(*x.witness).graph, g);
    }
  }
}

TEST_F(BruteForceTest, MinimumAreaMatches) {
  for (const Graph& g : GraphsUpTo(4, false)) {
    int best = INT_MAX;
    for (const BoxCase& b : kBoxes) {
      if (Fits(g, b.h, b.w)) best = std::min(best, b.h * b.w);
    }
    if (Fits(g, 1, 4)) best = std::min(best, g.num_vertices());  // Squeezed path.
    absl::StatusOr<SearchReport> r = Minimize(g, Parameter::kArea, Unlimited());
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->status, ReportStatus::kProven);
    if (best <= 12) EXPECT_EQ(r->value, best) << ToGraph6(g);
  }
}

struct Toggle {
  const char* name;
  bool SearchConfig::*field;
};

TEST(PruningTest, TogglesAgree) {
  const Toggle toggles[] = {{"degree_perimeter", &SearchConfig::degree_perimeter},
                            {"monotone_edge", &SearchConfig::monotone_edge},
                            {"canonical_leaves", &SearchConfig::canonical_leaves}};
  const std::pair<int, int> boxes[] = {{2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}};
  for (const Graph& g : std::vector<Graph>(*AllGraphs(5, true))) {
    for (auto [h, w] : boxes) {
      const Verdict base = DecideFeasible(g, h, w, Unlimited())->verdict;
      for (const Toggle& t : toggles) {
        SearchConfig cfg = Unlimited();
        cfg.*(t.field) = false;
        EXPECT_EQ(DecideFeasible(g, h, w, cfg)->verdict, base)
            << t.name << " " << ToGraph6(g) << " " << h << "x" << w;
      }
    }
  }
}

TEST(PruningTest, ComponentBoxesAgree) {
  SearchConfig plain = Unlimited();
  plain.component_boxes = false;
  const std::pair<int, int> boxes[] = {{3, 4}, {3, 5}, {4, 4}, {4, 5}};
  for (const Graph& g : std::vector<Graph>(*AllGraphs(6, false))) {
    if (g.IsConnected()) continue;
    for (auto [h, w] : boxes) {
      const absl::StatusOr<BoxResult> a = DecideFeasible(g, h, w, Unlimited());
      const absl::StatusOr<BoxResult> b = DecideFeasible(g, h, w, plain);
      EXPECT_EQ(a->verdict, b->verdict) << ToGraph6(g) << " " << h << "x" << w;
    }
  }
}

TEST(DeterminismTest, JobsDoNotChangeResults) {
  SearchConfig one = Unlimited();
  SearchConfig many = Unlimited();
  many.jobs = 3;
  for (const Graph& g : {G5Graph(), G6Graph(), CycleGraph(6)}) {
    for (auto [h, w] : {std::pair{2, 4}, {3, 4}, {4, 4}, {2, 7}}) {
      const absl::StatusOr<BoxResult> a = DecideFeasible(g, h, w, one);
      const absl::StatusOr<BoxResult> b = DecideFeasible(g, h, w, many);
      EXPECT_EQ(a->verdict, b->verdict);
      EXPECT_EQ(a->nodes, b->nodes);
      EXPECT_EQ(a->witness, b->witness);
    }
  }
}

TEST(SearchTest, KnownValues) {
  EXPECT_EQ(Minimize(PathGraph(6), Parameter::kHeight, Unlimited())->value, 1);
  EXPECT_EQ(Minimize(CycleGraph(6), Parameter::kArea, Unlimited())->value, 8);
  EXPECT_EQ(Minimize(StarGraph(4), Parameter::kPerimeter, Unlimited())->value, 12);
  EXPECT_EQ(Minimize(EmptyGraph(3), Parameter::kWidth, Unlimited())->value, 3);
  // C6 does not fit 2 x 3.
  EXPECT_EQ(DecideFeasible(CycleGraph(6), 2, 3, Unlimited())->verdict, Verdict::kInfeasible);
}

TEST(SearchTest, CapsAreReported) {
  SearchConfig cfg = Unlimited();
  cfg.max_width = 2;
  absl::StatusOr<SearchReport> r = Minimize(EmptyGraph(3), Parameter::kArea, cfg);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->status, ReportStatus::kInfeasibleUpTo);
  SearchConfig tiny = Unlimited();
  tiny.node_budget = 10;
  absl::StatusOr<BoxResult> b = DecideFeasible(G4Graph(), 5, 5, tiny);
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b->verdict, Verdict::kUnknown);
}

TEST(SearchTest, CompleteSolverMatchesGeneralSearch) {
  for (auto [h, w] : {std::pair{4, 5}, {4, 6}, {5, 5}}) {
    const Verdict a = SolveComplete(6, h, w, Unlimited())->verdict;
    const Verdict b = DecideFeasible(CompleteGraph(6), h, w, Unlimited())->verdict;
    EXPECT_EQ(a, b) << h << "x" << w;
  }
  const absl::StatusOr<BoxResult> k7 = SolveComplete(7, 7, 8, Unlimited());
  ASSERT_TRUE(k7.ok());
  ASSERT_EQ(k7->verdict, Verdict::kFeasible);
  EXPECT_EQ(RasterVisibilityGraph(*k7->witness), CompleteGraph(7));
  EXPECT_EQ(SolveComplete(7, 7, 7, Unlimited())->verdict, Verdict::kInfeasible);
}

TEST(SearchTest, CacheGivesSameResult) {
  const std::string dir = ::testing::TempDir() + "/rvg_search_cache";
  std::filesystem::remove_all(dir);
  absl::StatusOr<std::unique_ptr<ResultsCache>> cache = ResultsCache::Open(dir);
  ASSERT_TRUE(cache.ok());
  SearchConfig cfg = Unlimited();
  cfg.cache = cache->get();
  const absl::StatusOr<BoxResult> fresh = DecideFeasible(G5Graph(), 4, 4, cfg);
  const absl::StatusOr<BoxResult> again = DecideFeasible(G5Graph(), 4, 4, cfg);
  EXPECT_FALSE(fresh->cached);
  EXPECT_TRUE(again->cached);
  EXPECT_EQ(fresh->witness, again->witness);
  EXPECT_EQ(fresh->nodes, again->nodes);
  absl::StatusOr<std::unique_ptr<ResultsCache>> reopened = ResultsCache::Open(dir);
  ASSERT_TRUE(reopened.ok());
  EXPECT_EQ((*reopened)->size(), (*cache)->size());
}

}  // namespace
}  // namespace rvg
