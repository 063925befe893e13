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

// The exhaustive placement kernel behind every feasibility question.
//
// The grid has `rows` x `cols` unit cells, scanned row-major from the bottom.
// At the first undecided cell the search either marks it empty for good or
// puts the lower-left corner of a new rectangle there. Rectangles are
// unlabelled while searching; a partial layout survives only if its placed
// rectangles can still be mapped into the target graph (sight already fixed
// must be an edge, sight already impossible must be a non-edge, and degrees
// must stay reachable). Because adding rectangles never creates sight between
// existing ones, this test is sound at every node and exact at the leaves.

#ifndef RVG_PACKING_SEARCH_H_
#define RVG_PACKING_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

inline constexpr int kMaxPackingVertices = 16;

struct PackingProblem {
  Graph target;
  int rows = 0;
  int cols = 0;
  // Fixed rectangles (x = column, y = row) present before the search starts.
  std::vector<Rect> preplaced;
  // Keep only layouts with no empty line, no two equal adjacent lines, and
  // occupied lines forming a prefix. Every layout can be squeezed into this
  // form without changing its graph, so nothing feasible is lost.
  bool normal_form = true;
  // Require every row and column to be occupied.
  bool exact_box = false;
  // Accept a leaf only if its occupancy is least among its images under the
  // symmetries of the grid.
  bool canonical_leaves = true;
  bool monotone_edge = true;
  bool degree_perimeter = true;
  // Disconnected targets: each component must fit the box it gets after the
  // lanes of the other components are deleted (decided by a search on the
  // component alone).
  bool component_boxes = true;
};

struct PackingLimits {
  int jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int64_t max_nodes = 0;  // 0 disables the node cap.
};

enum class PackingOutcome { kFound, kExhausted, kAborted };

struct PackingResult {
  PackingOutcome outcome = PackingOutcome::kExhausted;
  // witness[v] is the rectangle of target vertex v (grid coordinates).
  std::vector<Rect> witness;
  int64_t nodes = 0;
  int64_t prunes = 0;
};

// Finds the first accepted layout in search order. The outcome and witness do
// not depend on `limits.jobs`; neither do the counters unless aborted.
PackingResult SolvePacking(const PackingProblem& problem,
                           const PackingLimits& limits);

// Calls `visit` on accepted layouts in search order until it returns false.
// Returns the number of layouts visited.
int64_t EnumeratePackings(
    const PackingProblem& problem,
    const std::function<bool(const std::vector<Rect>&)>& visit);

}  // namespace rvg

#endif  // RVG_PACKING_SEARCH_H_
