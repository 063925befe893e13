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

#include "rvg/planarity.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace rvg {

absl::StatusOr<bool> IsPlanar(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kMaxPlanarityVertices) {
    return absl::InvalidArgumentError(absl::StrCat(
        "planarity test supports at most ", kMaxPlanarityVertices, " vertices"));
  }
  if (n < 5 || g.num_edges() < 9) return true;
  if (g.num_edges() > 3 * n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (auto [u, v] : g.Edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

DirectionSplit SplitByDirection(const Representation& rep) {
  TaggedGraph tagged = VisibilityGraph(rep);
  DirectionSplit split{Graph(rep.size()), Graph(rep.size())};
  for (const SightEdge& e : tagged.edges) {
    Graph& part = e.orientation == Orientation::kVertical ? split.vertical
                                                          : split.horizontal;
    part.AddEdge(e.a, e.b);
  }
  return split;
}

}  // namespace rvg
