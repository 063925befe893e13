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

// Named example graphs, graph arguments on the command line, and exhaustive
// lists of small graphs up to isomorphism.

#ifndef RVG_NAMED_GRAPHS_H_
#define RVG_NAMED_GRAPHS_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

// K_{1,leaves}; vertex 0 is the centre.
Graph StarGraph(int leaves);

// Two triangles joined by a path of length two through a middle vertex.
Graph G5Graph();
// Tree on 7 vertices: two degree-3 vertices joined through a degree-2 vertex,
// each carrying two leaves.
Graph G6Graph();
// 6-vertex connected graphs separating height from area: G1 has height 2 and
// area 10, G2 height 3 and area 9. Each is the first graph in canonical
// graph6 order with that pair of values.
Graph G1Graph();
Graph G2Graph();

// 15-rectangle layouts separating width from perimeter.
Representation G3Layout();  // 3 x 6.
Representation G4Layout();  // 5 x 5.
Graph G3Graph();
Graph G4Graph();

// Resolves P<n>, C<n>, K<n>, E<n>, K<p>,<q>, grid<h>x<w> and G1..G6
// (case-sensitive for the leading letter).
absl::StatusOr<Graph> NamedGraph(std::string_view name);

// A named graph, a graph6 string, an edge list "n; u-v, ...", or a path to a
// file holding either text form.
absl::StatusOr<Graph> ParseGraphArgument(std::string_view arg);

// All graphs on n vertices up to isomorphism (n <= 7), optionally only the
// connected ones, sorted by canonical graph6 encoding. Each graph is given
// in its canonical labelling.
absl::StatusOr<std::vector<Graph>> AllGraphs(int n, bool connected_only);

}  // namespace rvg

#endif  // RVG_NAMED_GRAPHS_H_
