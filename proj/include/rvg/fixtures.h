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

// Bundled representations. fixtures/manifest.json lists, for each fixture,
// its representation file, the graph it must represent, its declared box,
// and where the coordinates came from:
//
//   {"fixtures": [
//     {"id": "fig13-K7", "file": "fig13-K7.json", "graph": "K7",
//      "height": 7, "width": 8, "provenance": "derived-by-search",
//      "non_edges": [], "note": "..."}
//   ]}
//
// "graph" is a graph name, graph6 string or edge list.
// Heights and widths are declared with height <= width.

#ifndef RVG_FIXTURES_H_
#define RVG_FIXTURES_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "rvg/analysis.h"
#include "rvg/geometry.h"
#include "rvg/graph.h"

namespace rvg {

enum class Provenance { kTranscribedFromFigure, kDerivedBySearch };
const char* ProvenanceName(Provenance p);

struct Fixture {
  std::string id;
  std::string path;  // Representation file.
  std::string graph_spec;
  Graph graph;
  Box box;
  Provenance provenance = Provenance::kDerivedBySearch;
  // Named pairs that must not see each other.
  std::vector<std::pair<std::string, std::string>> non_edges;
  std::string note;
  Representation rep;
};

// The compiled-in fixture directory, unless RVG_FIXTURE_DIR is set in the
// environment.
std::string DefaultFixtureDir();

// Validity, graph isomorphism, declared box and non-edges.
absl::Status CheckFixture(const Fixture& f);

// Loads and checks every fixture in the manifest; any failure is an error
// naming the fixture.
absl::StatusOr<std::vector<Fixture>> LoadFixtures(const std::string& dir);

absl::StatusOr<Fixture> FindFixture(const std::vector<Fixture>& fixtures,
                                    const std::string& id);

}  // namespace rvg

#endif  // RVG_FIXTURES_H_
