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

// Canonical labelling for small graphs by individualization-refinement with
// automorphism pruning. Exact for every input up to kMaxCanonicalVertices.

#ifndef RVG_CANONICAL_H_
#define RVG_CANONICAL_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/graph.h"

namespace rvg {

inline constexpr int kMaxCanonicalVertices = 16;

struct CanonicalForm {
  // graph6 text of the canonically relabelled graph. Two graphs are
  // isomorphic iff their encodings are equal.
  std::string encoding;
  // labeling[v] is the canonical label of input vertex v.
  std::vector<int> labeling;
};

absl::StatusOr<CanonicalForm> Canonical(const Graph& g);

absl::StatusOr<bool> Isomorphic(const Graph& a, const Graph& b);

// A permutation p with a.Permuted(p) == b, or nullopt when not isomorphic.
absl::StatusOr<std::optional<std::vector<int>>> FindIsomorphism(const Graph& a,
                                                                const Graph& b);

}  // namespace rvg

#endif  // RVG_CANONICAL_H_
