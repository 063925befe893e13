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

#ifndef RVG_GRAPH6_H_
#define RVG_GRAPH6_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "rvg/graph.h"

namespace rvg {

// graph6 short form (n <= 62), without the optional ">>graph6<<" header.
// Surrounding whitespace is ignored on input.
absl::StatusOr<Graph> FromGraph6(std::string_view text);
std::string ToGraph6(const Graph& g);

}  // namespace rvg

#endif  // RVG_GRAPH6_H_
