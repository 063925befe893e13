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

// Random valid representations for property checks.

#ifndef RVG_SAMPLING_H_
#define RVG_SAMPLING_H_

#include <random>

#include "rvg/geometry.h"

namespace rvg {

// Up to `max_rects` rectangles (at least one) with integer corners inside a
// max_side x max_side square, placed by rejection. Rectangle i is named
// DefaultVertexName(i).
Representation RandomRepresentation(std::mt19937_64& rng, int max_rects,
                                    int max_side);

}  // namespace rvg

#endif  // RVG_SAMPLING_H_
