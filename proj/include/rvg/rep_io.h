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

// Representation files: a JSON object
//
//   {
//     "width": 8,
//     "height": 7,
//     "rects": [
//       {"name": "A", "x1": 0, "y1": 6, "x2": 8, "y2": 7},
//       ...
//     ]
//   }
//
// Origin at the lower-left, y grows upward. WriteRepresentation emits exactly
// this layout, and ParseRepresentation(WriteRepresentation(r)) == r.

#ifndef RVG_REP_IO_H_
#define RVG_REP_IO_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "rvg/geometry.h"

namespace rvg {

absl::StatusOr<Representation> ParseRepresentation(std::string_view text);
std::string WriteRepresentation(const Representation& rep);

absl::StatusOr<Representation> ReadRepresentationFile(const std::string& path);
absl::Status WriteRepresentationFile(const Representation& rep,
                                     const std::string& path);

absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, std::string_view text);

}  // namespace rvg

#endif  // RVG_REP_IO_H_
