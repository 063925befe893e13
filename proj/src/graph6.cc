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

#include "rvg/graph6.h"

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace rvg {

namespace {
constexpr int kMaxShortForm = 62;
}  // namespace

absl::StatusOr<Graph> FromGraph6(std::string_view input) {
  const absl::string_view text =
      absl::StripAsciiWhitespace(absl::string_view(input.data(), input.size()));
  if (text.empty()) return absl::InvalidArgumentError("empty graph6 string");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 0 || n > kMaxShortForm) {
    return absl::InvalidArgumentError(
        "graph6 header outside the short form (n <= 62)");
  }
  const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t body = (bits + 5) / 6;
  if (text.size() != body + 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "graph6 body has ", text.size() - 1, " bytes, expected ", body));
  }
  Graph g(n);
  size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) {
        return absl::InvalidArgumentError("graph6 byte out of range");
      }
      if ((byte >> (5 - k % 6)) & 1) g.AddEdge(u, v);
    }
  }
  for (size_t i = 1; i < text.size(); ++i) {
    const int byte = static_cast<unsigned char>(text[i]) - 63;
    if (byte < 0 || byte > 63) {
      return absl::InvalidArgumentError("graph6 byte out of range");
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      return absl::InvalidArgumentError("graph6 padding bits are not zero");
    }
  }
  return g;
}

std::string ToGraph6(const Graph& g) {
  const int n = g.num_vertices();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.HasEdge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace rvg
