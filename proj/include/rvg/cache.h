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

// Append-only store of exhaustive box verdicts, one JSON object per line in
// <dir>/results.jsonl. Records are keyed by canonical graph, box, box mode
// and configuration fingerprint; a record written under a different
// fingerprint never answers a lookup.

#ifndef RVG_CACHE_H_
#define RVG_CACHE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "absl/status/statusor.h"
#include "rvg/geometry.h"

namespace rvg {

struct CacheKey {
  std::string graph_id;  // Canonical graph6.
  int height = 0;
  int width = 0;
  bool exact = false;
  std::string fingerprint;

  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    return std::tie(a.graph_id, a.height, a.width, a.exact, a.fingerprint) <
           std::tie(b.graph_id, b.height, b.width, b.exact, b.fingerprint);
  }
};

struct CacheRecord {
  CacheKey key;
  bool feasible = false;
  // Rectangle of each canonical vertex, when feasible.
  std::vector<Rect> witness;
  int64_t nodes = 0;
  int64_t prunes = 0;
  int64_t unix_time = 0;
};

class ResultsCache {
 public:
  // Creates `dir` if needed and loads any existing records. Malformed lines
  // are skipped.
  static absl::StatusOr<std::unique_ptr<ResultsCache>> Open(const std::string& dir);

  std::optional<CacheRecord> Lookup(const CacheKey& key) const;
  absl::Status Append(const CacheRecord& record);
  size_t size() const;

 private:
  explicit ResultsCache(std::string path) : path_(std::move(path)) {}

  std::string path_;
  mutable std::mutex mu_;
  std::map<CacheKey, CacheRecord> records_;
};

// Directory from --cache-dir, else $RVG_CACHE_DIR, else empty (no cache).
std::string ResolveCacheDir(const std::string& flag_value);

}  // namespace rvg

#endif  // RVG_CACHE_H_
