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

#include "rvg/cache.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace rvg {

namespace {

using nlohmann::json;

json ToJson(const CacheRecord& r) {
  json witness = json::array();
  for (const Rect& rect : r.witness) {
    witness.push_back({rect.x1, rect.y1, rect.x2, rect.y2});
  }
  return json{{"graph", r.key.graph_id},
              {"height", r.key.height},
              {"width", r.key.width},
              {"exact", r.key.exact},
              {"config", r.key.fingerprint},
              {"feasible", r.feasible},
              {"witness", witness},
              {"nodes", r.nodes},
              {"prunes", r.prunes},
              {"time", r.unix_time}};
}

std::optional<CacheRecord> FromJson(const std::string& line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    CacheRecord r;
    r.key.graph_id = j.at("graph").get<std::string>();
    r.key.height = j.at("height").get<int>();
    r.key.width = j.at("width").get<int>();
    r.key.exact = j.at("exact").get<bool>();
    r.key.fingerprint = j.at("config").get<std::string>();
    r.feasible = j.at("feasible").get<bool>();
    for (const json& w : j.at("witness")) {
      r.witness.push_back(Rect{w.at(0).get<int>(), w.at(1).get<int>(),
                               w.at(2).get<int>(), w.at(3).get<int>()});
    }
    r.nodes = j.at("nodes").get<int64_t>();
    r.prunes = j.at("prunes").get<int64_t>();
    r.unix_time = j.value("time", int64_t{0});
    return r;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

absl::StatusOr<std::unique_ptr<ResultsCache>> ResultsCache::Open(
    const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create cache directory ", dir, ": ", ec.message()));
  }
  std::unique_ptr<ResultsCache> cache(
      new ResultsCache((std::filesystem::path(dir) / "results.jsonl").string()));
  std::ifstream in(cache->path_);
  std::string line;
  while (std::getline(in, line)) {
    if (std::optional<CacheRecord> r = FromJson(line)) {
      cache->records_.emplace(r->key, *std::move(r));
    }
  }
  return cache;
}

std::optional<CacheRecord> ResultsCache::Lookup(const CacheKey& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

absl::Status ResultsCache::Append(const CacheRecord& record) {
  std::lock_guard<std::mutex> lock(mu_);
  if (records_.count(record.key) > 0) return absl::OkStatus();
  std::ofstream out(path_, std::ios::app);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot append to ", path_));
  out << ToJson(record).dump() << '\n';
  records_.emplace(record.key, record);
  return absl::OkStatus();
}

size_t ResultsCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

std::string ResolveCacheDir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("RVG_CACHE_DIR");
  return env != nullptr ? std::string(env) : std::string();
}

}  // namespace rvg
