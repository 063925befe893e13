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

#include "rvg/fixtures.h"

#include <cstdlib>
#include <filesystem>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "rvg/canonical.h"
#include "rvg/named_graphs.h"
#include "rvg/rep_io.h"

namespace rvg {
namespace {

using json = nlohmann::json;

absl::StatusOr<Provenance> ParseProvenance(const std::string& text) {
  if (text == "transcribed-from-figure") return Provenance::kTranscribedFromFigure;
  if (text == "derived-by-search") return Provenance::kDerivedBySearch;
  return absl::InvalidArgumentError(absl::StrCat("unknown provenance '", text, "'"));
}

absl::StatusOr<Fixture> ParseEntry(const json& e, const std::string& dir) {
  Fixture f;
  try {
    f.id = e.at("id").get<std::string>();
    f.path = (std::filesystem::path(dir) / e.at("file").get<std::string>()).string();
    f.graph_spec = e.at("graph").get<std::string>();
    f.box = Box{e.at("height").get<int>(), e.at("width").get<int>()};
    absl::StatusOr<Provenance> p = ParseProvenance(e.at("provenance").get<std::string>());
    if (!p.ok()) return p.status();
    f.provenance = *p;
    if (e.contains("non_edges")) {
      for (const json& pair : e.at("non_edges")) {
        f.non_edges.emplace_back(pair.at(0).get<std::string>(),
                                 pair.at(1).get<std::string>());
      }
    }
    if (e.contains("note")) f.note = e.at("note").get<std::string>();
  } catch (const json::exception& ex) {
    return absl::InvalidArgumentError(absl::StrCat("bad manifest entry: ", ex.what()));
  }
  absl::StatusOr<Graph> g = ParseGraphArgument(f.graph_spec);
  if (!g.ok()) return g.status();
  f.graph = *std::move(g);
  absl::StatusOr<Representation> rep = ReadRepresentationFile(f.path);
  if (!rep.ok()) return rep.status();
  f.rep = *std::move(rep);
  return f;
}

}  // namespace

const char* ProvenanceName(Provenance p) {
  return p == Provenance::kTranscribedFromFigure ? "transcribed-from-figure"
                                                 : "derived-by-search";
}

std::string DefaultFixtureDir() {
  if (const char* env = std::getenv("RVG_FIXTURE_DIR"); env != nullptr && *env) {
    return env;
  }
  return RVG_FIXTURE_DIR;
}

absl::Status CheckFixture(const Fixture& f) {
  if (absl::Status s = Validate(f.rep.rects()); !s.ok()) return s;
  const Box box = Box::Normalized(f.rep.box_height(), f.rep.box_width());
  if (box != f.box) {
    return absl::FailedPreconditionError(
        absl::StrCat("box is ", box.height, "x", box.width, ", declared ",
                     f.box.height, "x", f.box.width));
  }
  const Graph actual = VisibilityGraph(f.rep).graph;
  absl::StatusOr<bool> same = Isomorphic(actual, f.graph);
  if (!same.ok()) return same.status();
  if (!*same) {
    return absl::FailedPreconditionError(
        absl::StrCat("visibility graph is not isomorphic to ", f.graph_spec));
  }
  for (const auto& [a, b] : f.non_edges) {
    absl::StatusOr<int> ia = f.rep.IndexOf(a);
    absl::StatusOr<int> ib = f.rep.IndexOf(b);
    if (!ia.ok()) return ia.status();
    if (!ib.ok()) return ib.status();
    if (actual.HasEdge(*ia, *ib)) {
      return absl::FailedPreconditionError(
          absl::StrCat(a, " and ", b, " see each other"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Fixture>> LoadFixtures(const std::string& dir) {
  const std::string manifest_path =
      (std::filesystem::path(dir) / "manifest.json").string();
  absl::StatusOr<std::string> text = ReadTextFile(manifest_path);
  if (!text.ok()) return text.status();
  json manifest = json::parse(*text, nullptr, /*allow_exceptions=*/false);
  if (manifest.is_discarded() || !manifest.contains("fixtures") ||
      !manifest["fixtures"].is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(manifest_path, ": expected an object with a fixtures array"));
  }
  std::vector<Fixture> out;
  for (const json& e : manifest["fixtures"]) {
    absl::StatusOr<Fixture> f = ParseEntry(e, dir);
    if (!f.ok()) {
      return absl::Status(f.status().code(),
                          absl::StrCat(manifest_path, ": ", f.status().message()));
    }
    if (absl::Status s = CheckFixture(*f); !s.ok()) {
      return absl::Status(s.code(),
                          absl::StrCat("fixture ", f->id, ": ", s.message()));
    }
    out.push_back(*std::move(f));
  }
  return out;
}

absl::StatusOr<Fixture> FindFixture(const std::vector<Fixture>& fixtures,
                                    const std::string& id) {
  for (const Fixture& f : fixtures) {
    if (f.id == id) return f;
  }
  return absl::NotFoundError(absl::StrCat("no fixture '", id, "'"));
}

}  // namespace rvg
