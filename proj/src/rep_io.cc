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

#include "rvg/rep_io.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace rvg {

namespace {

absl::StatusOr<int> IntField(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing or non-integer field '", key, "'"));
  }
  return it->get<int>();
}

}  // namespace

absl::StatusOr<Representation> ParseRepresentation(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("representation is not a JSON object");
  }
  absl::StatusOr<int> width = IntField(doc, "width");
  if (!width.ok()) return width.status();
  absl::StatusOr<int> height = IntField(doc, "height");
  if (!height.ok()) return height.status();
  auto rects_it = doc.find("rects");
  if (rects_it == doc.end() || !rects_it->is_array()) {
    return absl::InvalidArgumentError("missing 'rects' array");
  }
  std::vector<NamedRect> rects;
  for (const nlohmann::json& item : *rects_it) {
    if (!item.is_object()) {
      return absl::InvalidArgumentError("rect entry is not an object");
    }
    auto name_it = item.find("name");
    if (name_it == item.end() || !name_it->is_string()) {
      return absl::InvalidArgumentError("rect entry without a string 'name'");
    }
    NamedRect r;
    r.name = name_it->get<std::string>();
    for (auto [key, slot] : {std::pair{"x1", &r.rect.x1},
                             std::pair{"y1", &r.rect.y1},
                             std::pair{"x2", &r.rect.x2},
                             std::pair{"y2", &r.rect.y2}}) {
      absl::StatusOr<int> v = IntField(item, key);
      if (!v.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("rect '", r.name, "': ", v.status().message()));
      }
      *slot = *v;
    }
    rects.push_back(std::move(r));
  }
  absl::StatusOr<Representation> rep = Representation::Create(std::move(rects));
  if (!rep.ok()) return rep.status();
  if (rep->box_width() != *width || rep->box_height() != *height) {
    return absl::InvalidArgumentError(absl::StrCat(
        "declared box ", *width, "x", *height, " differs from bounding box ",
        rep->box_width(), "x", rep->box_height()));
  }
  return rep;
}

std::string WriteRepresentation(const Representation& rep) {
  std::string out = absl::StrCat("{\n  \"width\": ", rep.box_width(),
                                 ",\n  \"height\": ", rep.box_height(),
                                 ",\n  \"rects\": [");
  for (int i = 0; i < rep.size(); ++i) {
    const Rect& r = rep.rect(i);
    absl::StrAppend(&out, i == 0 ? "\n" : ",\n", "    {\"name\": ",
                    nlohmann::json(rep.name(i)).dump(), ", \"x1\": ", r.x1,
                    ", \"y1\": ", r.y1, ", \"x2\": ", r.x2, ", \"y2\": ", r.y2,
                    "}");
  }
  absl::StrAppend(&out, rep.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out;
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << text;
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("short write to ", path));
}

absl::StatusOr<Representation> ReadRepresentationFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Representation> rep = ParseRepresentation(*text);
  if (!rep.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", rep.status().message()));
  }
  return rep;
}

absl::Status WriteRepresentationFile(const Representation& rep,
                                     const std::string& path) {
  return WriteTextFile(path, WriteRepresentation(rep));
}

}  // namespace rvg
