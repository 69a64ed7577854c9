// Copyright 2026 The Authors.
//
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

#include "cocirc/json_io.hpp"

#include <fstream>

namespace cocirc {

using nlohmann::json;

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (ElementSet b : m.bases) bases.push_back(b.elements());
  return json{{"n", m.n}, {"labels", m.labels}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j, Validation validation) {
  if (!j.is_object() || !j.contains("n") || !j.contains("bases")) {
    raise(ErrorCode::kParse, "matroid JSON needs \"n\" and \"bases\"");
  }
  if (!j["n"].is_number_integer()) raise(ErrorCode::kParse, "\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (n <= 0) raise(ErrorCode::kEmptyGroundSet, "ground set must be nonempty");
  if (n > ElementSet::kMaxGroundSize) {
    raise(ErrorCode::kTooLarge, "ground set larger than " +
                                    std::to_string(ElementSet::kMaxGroundSize) + " elements");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) raise(ErrorCode::kParse, "\"labels\" must be an array");
    for (const auto& item : j["labels"]) {
      if (!item.is_string()) raise(ErrorCode::kParse, "labels must be strings");
      labels.push_back(item.get<std::string>());
    }
  } else {
    labels = default_labels(n);
  }
  if (int(labels.size()) != n) raise(ErrorCode::kParse, "label count differs from n");

  auto element_index = [&](const json& item) -> int {
    if (item.is_number_integer()) {
      int e = item.get<int>();
      if (e < 0 || e >= n) raise(ErrorCode::kParse, "element index out of range");
      return e;
    }
    if (item.is_string()) {
      const std::string name = item.get<std::string>();
      for (int i = 0; i < n; ++i) {
        if (labels[size_t(i)] == name) return i;
      }
      raise(ErrorCode::kParse, "unknown element label '" + name + "'");
    }
    raise(ErrorCode::kParse, "basis entries must be labels or indices");
  };

  if (!j["bases"].is_array()) raise(ErrorCode::kParse, "\"bases\" must be an array");
  std::vector<ElementSet> bases;
  for (const auto& row : j["bases"]) {
    if (!row.is_array()) raise(ErrorCode::kParse, "each basis must be an array");
    ElementSet b = ElementSet::empty(n);
    for (const auto& item : row) {
      int e = element_index(item);
      if (b.contains(e)) raise(ErrorCode::kParse, "repeated element inside a basis");
      b = b.with(e);
    }
    bases.push_back(b);
  }
  return Matroid::from_bases(n, std::move(labels), std::move(bases), validation);
}

json set_to_json(const Matroid& m, ElementSet s) { return json(m.labels_of(s)); }

ElementSet set_from_json(const Matroid& m, const json& j) {
  if (!j.is_array()) raise(ErrorCode::kParse, "element set must be an array");
  ElementSet s = ElementSet::empty(m.n);
  for (const auto& item : j) {
    int e;
    if (item.is_number_integer()) {
      e = item.get<int>();
      if (e < 0 || e >= m.n) raise(ErrorCode::kParse, "element index out of range");
    } else if (item.is_string()) {
      e = m.index_of_label(item.get<std::string>());
    } else {
      raise(ErrorCode::kParse, "element set entries must be labels or indices");
    }
    if (s.contains(e)) raise(ErrorCode::kParse, "repeated element inside a set");
    s = s.with(e);
  }
  return s;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kParse, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    raise(ErrorCode::kParse, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

Matroid load_matroid_file(const std::string& path, Validation validation) {
  return matroid_from_json(load_json_file(path), validation);
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::kParse, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace cocirc
