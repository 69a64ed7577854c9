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

#pragma once

#include <string>

#include "json.hpp"

#include "cocirc/matroid.hpp"

namespace cocirc {

// Matroid JSON shape:
//   {"n": 4, "labels": ["a","b","c","d"], "bases": [["a","b"], ["a","c"], ...]}
// "labels" may be omitted (defaults to "0".."n-1"); basis entries may be
// label strings or 0-based integer indices.
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j, Validation validation);

nlohmann::json set_to_json(const Matroid& m, ElementSet s);
ElementSet set_from_json(const Matroid& m, const nlohmann::json& j);

Matroid load_matroid_file(const std::string& path, Validation validation);
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cocirc
