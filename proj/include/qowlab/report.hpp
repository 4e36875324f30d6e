// Copyright 2026 The qowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QOWLAB_REPORT_HPP
#define QOWLAB_REPORT_HPP

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qowlab/lowerbounds.hpp"

namespace qowlab {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

// Experiment report envelope. No timestamps or host data: identical inputs
// must serialize to identical bytes.
struct Report {
  std::string experiment;
  uint64_t seed = 0;
  Json params = Json::object();
  Json results = Json::object();
  bool verdict = true;
};

// {"num": ..., "den": ..., "decimal": ...}; num/den are JSON integers when
// they fit in 64 bits and decimal strings otherwise.
Json rational_json(const Rational& r);

Json report_json(const Report& r);
std::string render_report_json(const Report& r);

// Flat CSV: scalar fields become dotted-key columns; the first results entry
// holding an array of objects becomes the rows (other fields repeat on each
// row). Doubles use 12 significant digits.
std::string render_report_csv(const Report& r);

}  // namespace qowlab

#endif  // QOWLAB_REPORT_HPP
