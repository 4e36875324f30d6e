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

#include "qowlab/report.hpp"

#include <cstdio>
#include <utility>
#include <vector>

#include "qowlab/common.hpp"

namespace qowlab {

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

Json integer_or_string(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<int64_t>(z.get_si());
  return z.get_str();
}

std::string double_cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_cell(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_float()) return double_cell(j.get<double>());
  if (j.is_string()) return csv_escape(j.get<std::string>());
  return csv_escape(j.dump());  // integers print exactly; arrays verbatim
}

using Cells = std::vector<std::pair<std::string, std::string>>;

void flatten(const Json& j, const std::string& prefix, Cells* out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string name = prefix.empty() ? key : prefix + "." + key;
      flatten(value, name, out);
    }
  } else {
    out->push_back({prefix, scalar_cell(j)});
  }
}

bool is_row_array(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j) {
    if (!e.is_object()) return false;
  }
  return true;
}

}  // namespace

Json rational_json(const Rational& r) {
  Json j = Json::object();
  j["num"] = integer_or_string(r.get_num());
  j["den"] = integer_or_string(r.get_den());
  j["decimal"] = r.get_d();
  return j;
}

Json report_json(const Report& r) {
  Json j = Json::object();
  j["experiment"] = r.experiment;
  j["artifact_version"] = kArtifactVersion;
  j["seed"] = r.seed;
  j["params"] = r.params;
  j["results"] = r.results;
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j;
}

std::string render_report_json(const Report& r) {
  return report_json(r).dump(2) + "\n";
}

std::string render_report_csv(const Report& r) {
  Cells context;
  context.push_back({"experiment", csv_escape(r.experiment)});
  context.push_back({"seed", scalar_cell(Json(r.seed))});
  flatten(r.params, "params", &context);

  const Json* rows = nullptr;
  std::string rows_key;
  Cells scalars;
  for (const auto& [key, value] : r.results.items()) {
    if (rows == nullptr && is_row_array(value)) {
      rows = &value;
      rows_key = key;
    } else {
      flatten(value, "results." + key, &scalars);
    }
  }
  context.insert(context.end(), scalars.begin(), scalars.end());
  context.push_back({"verdict", r.verdict ? "pass" : "fail"});

  std::vector<std::string> row_columns;
  std::vector<Cells> row_cells;
  if (rows != nullptr) {
    for (const auto& e : *rows) {
      Cells cells;
      flatten(e, rows_key, &cells);
      for (const auto& [name, value] : cells) {
        bool known = false;
        for (const auto& c : row_columns) known = known || c == name;
        if (!known) row_columns.push_back(name);
      }
      row_cells.push_back(std::move(cells));
    }
  }

  std::string out;
  for (size_t i = 0; i < context.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(context[i].first);
  }
  for (const auto& c : row_columns) {
    out += ',';
    out += csv_escape(c);
  }
  out += '\n';

  size_t n_rows = row_cells.empty() ? 1 : row_cells.size();
  for (size_t rix = 0; rix < n_rows; ++rix) {
    for (size_t i = 0; i < context.size(); ++i) {
      if (i) out += ',';
      out += context[i].second;
    }
    if (!row_cells.empty()) {
      for (const auto& col : row_columns) {
        out += ',';
        for (const auto& [name, value] : row_cells[rix]) {
          if (name == col) {
            out += value;
            break;
          }
        }
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace qowlab
