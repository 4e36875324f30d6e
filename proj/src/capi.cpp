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

#include "qowlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qowlab/common.hpp"
#include "qowlab/experiments.hpp"

#define QOWLAB_API __attribute__((visibility("default")))

struct qowlab_runner {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int usage_or_verdict_code(qowlab::ErrorCode code) {
  switch (code) {
    case qowlab::ErrorCode::invalid_argument:
    case qowlab::ErrorCode::dimension_limit:
    case qowlab::ErrorCode::unsupported:
      return 1;
    case qowlab::ErrorCode::numeric_check:
    case qowlab::ErrorCode::zero_probability:
      return 2;
  }
  return -1;
}

}  // namespace

extern "C" {

QOWLAB_API qowlab_runner* qowlab_runner_new(void) {
  return new (std::nothrow) qowlab_runner();
}

QOWLAB_API void qowlab_runner_free(qowlab_runner* runner) { delete runner; }

QOWLAB_API int qowlab_run(qowlab_runner* runner, const char* experiment,
                          const char* params_json, const char* format,
                          char** report_out) {
  if (runner == nullptr || experiment == nullptr || report_out == nullptr)
    return -1;
  *report_out = nullptr;
  runner->last_error.clear();
  try {
    qowlab::Json params = qowlab::Json::object();
    if (params_json != nullptr && params_json[0] != '\0') {
      params = qowlab::Json::parse(params_json, nullptr, false);
      if (params.is_discarded()) {
        runner->last_error = "parameters are not valid JSON";
        return 1;
      }
    }
    std::string fmt = format == nullptr ? "json" : format;
    if (fmt != "json" && fmt != "csv") {
      runner->last_error = "format must be json or csv";
      return 1;
    }
    qowlab::Report rep = qowlab::run_experiment(experiment, params);
    std::string text = fmt == "json" ? qowlab::render_report_json(rep)
                                     : qowlab::render_report_csv(rep);
    *report_out = dup_string(text);
    if (*report_out == nullptr) {
      runner->last_error = "out of memory";
      return -1;
    }
    return rep.verdict ? 0 : 2;
  } catch (const qowlab::LabError& e) {
    runner->last_error = e.what();
    return usage_or_verdict_code(e.code());
  } catch (const std::exception& e) {
    runner->last_error = e.what();
    return -1;
  }
}

QOWLAB_API int qowlab_experiments(qowlab_runner* runner, char** names_out) {
  if (runner == nullptr || names_out == nullptr) return -1;
  *names_out = nullptr;
  std::string joined;
  for (const auto& name : qowlab::experiment_names()) {
    if (!joined.empty()) joined += '\n';
    joined += name;
  }
  *names_out = dup_string(joined);
  if (*names_out == nullptr) {
    runner->last_error = "out of memory";
    return -1;
  }
  return 0;
}

QOWLAB_API const char* qowlab_last_error(const qowlab_runner* runner) {
  return runner == nullptr ? "" : runner->last_error.c_str();
}

QOWLAB_API void qowlab_free_string(char* s) { std::free(s); }

QOWLAB_API const char* qowlab_version(void) { return "0.1.0"; }

}  // extern "C"
