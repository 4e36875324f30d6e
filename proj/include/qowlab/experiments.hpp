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

#ifndef QOWLAB_EXPERIMENTS_HPP
#define QOWLAB_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "qowlab/report.hpp"

namespace qowlab {

// Runs a named experiment with JSON parameters. Unknown names and unknown or
// ill-typed parameters raise ErrorCode::invalid_argument; failed numeric
// verdicts are reported in the returned payload (verdict = false), while
// broken preconditions discovered mid-run raise their usual errors.
Report run_experiment(const std::string& name, const Json& params);

std::vector<std::string> experiment_names();

}  // namespace qowlab

#endif  // QOWLAB_EXPERIMENTS_HPP
