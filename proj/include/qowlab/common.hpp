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

#ifndef QOWLAB_COMMON_HPP
#define QOWLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qowlab {

// Numeric policy shared across modules: structural invariants (unit trace,
// hermiticity, unitarity, normalization) are checked at 1e-9; equalities that
// chain several floating-point computations are compared at 1e-8.
constexpr double kInvariantTol = 1e-9;
constexpr double kDerivedTol = 1e-8;

// Hilbert-space dimensions above this are rejected everywhere.
constexpr int kMaxDim = 1 << 10;

enum class ErrorCode : int {
  invalid_argument = 1,
  dimension_limit = 2,
  numeric_check = 3,
  zero_probability = 4,
  unsupported = 5,
};

class LabError : public std::runtime_error {
 public:
  LabError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw LabError(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Counter-based deterministic RNG. Trial i of a seeded experiment uses the
// stream (seed, i), so results are independent of thread scheduling and
// identical across runs with the same seed.
class Rng {
 public:
  static Rng stream(uint64_t seed, uint64_t stream_id);

  uint64_t next_u64();
  // Uniform in [0, n), unbiased (rejection sampling). n >= 1.
  uint64_t below(uint64_t n);
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Standard normal (Box-Muller, both values consumed independently).
  double normal();

 private:
  explicit Rng(uint64_t state) : state_(state) {}
  uint64_t state_;
};

}  // namespace qowlab

#endif  // QOWLAB_COMMON_HPP
