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

#include "qowlab/reconstruct.hpp"

#include <cmath>

namespace qowlab {

PostselectedState initial_guess(int message_qubits) {
  require(message_qubits >= 0 && message_qubits <= 10,
          ErrorCode::dimension_limit, "initial_guess: qubit count out of range");
  return {DensityMatrix::maximally_mixed(1 << message_qubits), 1.0, 0};
}

PostselectedState postselect_update(const PostselectedState& s,
                                    const TwoOutcomeMeasurement& m,
                                    int forced_bit) {
  require(forced_bit == 0 || forced_bit == 1, ErrorCode::invalid_argument,
          "postselect_update: forced bit must be 0 or 1");
  double branch = 0.0;
  DensityMatrix next = postselect(s.state, m, forced_bit, &branch);
  return {std::move(next), s.cumulative_probability * branch, s.updates + 1};
}

int round_probability(double p) { return p >= 0.5 - kInvariantTol ? 1 : 0; }

bool is_probability_tie(double p) { return std::abs(p - 0.5) <= kInvariantTol; }

SimulationResult simulate_message(const QuantumOneWayProtocol& p, int x) {
  require(x >= 0 && x < p.problem.alice_size, ErrorCode::invalid_argument,
          "simulate_message: x out of range");
  std::vector<int> domain = p.problem.bob_domain(x);
  require(domain.size() <= 4096, ErrorCode::dimension_limit,
          "simulate_message: Bob domain too large");

  SimulationResult r;
  r.advice.message_qubits = p.message_qubits;
  r.final_state = initial_guess(p.message_qubits);
  for (int y : domain) {
    SimulationStep step;
    step.y = y;
    step.truth = p.problem.f(x, y);
    TwoOutcomeMeasurement m = p.decoder(y);
    step.response = response_probability(r.final_state.state, m);
    step.guess = round_probability(step.response);
    step.tie = is_probability_tie(step.response);
    if (step.tie) ++r.tie_count;
    if (step.guess != step.truth) {
      step.recorded = true;
      r.final_state = postselect_update(r.final_state, m, step.truth);
      step.branch_probability =
          step.truth == 1 ? step.response : 1.0 - step.response;
      r.advice.entries.push_back({y, step.truth});
      require(static_cast<int>(r.advice.entries.size()) <= p.message_qubits,
              ErrorCode::numeric_check,
              "simulate_message: advice exceeded the qubit budget");
    }
    r.steps.push_back(step);
  }
  return r;
}

int bob_decode(const QuantumOneWayProtocol& p, const AdviceMessage& advice,
               int y) {
  int prev = -1;
  for (const AdviceEntry& e : advice.entries) {
    require(e.y > prev, ErrorCode::invalid_argument,
            "bob_decode: advice entries out of order");
    prev = e.y;
    if (e.y == y) return e.bit;
  }
  PostselectedState s = initial_guess(advice.message_qubits);
  for (const AdviceEntry& e : advice.entries) {
    if (e.y >= y) break;
    s = postselect_update(s, p.decoder(e.y), e.bit);
  }
  return round_probability(response_probability(s.state, p.decoder(y)));
}

double postselection_ratio(double p1, double p0) {
  require(p1 >= 0.0 && p0 >= 0.0, ErrorCode::invalid_argument,
          "postselection_ratio: negative probability");
  require(p1 + p0 > 1e-15, ErrorCode::zero_probability,
          "postselection_ratio: both branches have zero probability");
  return p1 / (p1 + p0);
}

std::vector<HonestStep> honest_damage_run(const QuantumOneWayProtocol& p,
                                          int x) {
  require(x >= 0 && x < p.problem.alice_size, ErrorCode::invalid_argument,
          "honest_damage_run: x out of range");
  DensityMatrix state = p.encoder(x);
  std::vector<HonestStep> out;
  for (int y : p.problem.bob_domain(x)) {
    int truth = p.problem.f(x, y);
    TwoOutcomeMeasurement m = p.decoder(y);
    double branch = 0.0;
    DensityMatrix next = postselect(state, m, truth, &branch);
    HonestStep step;
    step.y = y;
    step.minority_probability = 1.0 - branch;
    step.damage = trace_distance(next, state);
    out.push_back(step);
    state = std::move(next);
  }
  return out;
}

}  // namespace qowlab
