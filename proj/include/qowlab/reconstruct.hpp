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

#ifndef QOWLAB_RECONSTRUCT_HPP
#define QOWLAB_RECONSTRUCT_HPP

#include <vector>

#include "qowlab/protocols.hpp"
#include "qowlab/qcore.hpp"

namespace qowlab {

// Per-pair error budget that keeps the whole classical simulation sound for
// a protocol on K message qubits.
inline double compliance_budget(int message_qubits) {
  double k1 = message_qubits + 1;
  return 0.01 / (k1 * k1);
}

struct AdviceEntry {
  int y = 0;
  int bit = 0;
};

// The classical message replacing the quantum one: the Bob inputs where the
// guessed state rounds to the wrong answer, with the true bits. Entries are
// strictly increasing in y; at most message_qubits of them for a compliant
// protocol.
struct AdviceMessage {
  int message_qubits = 0;
  std::vector<AdviceEntry> entries;
};

// Guessed state threaded through the simulation, with its conditioning
// history product.
struct PostselectedState {
  DensityMatrix state = DensityMatrix::maximally_mixed(1);
  double cumulative_probability = 1.0;
  int updates = 0;
};

// Maximally mixed start on message_qubits qubits.
PostselectedState initial_guess(int message_qubits);

// Condition on the measurement returning forced_bit: project the dilated
// state, uncompute, trace ancillas, renormalize. Throws zero_probability
// when the forced branch has probability <= 1e-12 (inconsistent advice).
PostselectedState postselect_update(const PostselectedState& s,
                                    const TwoOutcomeMeasurement& m,
                                    int forced_bit);

// Rounding rule shared by the simulation and the decoder: 1 iff p >= 1/2,
// with values within 1e-9 of 1/2 rounded up and flagged as ties.
int round_probability(double p);
bool is_probability_tie(double p);

struct SimulationStep {
  int y = 0;
  int truth = 0;             // f(x, y)
  double response = 0.0;     // outcome-1 probability on the current guess
  int guess = 0;             // rounded response
  bool tie = false;
  bool recorded = false;     // guess != truth, entry appended
  double branch_probability = 1.0;  // forced-branch probability if recorded
};

struct SimulationResult {
  AdviceMessage advice;
  std::vector<SimulationStep> steps;
  PostselectedState final_state;
  int tie_count = 0;
};

// Alice's classical simulation: walk y over D_x in increasing order,
// maintaining the guessed state; whenever the rounded response disagrees
// with f(x,y), record (y, f(x,y)) and postselect on the true outcome.
// Throws numeric_check if more than message_qubits entries are recorded
// (impossible for protocols within the compliance budget).
SimulationResult simulate_message(const QuantumOneWayProtocol& p, int x);

// Bob's side: recorded y returns the stored bit; otherwise replay the
// postselections for all recorded y' < y and round the response. Needs only
// the advice, not D_x.
int bob_decode(const QuantumOneWayProtocol& p, const AdviceMessage& advice,
               int y);

// p1 / (p1 + p0). Throws when both are <= 1e-15.
double postselection_ratio(double p1, double p0);

struct HonestStep {
  int y = 0;
  double minority_probability = 0.0;  // probability of the non-f outcome
  double damage = 0.0;                // trace distance caused by keeping f
};

// Measure the true message state on every decoder in D_x order, keeping the
// f(x,y) branch each time, and record how far each measurement moved the
// state. Each step's damage is at most sqrt(eps(1-eps)) + eps for that
// step's minority probability eps (block decomposition of the kept branch);
// with eps <= eta small this sits below sqrt(eta) + eta.
std::vector<HonestStep> honest_damage_run(const QuantumOneWayProtocol& p,
                                          int x);

}  // namespace qowlab

#endif  // QOWLAB_RECONSTRUCT_HPP
