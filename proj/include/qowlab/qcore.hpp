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

#ifndef QOWLAB_QCORE_HPP
#define QOWLAB_QCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "qowlab/common.hpp"

namespace qowlab {

using Cplx = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;

// Validated density operator: square, Hermitian, unit trace, PSD.
// Eigenvalues in [-1e-9, 0) are treated as zero by consumers that need
// nonnegative spectra (purification).
class DensityMatrix {
 public:
  explicit DensityMatrix(Cmat m);
  static DensityMatrix pure(const Cvec& psi);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix basis_state(int dim, int index);

  const Cmat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Cmat m_;
};

// Normalized state vector.
struct PureState {
  Cvec amps;
  explicit PureState(Cvec a);
  int dim() const { return static_cast<int>(amps.size()); }
};

// Two-outcome measurement realized as a unitary dilation: the system (any
// dimension d) is joined by `ancilla_qubits` fresh |0> qubits, `unitary` acts
// on the joint space of dimension d * 2^a (basis index z = s * 2^a + w, with
// w the ancilla bits), and the outcome is the value of one binary digit of z.
// output_bit < a addresses ancilla bit output_bit of w (bit 0 = least
// significant); output_bit >= a addresses bit (output_bit - a) of s, which
// requires d to be a power of two. Outcome 1 means "the output bit reads 1".
struct TwoOutcomeMeasurement {
  int system_dim = 0;
  int ancilla_qubits = 0;
  int output_bit = 0;
  Cmat unitary;

  TwoOutcomeMeasurement(int system_dim, int ancilla_qubits, int output_bit,
                        Cmat unitary);

  int dilated_dim() const { return system_dim << ancilla_qubits; }
  // True iff the given dilated basis index has the output bit set.
  bool output_set(int z) const;

  // One ancilla, U|s,w> = |s, w xor accept(s)>, outcome read off the ancilla.
  static TwoOutcomeMeasurement from_accept_predicate(
      int system_dim, const std::function<bool(int)>& accept);
  // Zero ancillas, identity unitary, outcome = bit `qubit` of the system
  // index (system must be 2^qubits dimensional).
  static TwoOutcomeMeasurement computational(int qubits, int qubit);
};

// 1/2 * sum |eigenvalues(rho - sigma)|.
double trace_distance(const Cmat& rho, const Cmat& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Partial trace over the factors with keep[i] == false. dims are the factor
// dimensions in tensor (most-significant-first) order.
Cmat partial_trace(const Cmat& m, const std::vector<int>& dims,
                   const std::vector<bool>& keep);

// Purification on system (x) ancilla, ancilla dimension = dim(rho), system
// factor first: |psi> = sum_i sqrt(lambda_i) |v_i>|i>.
PureState purify(const DensityMatrix& rho);

// Apply a unitary acting on the listed factors (in the listed order) of a
// state vector over the given factor decomposition.
Cvec apply_on_factors(const Cvec& state, const Cmat& op,
                      const std::vector<int>& dims,
                      const std::vector<int>& targets);

struct MeasurementOutcome {
  double p0 = 0.0;
  double p1 = 0.0;
  // Post-measurement states on the original system: outcome projected,
  // unitary uncomputed, ancillas traced out, renormalized. Absent when the
  // corresponding branch has zero probability.
  std::optional<DensityMatrix> post0;
  std::optional<DensityMatrix> post1;
};

MeasurementOutcome apply_measurement(const DensityMatrix& rho,
                                     const TwoOutcomeMeasurement& m);

// Probability of outcome 1.
double response_probability(const DensityMatrix& rho,
                            const TwoOutcomeMeasurement& m);

// Keep a single branch: project the chosen outcome, uncompute, trace
// ancillas, renormalize. branch_prob (if non-null) receives the branch
// probability. Zero-probability branches raise ErrorCode::zero_probability.
DensityMatrix postselect(const DensityMatrix& rho,
                         const TwoOutcomeMeasurement& m, int outcome,
                         double* branch_prob = nullptr);

struct RecoveryResult {
  // Probability of outcome 1 (the deviant outcome in the near-certain case).
  double p_err = 0.0;
  // Trace distance between the dephased post-measurement state and the
  // undisturbed dilated pure state; equals sqrt(p0 * p1) analytically, and is
  // computed here numerically from the full matrices.
  double intermediate_tdist = 0.0;
  DensityMatrix recovered;
};

// Measure gently and undo: purify rho, run the dilation, dephase in the
// outcome, rotate back with U^-1 and restrict to the original system. The
// recovered state satisfies  tracedist(recovered, rho) <= sqrt(eps(1-eps))
// with eps = p_err.
RecoveryResult measure_and_recover(const DensityMatrix& rho,
                                   const TwoOutcomeMeasurement& m);

// Haar-distributed unitary of the given dimension (QR of a Gaussian matrix
// with phase correction).
Cmat random_unitary(int dim, Rng& rng);
// Random mixed state GG*/tr(GG*) with G square complex Gaussian.
DensityMatrix random_density(int dim, Rng& rng);
// Random pure state.
DensityMatrix random_pure_density(int dim, Rng& rng);

}  // namespace qowlab

#endif  // QOWLAB_QCORE_HPP
