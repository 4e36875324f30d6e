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

#ifndef QOWLAB_PROTOCOLS_HPP
#define QOWLAB_PROTOCOLS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qowlab/groups.hpp"
#include "qowlab/qcore.hpp"

namespace qowlab {

// One-way communication problem. Inputs are integers x in [0, alice_size),
// y in [0, bob_size); f returns 0/1, or -1 outside the promise.
struct OneWayProblem {
  std::string id;
  int alice_size = 0;
  int bob_size = 0;
  std::function<int(int, int)> f;

  bool defined(int x, int y) const { return f(x, y) >= 0; }
  bool total() const;
  std::vector<int> bob_domain(int x) const;  // ascending y with f defined
};

// f(x,y) = [x == y] on n-bit strings.
OneWayProblem equality_problem(int n);
// Points vs affine lines over F_p: x encodes a point (u, v), y encodes a
// line (a, b); f = [v == a*u + b mod p].
OneWayProblem coset_problem(int p);
// Partial problem on n-bit strings (n a multiple of 4, n <= 16): with
// s1 = sum_{i<=n/2} x_i y_i and s2 = sum_{i>n/2} x_i y_i (bit 1 = leftmost),
// f = 1 if s1 >= n/4 and s2 = 0; f = 0 if s1 = 0 and s2 >= n/4; else
// undefined.
OneWayProblem promise_problem(int n);
// f(x,y) = [x*y in S] over a finite group.
OneWayProblem subset_problem(const FiniteGroup& g, const std::vector<int>& s);
// f(x,y) = x: Bob outputs Alice's bit regardless of his input.
OneWayProblem send_bit_problem();
// Parse "eq:n", "coset:p", "promise:n", "subset:GROUP:s1,s2,..." ids.
OneWayProblem parse_problem(const std::string& id);

// Quantum one-way protocol: Alice encodes x into L qubits, Bob applies the
// two-outcome measurement decoder(y) and reports the outcome as f(x,y).
struct QuantumOneWayProtocol {
  OneWayProblem problem;
  int message_qubits = 0;
  std::function<DensityMatrix(int)> encoder;
  std::function<TwoOutcomeMeasurement(int)> decoder;

  int message_dim() const { return 1 << message_qubits; }
};

struct PairError {
  int x = 0, y = 0;
  double error = 0.0;
};

struct ProtocolEvaluation {
  double worst_error = 0.0;
  std::vector<PairError> per_pair;  // defined pairs only
};

ProtocolEvaluation evaluate_protocol(const QuantumOneWayProtocol& p,
                                     bool collect_pairs = false);

// Pr[Binomial(r, e) >= (r+1)/2]: the per-pair error after a majority vote of
// r independent copies, r odd.
double majority_error(double e, int r);

// Coherent boost: Alice sends r copies, Bob's decoder is a single dilated
// measurement running r copies of the base decoder and majority-voting their
// output bits into a fresh ancilla. r odd; r = 1 returns the input protocol.
QuantumOneWayProtocol boost_protocol(const QuantumOneWayProtocol& p, int r);

// Exact basis protocol for eq:n (error 0, n qubits).
QuantumOneWayProtocol basis_equality_protocol(int n);
// Basis protocol with every message qubit rotated by a fixed small angle;
// worst per-pair error is sin^2(theta) per deviating qubit, reported exactly
// by evaluate_protocol.
QuantumOneWayProtocol rotated_equality_protocol(int n, double theta);
// Exact protocol for promise:n (Alice sends |x>, decoder computes the
// f = 1 clause, which matches f on the promise).
QuantumOneWayProtocol promise_clause_protocol(int n);
// Point-vs-line protocol: Alice sends the basis encoding of her point on
// ceil(log2 p^2) qubits; decoder accepts when the point lies on the line.
// p in {2, 3, 5, 7}.
QuantumOneWayProtocol coset_basis_protocol(int p);
// One-qubit protocol for send_bit: encoder carries bit x with error e (the
// wrong computational outcome has probability exactly e); decoder reads the
// qubit. Used to exercise boosting.
QuantumOneWayProtocol biased_bit_protocol(double e);

// A recorded communication bound: what was certified, for which measure,
// and where the number came from. Never a claim of the true optimum.
struct BoundReport {
  std::string problem;
  std::string measure;  // "D1", "R12", "Q12"
  std::string kind;     // "upper" or "lower"
  double value = 0.0;
  std::string provenance;
};

// Q12 upper bound of message_qubits when the evaluated worst error is at
// most 1/3; nullopt otherwise.
std::optional<BoundReport> protocol_bound_report(const QuantumOneWayProtocol& p,
                                                 const ProtocolEvaluation& ev);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Classical randomized fingerprint protocols (message = (prime, residue)).
struct FingerprintProtocol {
  std::string mode;  // "eq" or "subset"
  uint64_t prime_lo = 0, prime_hi = 0;  // primes drawn from [lo, hi]
  std::vector<uint64_t> primes;
  int message_bits = 0;
  double error_bound = 0.0;  // exact worst-case bound; 0 for one-sided modes
  // decide(p, residue, y)
  std::function<bool(uint64_t, uint64_t, int)> decide;

  std::pair<uint64_t, uint64_t> sample_message(uint64_t x, Rng& rng) const;
  // R12 upper bound of message_bits for the named problem.
  BoundReport bound_report(const std::string& problem) const;
};

// Equality on n-bit strings with false-accept probability <= target_error:
// primes from [t n^2, 2 t n^2] with t the least power of two making the
// divisor-count bound meet the target.
FingerprintProtocol equality_fingerprint(int n, double target_error);

// One-sided subset protocol: Alice sends x mod p for a random prime p in
// [ceil(|S|^2 log2^2 |G|), 2 ceil(|S|^2 log2^2 |G|)]; Bob accepts iff some
// z with z*y in S has z = x mod p. Never rejects a yes instance.
// |G| <= 4096.
FingerprintProtocol subset_fingerprint(const FiniteGroup& g,
                                       const std::vector<int>& s);

// Pr[first qubit reads 0] in the swap-style membership test driven by the
// uniform-superposition advice over h: exactly 1 if x in h, exactly 1/2 if
// the translate x*h is disjoint from h. |G| <= 512.
double membership_advice_probability(const FiniteGroup& g, const Subgroup& h,
                                     int x);

// Success probability of guessing f(x) from the uniform advice superposition
// sum_z |z>|f(z)> / 2^{n/2}: measure, answer the recorded bit on a hit and a
// uniform coin otherwise. Equals 1/2 + 2^{-n-1} for every x. n <= 8.
double truth_table_advice_probability(const std::vector<int>& truth_table,
                                      int x);

// Communication-matrix diagnostics for total problems with
// alice_size * bob_size <= 2^20.
struct MatrixDiagnostics {
  int rows = 0, cols = 0;            // matrix shape
  int distinct_rows = 0, distinct_cols = 0;
  int d1 = 0;                        // ceil(log2 distinct_rows)
  int vc = 0;                        // largest shattered column-set size
  bool sauer_holds = false;          // distinct_rows <= sum_i<=vc C(cols, i)
  double sauer_bound = 0.0;          // the binomial sum (capped at 2^62)
  std::vector<BoundReport> reports;  // D1 value as matching upper + lower
};

MatrixDiagnostics matrix_diagnostics(const OneWayProblem& f);

}  // namespace qowlab

#endif  // QOWLAB_PROTOCOLS_HPP
