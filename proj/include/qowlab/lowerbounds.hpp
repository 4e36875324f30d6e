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

#ifndef QOWLAB_LOWERBOUNDS_HPP
#define QOWLAB_LOWERBOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qowlab/groups.hpp"
#include "qowlab/protocols.hpp"

namespace qowlab {

using Rational = mpq_class;

// Probability distribution over {0, ..., size-1} with exact entries.
struct FiniteDist {
  std::vector<Rational> p;

  int size() const { return static_cast<int>(p.size()); }
  void validate() const;  // entries >= 0, sum exactly 1
  static FiniteDist uniform(int n);
};

// Exact 1/2 sum |a - b| over a common universe.
Rational variation_distance(const FiniteDist& a, const FiniteDist& b);

// Joint distribution over ordered pairs (x, z), x and z in [0, size).
struct PairDist {
  int size = 0;
  std::vector<Rational> p;  // row-major

  Rational& at(int x, int z) { return p[static_cast<size_t>(x) * size + z]; }
  const Rational& at(int x, int z) const {
    return p[static_cast<size_t>(x) * size + z];
  }
  void validate() const;
};

struct PairDistributions {
  FiniteDist d1;  // d1(x) = sum_y b(y) a_y(x)
  PairDist d2;    // d2(x,z) = sum_y b(y) a_y(x) a_y(z)
};

// Build the one- and two-sample mixtures from a family {A_y} and a prior B.
// Requires a total problem, every A_y supported inside {x : f(x,y) = 1},
// and alice_size^2 <= 2^16 pairs.
PairDistributions build_pair_distributions(const OneWayProblem& f,
                                           const std::vector<FiniteDist>& a_family,
                                           const FiniteDist& b);

// ||D2 - D1 x D1||: exact variation distance between the pair distribution
// and the product of its marginal.
Rational pair_product_distance(const PairDist& d2, const FiniteDist& d1);

// Uniform-line family for the points-vs-lines problem: A_(a,b) uniform on
// the p points of the line, B uniform on the p^2 lines. p <= 13 (pair cap).
PairDistributions coset_family(int p);
// The A_y family alone (any prime p <= 101), indexed by line.
std::vector<FiniteDist> coset_a_family(int p);

struct CosetDeltaReport {
  int p = 0;
  Rational delta;       // closed form 1/p - 1/p^2
  Rational enumerated;  // independently recomputed value
  bool match = false;
  Rational pr_f0;       // Pr[f = 0] under D1 x B, exact
  bool pr_f0_match = false;  // equals 1 - 1/p
  std::string path;     // which independent route produced `enumerated`
};

// delta = ||D2 - D1^2|| for points-vs-lines. p <= 13 uses the generic pair
// builder; larger p counts line coincidences per coordinate-difference class.
// Both routes are asserted against the closed form.
CosetDeltaReport coset_delta_exact(int p);

struct SubsetDeltaReport {
  Rational delta;       // ||M - D1|| with M the distribution of s t^-1
  Rational pair_delta;  // ||D2 - D1^2||
  bool equal = false;   // exact agreement of the two routes
};

// Proposition-style subset computation over a finite group with |S| <= |G|/2
// and |G| <= 1024.
SubsetDeltaReport subset_delta(const FiniteGroup& g, const std::vector<int>& s);

// Closed-form expectation of sum_x (Pr_M[x] - 1/|G|)^2 over a uniform
// K-subset S, in terms of |G| and the number of order-2 elements.
Rational randset_exact(const FiniteGroup& g, int k);
// The same expectation by full enumeration of all K-subsets (small cases).
Rational randset_enumerate(const FiniteGroup& g, int k);

struct RandsetReport {
  int group_order = 0;
  int k = 0;
  Rational exact;
  bool enumerated_available = false;
  Rational enumerated;
  bool closed_form_matches = true;  // vs enumeration when available
  int trials = 0;
  double mc_mean = 0.0;
  double mc_se = 0.0;
  bool mean_ok = false;      // |mc_mean - exact| <= 4 se
  double median_delta = 0.0;
  double median_bound = 0.0;  // sqrt(2 exact |G|) / 2
  bool median_ok = false;
};

// Monte Carlo over uniform K-subsets (partial Fisher-Yates, one stream per
// trial) against the closed form; enumeration is included when the subset
// count is small enough.
RandsetReport randset_check(const FiniteGroup& g, int k, int trials,
                            uint64_t seed, int jobs = 1);

struct TraceDistanceReport {
  int l = 0;  // message qubits
  Rational delta;
  double expected_tdist = 0.0;
  double bound = 0.0;  // sqrt(2^{l-1} delta)
  double beta = 0.0;
  int required_l = 0;  // ceil(1 + log2(beta^2 / delta))
  bool verdict = false;
};

// The trace-distance certificate: expected ||rho - rho_y|| over y ~ B,
// with rho_y the A_y-average of the encoded states and rho the D1-average,
// checked against sqrt(2^{L-1} ||D2 - D1^2||).
TraceDistanceReport vardist_certificate(const QuantumOneWayProtocol& p,
                                        const std::vector<FiniteDist>& a_family,
                                        const FiniteDist& b,
                                        double beta = 1.0 / 3.0);

// Message-length floor implied by distinguishing bias beta at squared-bias
// budget delta: ceil(1 + log2(beta^2/delta)), with a 1e-12 snap before the
// ceiling for exact powers of two.
int required_message_bits(double beta, const Rational& delta);

}  // namespace qowlab

#endif  // QOWLAB_LOWERBOUNDS_HPP
