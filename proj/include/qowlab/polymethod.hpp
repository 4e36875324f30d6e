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

#ifndef QOWLAB_POLYMETHOD_HPP
#define QOWLAB_POLYMETHOD_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qowlab/lowerbounds.hpp"
#include "qowlab/qcore.hpp"

namespace qowlab {

// Univariate polynomial with exact rational coefficients, monomial basis.
struct Poly {
  std::vector<Rational> c;  // c[i] multiplies x^i; trailing zeros stripped

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c.empty(); }
  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly derivative(int m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& s) const;
};

// Chebyshev polynomial of the first kind by the three-term recurrence.
Poly chebyshev(int d);  // 0 <= d <= 64

// T_d^{(m)}(1) = d^2 (d^2 - 1) (d^2 - 4) ... (d^2 - (m-1)^2) / (2m-1)!!,
// zero when m > d.
Rational chebyshev_derivative_at_one(int d, int m);

// Certified maximum of |p^{(m)}| over [0, hi]: endpoint values are exact,
// interior extrema are located by Sturm root isolation of p^{(m+1)} and
// refined until the returned value is within 1e-12 of the true supremum
// (always from below).
double sup_norm(const Poly& p, const Rational& hi, int m);

struct MarkovBounds {
  double aa_lower_degree = 0.0;  // sqrt(n rm / (2 r0)), the m = 1 bound
  double va_rhs = 0.0;           // (2 r0 / n)^m T_d^{(m)}(1)
};

// The two derivative bounds for a degree-d polynomial with |p| <= r0 on
// [0, n]: any polynomial with first-derivative sup rm has degree at least
// aa_lower_degree, and its m-th derivative sup is at most va_rhs.
MarkovBounds markov_bounds(double r0, double rm, double n, int d, int m);

// For p vanishing at 0..k-1 with p(k) = delta > 0: checks the factorial
// floor sup |p^{(m)}| >= delta / m! for every m <= k over [0, hi].
bool derivative_floor_check(const Poly& p, int k, const Rational& delta,
                            const Rational& hi);

struct DegreeBound {
  double n = 0.0;
  int k = 0;
  double delta = 0.0;
  double r0 = 0.0;
  double value = 0.0;
  std::string branch;  // "markov" (r0 >= 2) or "factorial" (r0 < 2)
};

// Minimum degree of a polynomial bounded by r0 on [0, n] that vanishes at
// 0..k-1 and reaches delta at k.
DegreeBound degree_lower_bound(double n, int k, double delta, double r0);

// Largest success probability a 2T-degree acceptance polynomial permits for
// finding all k marked items: (16 T^2 / n)^k k! / (2k-1)!! when
// 2T < sqrt(n/2), vacuous (1) otherwise.
double direct_product_bound(double n, int k, double t);

// A T-query algorithm on an oracle string of length oracle_length: state
// space (index register of dimension index_dim) x (work_qubits qubits),
// stages run left to right, queries touch the index register.
struct QueryStage {
  enum class Kind { unitary, phase_query, bit_query };
  Kind kind = Kind::unitary;
  Cmat u;             // unitary stages: matrix on the full space
  int target_bit = 0; // bit queries: workspace bit receiving X_i
};

struct QueryAlgorithm {
  int oracle_length = 0;
  int index_dim = 0;    // >= oracle_length; indices past the string read 0
  int work_qubits = 0;
  std::vector<QueryStage> stages;
  std::function<bool(int, int)> accept;  // fixed predicate on (index, work)

  int dim() const { return index_dim << work_qubits; }
  int query_count() const;
};

// Exact-simulation acceptance probability on the oracle string given by the
// low oracle_length bits of x_bits.
double accept_probability(const QueryAlgorithm& a, uint32_t x_bits);

// Lemma machinery: average the acceptance probability over each Hamming
// weight, rationalize (denominators up to 2^40), interpolate through nodes
// 0..oracle_length, drop trailing coefficients below 1e-9, and require the
// resulting degree to be at most twice the query count.
Poly acceptance_polynomial(const QueryAlgorithm& a);

// Building blocks with exactly rational entries.
Cmat kron(const Cmat& a, const Cmat& b);
Cmat uniform_diffusion(int dim);        // 2J/dim - I
Cmat permutation_unitary(const std::vector<int>& image);

struct GroverReport {
  int n = 0;
  int k = 0;
  std::vector<int> schedule;
  int total_queries = 0;
  int trials = 0;
  double empirical = 0.0;
  double se = 0.0;
  double bound = 0.0;
  bool within = false;  // empirical <= bound + 4 se
};

// Staged search with removal: stage t runs schedule[t] amplification
// iterations over the not-yet-found indices and measures once; the run
// succeeds when all k marked indices are recovered. Compares the empirical
// success rate against direct_product_bound at the total query count.
GroverReport grover_find_all(int n, int k, const std::vector<int>& schedule,
                             int trials, uint64_t seed, int jobs = 1);

}  // namespace qowlab

#endif  // QOWLAB_POLYMETHOD_HPP
