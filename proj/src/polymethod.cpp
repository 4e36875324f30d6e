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

#include "qowlab/polymethod.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <utility>

#include "qowlab/common.hpp"

namespace qowlab {

Poly::Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational v(0);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * x + c[i];
  return v;
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return Poly();
  std::vector<Rational> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i)
    d[i - 1] = Rational(static_cast<long>(i)) * c[i];
  return Poly(std::move(d));
}

Poly Poly::derivative(int m) const {
  require(m >= 0, ErrorCode::invalid_argument,
          "derivative order must be nonnegative");
  Poly p = *this;
  for (int i = 0; i < m && !p.is_zero(); ++i) p = p.derivative();
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> s(std::max(c.size(), o.c.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) s[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) s[i] += o.c[i];
  return Poly(std::move(s));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> s(std::max(c.size(), o.c.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) s[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) s[i] -= o.c[i];
  return Poly(std::move(s));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> s(c.size() + o.c.size() - 1, Rational(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) s[i + j] += c[i] * o.c[j];
  return Poly(std::move(s));
}

Poly Poly::scaled(const Rational& s) const {
  std::vector<Rational> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] * s;
  return Poly(std::move(out));
}

Poly chebyshev(int d) {
  require(d >= 0 && d <= 64, ErrorCode::invalid_argument,
          "chebyshev degree must lie in [0, 64]");
  Poly t0({Rational(1)});
  if (d == 0) return t0;
  Poly t1({Rational(0), Rational(1)});
  Poly two_x({Rational(0), Rational(2)});
  for (int i = 2; i <= d; ++i) {
    Poly t2 = two_x * t1 - t0;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return t1;
}

Rational chebyshev_derivative_at_one(int d, int m) {
  require(d >= 0 && d <= 64, ErrorCode::invalid_argument,
          "chebyshev degree must lie in [0, 64]");
  require(m >= 0, ErrorCode::invalid_argument,
          "derivative order must be nonnegative");
  if (m > d) return Rational(0);
  Rational num(1);
  for (int j = 0; j < m; ++j) num *= Rational(d * d - j * j);
  Rational den(1);
  for (int j = 1; j <= m; ++j) den *= Rational(2 * j - 1);
  return num / den;
}

namespace {

// Quotient and remainder of exact polynomial division.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorCode::invalid_argument,
          "polynomial division by zero");
  int db = b.degree();
  std::vector<Rational> rem = a.c;
  std::vector<Rational> quot;
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= db) {
    int dr = static_cast<int>(rem.size()) - 1;
    Rational f = rem.back() / b.c.back();
    quot[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Scale by a positive constant so the largest coefficient has magnitude one;
// keeps remainder-sequence coefficients small without touching signs.
Poly scale_down(const Poly& p) {
  if (p.is_zero()) return p;
  Rational m(0);
  for (const auto& x : p.c) m = std::max(m, Rational(abs(x)));
  return p.scaled(Rational(1) / m);
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = scale_down(poly_divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return scale_down(a);
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 1) return f;
  Poly g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return f;
  return poly_divmod(f, g).first;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> s;
  s.push_back(f);
  Poly d = f.derivative();
  if (d.is_zero()) return s;
  s.push_back(std::move(d));
  while (s.back().degree() >= 0) {
    Poly r = poly_divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(scale_down(r.scaled(Rational(-1))));
  }
  return s;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int prev = 0, v = 0;
  for (const auto& p : chain) {
    int sg = sgn(p.eval(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

// A point strictly between a and b where f does not vanish. Split fractions
// are staggered so the bisection cannot stall on a root.
Rational split_point(const Poly& f, const Rational& a, const Rational& b) {
  static const int num[] = {1, 17, 23, 29, 15};
  static const int den[] = {2, 37, 47, 61, 31};
  for (int k = 0; k < 5; ++k) {
    Rational m = a + (b - a) * Rational(num[k], den[k]);
    if (sgn(f.eval(m)) != 0) return m;
  }
  Rational step = (b - a) / 1024;
  Rational m = a + step;
  while (m < b) {
    if (sgn(f.eval(m)) != 0) return m;
    m += step;
  }
  fail(ErrorCode::numeric_check, "could not split a root isolation interval");
}

struct RootInterval {
  Rational a, b;
};

void isolate_roots(const std::vector<Poly>& chain, const Poly& f,
                   const Rational& a, const Rational& b, int va, int vb,
                   std::vector<RootInterval>* out) {
  int count = va - vb;
  if (count <= 0) return;
  if (count == 1) {
    out->push_back({a, b});
    return;
  }
  Rational m = split_point(f, a, b);
  int vm = sign_variations(chain, m);
  isolate_roots(chain, f, a, m, va, vm, out);
  isolate_roots(chain, f, m, b, vm, vb, out);
}

Rational nudge_off_roots(const Poly& f, Rational x, int direction) {
  Rational step(1, 1024);
  while (sgn(f.eval(x)) == 0) x += Rational(direction) * step;
  return x;
}

}  // namespace

double sup_norm(const Poly& p, const Rational& hi, int m) {
  require(m >= 0 && m <= 256, ErrorCode::invalid_argument,
          "derivative order must lie in [0, 256]");
  require(sgn(hi) > 0, ErrorCode::invalid_argument,
          "interval upper end must be positive");
  Poly q = p.derivative(m);
  if (q.degree() <= 0) return q.is_zero() ? 0.0 : Rational(abs(q.c[0])).get_d();

  Rational best = abs(q.eval(Rational(0)));
  best = std::max(best, Rational(abs(q.eval(hi))));

  Poly dq = q.derivative();
  Poly f = squarefree_part(dq);
  if (f.degree() >= 1) {
    std::vector<Poly> chain = sturm_chain(f);
    Rational eps(1, 1 << 20);
    Rational lo = nudge_off_roots(f, -eps, -1);
    Rational up = nudge_off_roots(f, hi + eps, +1);
    int vlo = sign_variations(chain, lo);
    int vup = sign_variations(chain, up);
    std::vector<RootInterval> roots;
    isolate_roots(chain, f, lo, up, vlo, vup, &roots);

    // Coarse bound on |q'| over the interval, for the refinement target.
    Rational h = hi < 1 ? Rational(1) : hi;
    Rational deriv_bound(0), pw(1);
    for (const auto& ci : dq.c) {
      deriv_bound += abs(ci) * pw;
      pw *= h;
    }
    Rational target = Rational(mpq_class(1e-13)) * (best + 1) /
                      (deriv_bound + 1);

    for (auto& iv : roots) {
      int va = sign_variations(chain, iv.a);
      for (int it = 0; it < 420 && iv.b - iv.a > target; ++it) {
        Rational mid = split_point(f, iv.a, iv.b);
        int vm = sign_variations(chain, mid);
        if (va - vm >= 1) {
          iv.b = mid;
        } else {
          iv.a = mid;
          va = vm;
        }
      }
      for (const Rational& edge : {iv.a, iv.b}) {
        Rational x = std::min(std::max(edge, Rational(0)), hi);
        best = std::max(best, Rational(abs(q.eval(x))));
      }
    }
  }
  return best.get_d();
}

MarkovBounds markov_bounds(double r0, double rm, double n, int d, int m) {
  require(r0 > 0 && rm >= 0 && n > 0, ErrorCode::invalid_argument,
          "markov bounds need r0 > 0, rm >= 0, n > 0");
  require(d >= 0 && d <= 64 && m >= 0, ErrorCode::invalid_argument,
          "markov bounds need 0 <= d <= 64 and m >= 0");
  MarkovBounds out;
  out.aa_lower_degree = std::sqrt(n * rm / (2.0 * r0));
  out.va_rhs =
      std::pow(2.0 * r0 / n, m) * chebyshev_derivative_at_one(d, m).get_d();
  return out;
}

bool derivative_floor_check(const Poly& p, int k, const Rational& delta,
                            const Rational& hi) {
  require(k >= 1 && k <= 40, ErrorCode::invalid_argument,
          "node count must lie in [1, 40]");
  require(sgn(delta) > 0, ErrorCode::invalid_argument,
          "offset must be positive");
  require(hi >= Rational(k), ErrorCode::invalid_argument,
          "interval must contain all the nodes");
  for (int i = 0; i < k; ++i)
    require(p.eval(Rational(i)) == 0, ErrorCode::invalid_argument,
            "polynomial must vanish at the early nodes");
  require(p.eval(Rational(k)) == delta, ErrorCode::invalid_argument,
          "polynomial must hit the offset at the last node");
  double d = delta.get_d();
  double factorial = 1.0;
  for (int m = 0; m <= k; ++m) {
    if (m >= 1) factorial *= m;
    if (sup_norm(p, hi, m) + 1e-12 < d / factorial) return false;
  }
  return true;
}

DegreeBound degree_lower_bound(double n, int k, double delta, double r0) {
  require(n >= 1, ErrorCode::invalid_argument, "range must satisfy n >= 1");
  require(k >= 1 && k <= n, ErrorCode::invalid_argument,
          "vanishing count must lie in [1, n]");
  require(delta > 0 && r0 >= delta, ErrorCode::invalid_argument,
          "offset must satisfy 0 < delta <= r0");
  DegreeBound out;
  out.n = n;
  out.k = k;
  out.delta = delta;
  out.r0 = r0;
  if (r0 >= 2.0) {
    out.branch = "markov";
    out.value = std::sqrt(n * (r0 - 1.0) / r0);
  } else {
    out.branch = "factorial";
    double ratio = delta;
    for (int j = 1; j <= k; ++j) ratio *= (2.0 * j - 1.0) / j;
    out.value = std::sqrt(n / 4.0 * std::pow(ratio, 1.0 / k));
  }
  return out;
}

double direct_product_bound(double n, int k, double t) {
  require(n > 0 && k >= 0 && k <= 64 && t >= 0, ErrorCode::invalid_argument,
          "direct product bound needs n > 0, 0 <= k <= 64, t >= 0");
  if (k == 0) return 1.0;
  if (!(2.0 * t < std::sqrt(n / 2.0))) return 1.0;
  double v = 1.0;
  for (int j = 1; j <= k; ++j) v *= (16.0 * t * t / n) * j / (2.0 * j - 1.0);
  return v;
}

int QueryAlgorithm::query_count() const {
  int t = 0;
  for (const auto& s : stages)
    if (s.kind != QueryStage::Kind::unitary) ++t;
  return t;
}

namespace {

void validate_algorithm(const QueryAlgorithm& a) {
  require(a.oracle_length >= 1 && a.oracle_length <= 16,
          ErrorCode::invalid_argument,
          "oracle length must lie in [1, 16]");
  require(a.index_dim >= a.oracle_length, ErrorCode::invalid_argument,
          "index register smaller than the oracle string");
  require(a.work_qubits >= 0 && a.work_qubits <= 10,
          ErrorCode::invalid_argument, "workspace must have 0 to 10 qubits");
  require(a.dim() <= kMaxDim, ErrorCode::dimension_limit,
          "query algorithm state space too large");
  require(static_cast<bool>(a.accept), ErrorCode::invalid_argument,
          "query algorithm has no accept predicate");
  for (const auto& st : a.stages) {
    if (st.kind == QueryStage::Kind::unitary) {
      require(st.u.rows() == a.dim() && st.u.cols() == a.dim(),
              ErrorCode::invalid_argument,
              "unitary stage does not match the state space");
      Cmat err = st.u.adjoint() * st.u - Cmat::Identity(a.dim(), a.dim());
      require(err.cwiseAbs().maxCoeff() <= kInvariantTol,
              ErrorCode::invalid_argument, "stage matrix is not unitary");
    } else if (st.kind == QueryStage::Kind::bit_query) {
      require(st.target_bit >= 0 && st.target_bit < a.work_qubits,
              ErrorCode::invalid_argument,
              "bit query target outside the workspace");
    }
  }
}

// State layout: z = index * 2^work_qubits + work.
Cvec run_on_oracle(const QueryAlgorithm& a, uint32_t x) {
  int wd = 1 << a.work_qubits;
  Cvec v = Cvec::Zero(a.dim());
  v(0) = 1.0;
  for (const auto& st : a.stages) {
    switch (st.kind) {
      case QueryStage::Kind::unitary:
        v = st.u * v;
        break;
      case QueryStage::Kind::phase_query:
        for (int i = 0; i < a.oracle_length; ++i) {
          if (!(x >> i & 1u)) continue;
          for (int k = 0; k < wd; ++k) v(i * wd + k) = -v(i * wd + k);
        }
        break;
      case QueryStage::Kind::bit_query: {
        int t = st.target_bit;
        for (int i = 0; i < a.oracle_length; ++i) {
          if (!(x >> i & 1u)) continue;
          for (int k = 0; k < wd; ++k) {
            if (k >> t & 1) continue;
            std::swap(v(i * wd + k), v(i * wd + (k | (1 << t))));
          }
        }
        break;
      }
    }
  }
  return v;
}

double accept_weight(const QueryAlgorithm& a, const Cvec& v) {
  int wd = 1 << a.work_qubits;
  double p = 0.0;
  for (int z = 0; z < a.dim(); ++z)
    if (a.accept(z / wd, z % wd)) p += std::norm(v(z));
  return p;
}

// Best continued-fraction convergent with denominator below 2^40; accepted
// once it sits within 1e-12 of the input.
Rational rationalize_mean(double v) {
  require(std::isfinite(v), ErrorCode::numeric_check,
          "acceptance average is not finite");
  bool neg = v < 0;
  double x = std::abs(v);
  const mpz_class qmax = mpz_class(1) << 40;
  mpz_class p0(0), q0(1), p1(1), q1(0);
  double rem = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(rem);
    mpz_class ai(fl);
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > qmax) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational r = Rational(p1) / Rational(q1);
    if (std::abs(r.get_d() - x) <= 1e-12) return neg ? -r : r;
    double frac = rem - fl;
    if (frac <= 0) break;
    rem = 1.0 / frac;
    if (!std::isfinite(rem)) break;
  }
  fail(ErrorCode::numeric_check,
       "acceptance average did not rationalize within tolerance");
}

// Exact interpolation through (j, y[j]) for j = 0 .. y.size() - 1.
Poly lagrange_on_nodes(const std::vector<Rational>& y) {
  int n = static_cast<int>(y.size()) - 1;
  Poly full({Rational(1)});
  for (int j = 0; j <= n; ++j)
    full = full * Poly({Rational(-j), Rational(1)});
  Poly acc;
  for (int i = 0; i <= n; ++i) {
    if (y[i] == 0) continue;
    int deg = full.degree();
    std::vector<Rational> b(deg);
    b[deg - 1] = full.c[deg];
    for (int k = deg - 1; k >= 1; --k)
      b[k - 1] = full.c[k] + Rational(i) * b[k];
    Rational den(1);
    for (int j = 0; j <= n; ++j)
      if (j != i) den *= Rational(i - j);
    acc = acc + Poly(std::move(b)).scaled(y[i] / den);
  }
  return acc;
}

}  // namespace

double accept_probability(const QueryAlgorithm& a, uint32_t x_bits) {
  validate_algorithm(a);
  require((x_bits >> a.oracle_length) == 0, ErrorCode::invalid_argument,
          "oracle bits out of range");
  return accept_weight(a, run_on_oracle(a, x_bits));
}

Poly acceptance_polynomial(const QueryAlgorithm& a) {
  validate_algorithm(a);
  int n = a.oracle_length;
  require((1LL << n) * a.dim() * a.dim() <= (1LL << 31),
          ErrorCode::dimension_limit, "oracle enumeration too large");

  std::vector<double> sums(n + 1, 0.0);
  for (uint32_t x = 0; x < (1u << n); ++x)
    sums[std::popcount(x)] += accept_weight(a, run_on_oracle(a, x));

  std::vector<Rational> y(n + 1);
  double binom = 1.0;
  for (int w = 0; w <= n; ++w) {
    if (w > 0) binom = binom * (n - w + 1) / w;
    double mean = sums[w] / binom;
    require(mean >= -kInvariantTol && mean <= 1.0 + kInvariantTol,
            ErrorCode::numeric_check,
            "acceptance average escaped the unit interval");
    y[w] = rationalize_mean(std::clamp(mean, 0.0, 1.0));
  }

  Poly p = lagrange_on_nodes(y);
  std::vector<Rational> coeffs = p.c;
  while (!coeffs.empty() && std::abs(coeffs.back().get_d()) < 1e-9)
    coeffs.pop_back();
  Poly out(std::move(coeffs));
  require(out.degree() <= 2 * a.query_count(), ErrorCode::numeric_check,
          "acceptance polynomial degree exceeds twice the query count");
  return out;
}

Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Cmat uniform_diffusion(int dim) {
  require(dim >= 1 && dim <= kMaxDim, ErrorCode::invalid_argument,
          "diffusion dimension out of range");
  return Cmat::Constant(dim, dim, 2.0 / dim) - Cmat::Identity(dim, dim);
}

Cmat permutation_unitary(const std::vector<int>& image) {
  int d = static_cast<int>(image.size());
  require(d >= 1 && d <= kMaxDim, ErrorCode::invalid_argument,
          "permutation dimension out of range");
  std::vector<char> seen(d, 0);
  for (int v : image) {
    require(v >= 0 && v < d && !seen[v], ErrorCode::invalid_argument,
            "permutation image is not a bijection");
    seen[v] = 1;
  }
  Cmat out = Cmat::Zero(d, d);
  for (int i = 0; i < d; ++i) out(image[i], i) = 1.0;
  return out;
}

namespace {

bool grover_trial(int n, int k, const std::vector<int>& schedule, Rng& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int j = 0; j < k; ++j)
    std::swap(idx[j], idx[j + rng.below(n - j)]);
  std::vector<char> marked(n, 0);
  for (int j = 0; j < k; ++j) marked[idx[j]] = 1;

  std::vector<char> alive(n, 1);
  std::vector<double> amp(n, 0.0);
  int found = 0;
  for (int stage = 0; stage < k; ++stage) {
    int n_alive = n - found;
    double a0 = 1.0 / std::sqrt(static_cast<double>(n_alive));
    for (int i = 0; i < n; ++i) amp[i] = alive[i] ? a0 : 0.0;
    for (int it = 0; it < schedule[stage]; ++it) {
      double mu = 0.0;
      for (int i = 0; i < n; ++i) {
        if (alive[i] && marked[i]) amp[i] = -amp[i];
        if (alive[i]) mu += amp[i];
      }
      mu /= n_alive;
      for (int i = 0; i < n; ++i)
        if (alive[i]) amp[i] = 2.0 * mu - amp[i];
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i)
      if (alive[i]) total += amp[i] * amp[i];
    double r = rng.uniform() * total;
    int pick = -1;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      pick = i;
      acc += amp[i] * amp[i];
      if (acc >= r) break;
    }
    if (pick < 0 || !marked[pick]) return false;
    alive[pick] = 0;
    ++found;
  }
  return found == k;
}

}  // namespace

GroverReport grover_find_all(int n, int k, const std::vector<int>& schedule,
                             int trials, uint64_t seed, int jobs) {
  require(n >= 1 && n <= kMaxDim, ErrorCode::dimension_limit,
          "search space must have 1 to 1024 items");
  require(k >= 0 && k <= 8 && k <= n, ErrorCode::invalid_argument,
          "marked count must lie in [0, min(n, 8)]");
  require(schedule.size() == static_cast<size_t>(k),
          ErrorCode::invalid_argument, "schedule needs one entry per item");
  for (int it : schedule)
    require(it >= 0 && it <= 100000, ErrorCode::invalid_argument,
            "stage iteration count out of range");
  require(trials >= 1 && trials <= 10000000, ErrorCode::invalid_argument,
          "trial count out of range");
  require(jobs >= 1 && jobs <= 256, ErrorCode::invalid_argument,
          "job count out of range");

  GroverReport rep;
  rep.n = n;
  rep.k = k;
  rep.schedule = schedule;
  rep.total_queries = std::accumulate(schedule.begin(), schedule.end(), 0);
  rep.trials = trials;
  rep.bound = direct_product_bound(n, k, rep.total_queries);
  if (k == 0) {
    rep.empirical = 1.0;
    rep.se = 0.0;
    rep.within = true;
    return rep;
  }

  std::vector<char> success(trials, 0);
  auto run_trial = [&](int t) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
    success[t] = grover_trial(n, k, schedule, rng) ? 1 : 0;
  };
  if (jobs <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        run_trial(t);
      }
    };
    std::vector<std::thread> pool;
    int count = std::min(jobs, trials);
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int wins = 0;
  for (char s : success) wins += s;
  rep.empirical = static_cast<double>(wins) / trials;
  rep.se = std::sqrt(rep.empirical * (1.0 - rep.empirical) / trials);
  rep.within = rep.empirical <= rep.bound + 4.0 * rep.se + 1e-12;
  return rep;
}

}  // namespace qowlab
