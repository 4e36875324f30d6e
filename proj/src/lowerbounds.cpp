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

#include "qowlab/lowerbounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "qowlab/qcore.hpp"

namespace qowlab {

void FiniteDist::validate() const {
  Rational sum = 0;
  for (const Rational& v : p) {
    require(v >= 0, ErrorCode::invalid_argument,
            "distribution entry is negative");
    sum += v;
  }
  require(sum == 1, ErrorCode::invalid_argument,
          "distribution does not sum to one");
}

FiniteDist FiniteDist::uniform(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "uniform: empty universe");
  FiniteDist d;
  d.p.assign(n, Rational(1, n));
  return d;
}

Rational variation_distance(const FiniteDist& a, const FiniteDist& b) {
  require(a.size() == b.size(), ErrorCode::invalid_argument,
          "variation_distance: universe mismatch");
  Rational sum = 0;
  for (int i = 0; i < a.size(); ++i) sum += abs(a.p[i] - b.p[i]);
  return sum / 2;
}

void PairDist::validate() const {
  require(static_cast<size_t>(size) * size == p.size(),
          ErrorCode::invalid_argument, "pair distribution shape mismatch");
  Rational sum = 0;
  for (const Rational& v : p) {
    require(v >= 0, ErrorCode::invalid_argument,
            "pair distribution entry is negative");
    sum += v;
  }
  require(sum == 1, ErrorCode::invalid_argument,
          "pair distribution does not sum to one");
}

PairDistributions build_pair_distributions(
    const OneWayProblem& f, const std::vector<FiniteDist>& a_family,
    const FiniteDist& b) {
  int n = f.alice_size;
  require(static_cast<long>(n) * n <= (1L << 16), ErrorCode::dimension_limit,
          "pair support exceeds 2^16");
  require(f.total(), ErrorCode::invalid_argument,
          "pair distributions need a total problem: the one-sample mixture is "
          "ill-defined on a partial domain");
  require(static_cast<int>(a_family.size()) == f.bob_size &&
              b.size() == f.bob_size,
          ErrorCode::invalid_argument, "family/prior shape mismatch");
  b.validate();
  for (int y = 0; y < f.bob_size; ++y) {
    require(a_family[y].size() == n, ErrorCode::invalid_argument,
            "A_y universe mismatch");
    a_family[y].validate();
    for (int x = 0; x < n; ++x)
      require(a_family[y].p[x] == 0 || f.f(x, y) == 1,
              ErrorCode::invalid_argument,
              "A_y puts mass on x with f(x,y) != 1");
  }

  PairDistributions out;
  out.d1.p.assign(n, 0);
  out.d2.size = n;
  out.d2.p.assign(static_cast<size_t>(n) * n, 0);
  for (int y = 0; y < f.bob_size; ++y) {
    if (b.p[y] == 0) continue;
    std::vector<int> support;
    for (int x = 0; x < n; ++x)
      if (a_family[y].p[x] != 0) support.push_back(x);
    for (int x : support) {
      Rational wx = b.p[y] * a_family[y].p[x];
      out.d1.p[x] += wx;
      for (int z : support) out.d2.at(x, z) += wx * a_family[y].p[z];
    }
  }
  out.d1.validate();
  out.d2.validate();
  return out;
}

Rational pair_product_distance(const PairDist& d2, const FiniteDist& d1) {
  require(d2.size == d1.size(), ErrorCode::invalid_argument,
          "pair_product_distance: universe mismatch");
  Rational sum = 0;
  for (int x = 0; x < d2.size; ++x)
    for (int z = 0; z < d2.size; ++z)
      sum += abs(d2.at(x, z) - d1.p[x] * d1.p[z]);
  return sum / 2;
}

std::vector<FiniteDist> coset_a_family(int p) {
  require(p >= 2 && p <= 101 && is_prime_u64(p), ErrorCode::invalid_argument,
          "coset family needs a prime p <= 101");
  std::vector<FiniteDist> fam(p * p);
  for (int a = 0; a < p; ++a)
    for (int bb = 0; bb < p; ++bb) {
      FiniteDist& d = fam[a * p + bb];
      d.p.assign(p * p, 0);
      for (int u = 0; u < p; ++u) d.p[u * p + (a * u + bb) % p] = Rational(1, p);
    }
  return fam;
}

PairDistributions coset_family(int p) {
  require(p <= 13, ErrorCode::dimension_limit,
          "coset pair distributions exceed the support cap beyond p = 13");
  OneWayProblem prob = coset_problem(p);
  return build_pair_distributions(prob, coset_a_family(p),
                                  FiniteDist::uniform(p * p));
}

namespace {

// Lines through the origin-anchored difference d = (du, dv): the number of
// slopes a with a du = dv (mod p). Together with translation invariance this
// pins every entry of D2 without the closed form.
Rational coset_delta_by_differences(int p) {
  long abs_sum = 0;  // sum over difference classes of |N(d) - 1|
  for (int du = 0; du < p; ++du)
    for (int dv = 0; dv < p; ++dv) {
      int n_lines = 0;
      for (int a = 0; a < p; ++a)
        if (a * du % p == dv) ++n_lines;
      abs_sum += std::abs(n_lines - 1);
    }
  // Each class contains p^2 ordered point pairs; D2 entries are N(d)/p^4.
  mpz_class num = mpz_class(abs_sum) * p * p;
  mpz_class den = 2 * mpz_class(p) * p * p * p;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational coset_pr_f0_by_counting(int p) {
  // D1(x) = (lines through x) / p^3, counted directly per point.
  long p2 = static_cast<long>(p) * p;
  mpz_class num = 0;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v) {
      long lines = 0;
      for (int a = 0; a < p; ++a)
        for (int bb = 0; bb < p; ++bb)
          if ((a * u + bb) % p == v) ++lines;
      num += mpz_class(lines) * (p2 - lines);
    }
  mpz_class den = mpz_class(p2) * p * p2;  // p^5
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

CosetDeltaReport coset_delta_exact(int p) {
  require(p >= 2 && p <= 101 && is_prime_u64(p), ErrorCode::invalid_argument,
          "coset_delta_exact needs a prime p <= 101");
  CosetDeltaReport rep;
  rep.p = p;
  rep.delta = Rational(1, p) - Rational(1, static_cast<long>(p) * p);
  Rational diff_path = coset_delta_by_differences(p);
  if (p <= 13) {
    PairDistributions fam = coset_family(p);
    rep.enumerated = pair_product_distance(fam.d2, fam.d1);
    rep.path = "pair-distributions";
    OneWayProblem prob = coset_problem(p);
    FiniteDist b = FiniteDist::uniform(p * p);
    Rational pr = 0;
    for (int x = 0; x < prob.alice_size; ++x) {
      if (fam.d1.p[x] == 0) continue;
      for (int y = 0; y < prob.bob_size; ++y)
        if (prob.f(x, y) == 0) pr += fam.d1.p[x] * b.p[y];
    }
    rep.pr_f0 = pr;
  } else {
    rep.enumerated = diff_path;
    rep.path = "difference-classes";
    rep.pr_f0 = coset_pr_f0_by_counting(p);
  }
  rep.match = rep.enumerated == rep.delta && diff_path == rep.delta;
  rep.pr_f0_match = rep.pr_f0 == 1 - Rational(1, p);
  return rep;
}

SubsetDeltaReport subset_delta(const FiniteGroup& g,
                               const std::vector<int>& s) {
  int n = g.order();
  require(n <= 1024, ErrorCode::dimension_limit, "subset_delta: |G| > 1024");
  require(!s.empty(), ErrorCode::invalid_argument, "subset_delta: empty S");
  require(2 * static_cast<int>(s.size()) <= n, ErrorCode::invalid_argument,
          "subset_delta: |S| must be at most |G|/2");
  std::vector<bool> in_s(n, false);
  for (int e : s) {
    require(e >= 0 && e < n, ErrorCode::invalid_argument,
            "subset_delta: element out of range");
    require(!in_s[e], ErrorCode::invalid_argument,
            "subset_delta: repeated element");
    in_s[e] = true;
  }
  long k = static_cast<long>(s.size());

  // Route one: the distribution of s t^-1 against uniform.
  std::vector<long> c(n, 0);
  for (int a : s)
    for (int t : s) ++c[g.op(a, g.inverse(t))];
  mpz_class m_num = 0;
  for (int u = 0; u < n; ++u)
    m_num += abs(mpz_class(c[u]) * n - k * k);
  Rational delta(m_num, 2 * mpz_class(n) * k * k);
  delta.canonicalize();

  // Route two: ||D2 - D1^2|| from translate intersections. T_x = x^-1 S.
  int words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> translate(n,
                                               std::vector<uint64_t>(words, 0));
  std::vector<long> t_size(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int e = 0; e < n; ++e)
      if (in_s[g.op(x, e)]) {
        translate[x][e / 64] |= 1ull << (e % 64);
        ++t_size[x];
      }
  }
  // D1(x) = |T_x| / (n k); D2(x,z) = |T_x cap T_z| / (n k^2). Accumulate
  // |D2 - D1 D1| over the common denominator n^2 k^2.
  mpz_class pair_num = 0;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      long inter = 0;
      for (int w = 0; w < words; ++w)
        inter += std::popcount(translate[x][w] & translate[z][w]);
      // n^2 k^2 D2 = n inter ; n^2 k^2 D1 D1 = |T_x| |T_z|
      pair_num += abs(mpz_class(n) * inter -
                      mpz_class(t_size[x]) * t_size[z]);
    }
  Rational pair_delta(pair_num, 2 * mpz_class(n) * n * k * k);
  pair_delta.canonicalize();

  SubsetDeltaReport rep;
  rep.delta = delta;
  rep.pair_delta = pair_delta;
  rep.equal = delta == pair_delta;
  return rep;
}

Rational randset_exact(const FiniteGroup& g, int k) {
  int n = g.order();
  require(k >= 1 && k <= n, ErrorCode::invalid_argument,
          "randset_exact: K out of range");
  long r = order_stats(g).order2_count;
  long rp = n - r - 1;
  mpq_class kk(k);
  mpq_class term = kk * kk;
  if (k >= 2) term += Rational(2 * r + rp) * k * (k - 1) / (n - 1);
  if (k >= 3)
    term += Rational(2 * rp) * k * (k - 1) * (k - 2) /
            (static_cast<long>(n - 1) * (n - 2));
  if (k >= 4) {
    Rational tail = 0;
    if (r > 0)
      tail += Rational(r) / (static_cast<long>(n - 1) * (n - 3));
    if (rp > 0)
      tail += Rational(rp) / (static_cast<long>(n - 1) * (n - 2));
    term += Rational(static_cast<long>(k) * (k - 1) * (k - 2) * (k - 3)) * tail;
  }
  Rational e = term / (kk * kk * kk * kk) - Rational(1, n);
  e.canonicalize();
  return e;
}

namespace {

Rational subset_sumsq(const FiniteGroup& g, const std::vector<int>& s) {
  int n = g.order();
  long k = static_cast<long>(s.size());
  std::vector<long> c(n, 0);
  for (int a : s)
    for (int t : s) ++c[g.op(a, g.inverse(t))];
  // sum over u of (c[u]/k^2 - 1/n)^2 with common denominator (n k^2)^2.
  mpz_class num = 0;
  for (int u = 0; u < n; ++u) {
    mpz_class d = mpz_class(c[u]) * n - k * k;
    num += d * d;
  }
  mpz_class den = mpz_class(n) * k * k;
  Rational r(num, den * den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational randset_enumerate(const FiniteGroup& g, int k) {
  int n = g.order();
  require(k >= 1 && k <= n, ErrorCode::invalid_argument,
          "randset_enumerate: K out of range");
  double log_count = 0;
  for (int i = 0; i < k; ++i)
    log_count += std::log2(static_cast<double>(n - i) / (i + 1));
  require(log_count < 21, ErrorCode::dimension_limit,
          "randset_enumerate: too many subsets");

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  Rational total = 0;
  long count = 0;
  while (true) {
    total += subset_sumsq(g, idx);
    ++count;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  Rational e = total / count;
  e.canonicalize();
  return e;
}

RandsetReport randset_check(const FiniteGroup& g, int k, int trials,
                            uint64_t seed, int jobs) {
  int n = g.order();
  require(trials >= 2, ErrorCode::invalid_argument,
          "randset_check: need at least two trials");
  RandsetReport rep;
  rep.group_order = n;
  rep.k = k;
  rep.trials = trials;
  rep.exact = randset_exact(g, k);

  double log_count = 0;
  for (int i = 0; i < k; ++i)
    log_count += std::log2(static_cast<double>(n - i) / (i + 1));
  if (log_count < 15) {
    rep.enumerated_available = true;
    rep.enumerated = randset_enumerate(g, k);
    rep.closed_form_matches = rep.enumerated == rep.exact;
  }

  std::vector<double> sumsq(trials), deltas(trials);
  double inv_n = 1.0 / n;
  double kk = static_cast<double>(k) * k;
  auto run_trial = [&](int t) {
    Rng rng = Rng::stream(seed, static_cast<uint64_t>(t));
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<long> c(n, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        ++c[g.op(pool[i], g.inverse(pool[j]))];
    double sq = 0.0, dl = 0.0;
    for (int u = 0; u < n; ++u) {
      double dev = c[u] / kk - inv_n;
      sq += dev * dev;
      dl += std::abs(dev);
    }
    sumsq[t] = sq;
    deltas[t] = dl / 2.0;
  };
  if (jobs <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
          run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  double mean = 0.0;
  for (double v : sumsq) mean += v;
  mean /= trials;
  double var = 0.0;
  for (double v : sumsq) var += (v - mean) * (v - mean);
  var /= trials - 1;
  rep.mc_mean = mean;
  rep.mc_se = std::sqrt(var / trials);
  double exact_d = rep.exact.get_d();
  rep.mean_ok = std::abs(mean - exact_d) <= 4.0 * rep.mc_se + 1e-12;

  std::sort(deltas.begin(), deltas.end());
  rep.median_delta = deltas[trials / 2];
  rep.median_bound = std::sqrt(2.0 * exact_d * n) / 2.0;
  rep.median_ok = rep.median_delta <= rep.median_bound + 1e-12;
  return rep;
}

TraceDistanceReport vardist_certificate(const QuantumOneWayProtocol& p,
                                        const std::vector<FiniteDist>& a_family,
                                        const FiniteDist& b, double beta) {
  require(p.message_qubits <= 8, ErrorCode::dimension_limit,
          "vardist_certificate: message too long");
  PairDistributions fam = build_pair_distributions(p.problem, a_family, b);

  int n = p.problem.alice_size;
  int dim = p.message_dim();
  std::vector<Cmat> encoded(n);
  std::vector<bool> have(n, false);
  auto enc = [&](int x) -> const Cmat& {
    if (!have[x]) {
      encoded[x] = p.encoder(x).mat();
      have[x] = true;
    }
    return encoded[x];
  };

  Cmat rho = Cmat::Zero(dim, dim);
  for (int x = 0; x < n; ++x)
    if (fam.d1.p[x] != 0) rho += fam.d1.p[x].get_d() * enc(x);

  double expected = 0.0;
  for (int y = 0; y < p.problem.bob_size; ++y) {
    if (b.p[y] == 0) continue;
    Cmat rho_y = Cmat::Zero(dim, dim);
    for (int x = 0; x < n; ++x)
      if (a_family[y].p[x] != 0) rho_y += a_family[y].p[x].get_d() * enc(x);
    expected += b.p[y].get_d() * trace_distance(rho, rho_y);
  }

  TraceDistanceReport rep;
  rep.l = p.message_qubits;
  rep.delta = pair_product_distance(fam.d2, fam.d1);
  rep.expected_tdist = expected;
  rep.bound =
      std::sqrt(std::ldexp(rep.delta.get_d(), rep.l - 1));
  rep.beta = beta;
  // An uninformative family (all A_y identical) has delta = 0 and yields no
  // message length requirement at all.
  rep.required_l = rep.delta > 0 ? required_message_bits(beta, rep.delta) : 0;
  rep.verdict = expected <= rep.bound + kDerivedTol;
  return rep;
}

int required_message_bits(double beta, const Rational& delta) {
  require(beta > 0.0 && beta <= 1.0, ErrorCode::invalid_argument,
          "required_message_bits: beta out of range");
  require(delta > 0, ErrorCode::invalid_argument,
          "required_message_bits: delta must be positive");
  double v = 1.0 + std::log2(beta * beta / delta.get_d());
  double snapped = std::round(v);
  if (std::abs(v - snapped) < 1e-12) v = snapped;
  return static_cast<int>(std::ceil(v));
}

}  // namespace qowlab
