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

#include "qowlab/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

namespace qowlab {

bool OneWayProblem::total() const {
  for (int x = 0; x < alice_size; ++x)
    for (int y = 0; y < bob_size; ++y)
      if (f(x, y) < 0) return false;
  return true;
}

std::vector<int> OneWayProblem::bob_domain(int x) const {
  std::vector<int> ys;
  for (int y = 0; y < bob_size; ++y)
    if (f(x, y) >= 0) ys.push_back(y);
  return ys;
}

OneWayProblem equality_problem(int n) {
  require(n >= 1 && n <= 20, ErrorCode::invalid_argument,
          "equality_problem: n out of range");
  int size = 1 << n;
  return {"eq:" + std::to_string(n), size, size,
          [](int x, int y) { return x == y ? 1 : 0; }};
}

OneWayProblem coset_problem(int p) {
  require(p >= 2 && p <= 101, ErrorCode::invalid_argument,
          "coset_problem: p out of range");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, ErrorCode::invalid_argument,
            "coset_problem: p must be prime");
  int size = p * p;
  return {"coset:" + std::to_string(p), size, size, [p](int x, int y) {
            int u = x / p, v = x % p;
            int a = y / p, b = y % p;
            return v == (a * u + b) % p ? 1 : 0;
          }};
}

OneWayProblem promise_problem(int n) {
  require(n >= 4 && n <= 16 && n % 4 == 0, ErrorCode::invalid_argument,
          "promise_problem: n must be a multiple of 4, at most 16");
  int size = 1 << n;
  int half_mask = (1 << (n / 2)) - 1;
  int quarter = n / 4;
  return {"promise:" + std::to_string(n), size, size,
          [n, half_mask, quarter](int x, int y) {
            int both = x & y;
            int s1 = std::popcount(static_cast<unsigned>(both >> (n / 2)));
            int s2 = std::popcount(static_cast<unsigned>(both & half_mask));
            if (s1 >= quarter && s2 == 0) return 1;
            if (s1 == 0 && s2 >= quarter) return 0;
            return -1;
          }};
}

OneWayProblem subset_problem(const FiniteGroup& g, const std::vector<int>& s) {
  require(!s.empty(), ErrorCode::invalid_argument,
          "subset_problem: empty subset");
  std::vector<bool> in_s(g.order(), false);
  std::string sspec;
  for (int e : s) {
    require(e >= 0 && e < g.order(), ErrorCode::invalid_argument,
            "subset_problem: element out of range");
    if (!sspec.empty()) sspec += ",";
    sspec += std::to_string(e);
    in_s[e] = true;
  }
  FiniteGroup gc = g;
  return {"subset:" + g.name() + ":" + sspec, g.order(), g.order(),
          [gc, in_s](int x, int y) { return in_s[gc.op(x, y)] ? 1 : 0; }};
}

OneWayProblem send_bit_problem() {
  return {"sendbit", 2, 1, [](int x, int) { return x; }};
}

OneWayProblem parse_problem(const std::string& id) {
  auto split = [&](char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= id.size(); ++i)
      if (i == id.size() || id[i] == sep) {
        parts.push_back(id.substr(start, i - start));
        start = i + 1;
      }
    return parts;
  };
  std::vector<std::string> parts = split(':');
  const std::string& kind = parts[0];
  if (kind == "sendbit") return send_bit_problem();
  require(parts.size() >= 2, ErrorCode::invalid_argument,
          "problem id needs a parameter: \"" + id + "\"");
  if (kind == "eq") return equality_problem(std::stoi(parts[1]));
  if (kind == "coset") return coset_problem(std::stoi(parts[1]));
  if (kind == "promise") return promise_problem(std::stoi(parts[1]));
  if (kind == "subset") {
    require(parts.size() == 3, ErrorCode::invalid_argument,
            "subset id is subset:GROUP:e1,e2,...");
    FiniteGroup g = FiniteGroup::parse(parts[1]);
    std::vector<int> s;
    size_t start = 0;
    const std::string& list = parts[2];
    for (size_t i = 0; i <= list.size(); ++i)
      if (i == list.size() || list[i] == ',') {
        s.push_back(std::stoi(list.substr(start, i - start)));
        start = i + 1;
      }
    return subset_problem(g, s);
  }
  fail(ErrorCode::invalid_argument, "unknown problem id: \"" + id + "\"");
}

ProtocolEvaluation evaluate_protocol(const QuantumOneWayProtocol& p,
                                     bool collect_pairs) {
  ProtocolEvaluation ev;
  for (int x = 0; x < p.problem.alice_size; ++x) {
    std::optional<DensityMatrix> rho;
    for (int y = 0; y < p.problem.bob_size; ++y) {
      int fx = p.problem.f(x, y);
      if (fx < 0) continue;
      if (!rho) rho = p.encoder(x);
      double p1 = response_probability(*rho, p.decoder(y));
      double err = fx == 1 ? 1.0 - p1 : p1;
      ev.worst_error = std::max(ev.worst_error, err);
      if (collect_pairs) ev.per_pair.push_back({x, y, err});
    }
  }
  return ev;
}

double majority_error(double e, int r) {
  require(r >= 1 && r % 2 == 1, ErrorCode::invalid_argument,
          "majority_error: r must be odd");
  require(e >= 0.0 && e <= 1.0, ErrorCode::invalid_argument,
          "majority_error: e out of range");
  // Pascal row r, summed over k >= (r+1)/2.
  std::vector<double> binom(r + 1, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row <= r; ++row)
    for (int k = row; k >= 1; --k) binom[k] += binom[k - 1];
  double total = 0.0;
  for (int k = (r + 1) / 2; k <= r; ++k)
    total += binom[k] * std::pow(e, k) * std::pow(1.0 - e, r - k);
  return total;
}

QuantumOneWayProtocol boost_protocol(const QuantumOneWayProtocol& p, int r) {
  require(r >= 1 && r % 2 == 1, ErrorCode::invalid_argument,
          "boost_protocol: r must be odd");
  if (r == 1) return p;
  int L = p.message_qubits;

  QuantumOneWayProtocol out;
  out.problem = p.problem;
  out.message_qubits = r * L;
  auto base_encoder = p.encoder;
  out.encoder = [base_encoder, r](int x) {
    DensityMatrix one = base_encoder(x);
    Cmat acc = one.mat();
    for (int t = 1; t < r; ++t) {
      Cmat next(acc.rows() * one.dim(), acc.cols() * one.dim());
      for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j)
          next.block(i * one.dim(), j * one.dim(), one.dim(), one.dim()) =
              acc(i, j) * one.mat();
      acc = std::move(next);
    }
    return DensityMatrix(acc);
  };
  auto base_decoder = p.decoder;
  struct BoostCache {
    std::mutex mu;
    std::map<int, TwoOutcomeMeasurement> built;
  };
  auto cache = std::make_shared<BoostCache>();
  out.decoder = [base_decoder, r, L, cache](int y) {
    {
      std::scoped_lock lock(cache->mu);
      auto it = cache->built.find(y);
      if (it != cache->built.end()) return it->second;
    }
    TwoOutcomeMeasurement base = base_decoder(y);
    int a = base.ancilla_qubits;
    int anc_total = r * a + 1;
    int total_bits = r * L + anc_total;
    require(total_bits <= 20 && (1 << total_bits) <= kMaxDim,
            ErrorCode::dimension_limit,
            "boosted decoder exceeds the dimension cap");

    // Global bit layout (LSB first): ancilla block of copy t at
    // [t*a, t*a + a), majority bit at r*a, then system bits; copy t's
    // system qubits sit at [anc_total + (r-1-t)*L, ... + L) so copy 0 is the
    // most significant kron factor, matching the encoder.
    long dim = 1L << total_bits;
    std::vector<std::vector<int>> pos(r);
    long copy_mask = 0;
    for (int t = 0; t < r; ++t) {
      for (int j = 0; j < a; ++j) pos[t].push_back(t * a + j);
      for (int j = 0; j < L; ++j)
        pos[t].push_back(anc_total + (r - 1 - t) * L + j);
      for (int b : pos[t]) copy_mask |= 1L << b;
    }
    int local_bits = a + L;

    auto copy_output_bit = [&](long z, int t) -> int {
      if (base.output_bit < a) return (z >> (t * a + base.output_bit)) & 1;
      int sys_bit = base.output_bit - a;
      return (z >> (anc_total + (r - 1 - t) * L + sys_bit)) & 1;
    };

    // The copies act on disjoint bits, so each entry of the product of the
    // per-copy embeddings factors into one base-unitary entry per copy; the
    // majority vote of the r output bits into the fresh ancilla is then a
    // row permutation. Filling columns directly this way avoids any
    // dim-by-dim matrix products.
    Cmat u = Cmat::Zero(dim, dim);
    std::vector<std::pair<long, Cplx>> frontier, grown;
    for (long z = 0; z < dim; ++z) {
      frontier.assign(1, {z & ~copy_mask, Cplx(1.0)});
      for (int t = 0; t < r; ++t) {
        int local_in = 0;
        for (int j = 0; j < local_bits; ++j)
          if ((z >> pos[t][j]) & 1) local_in |= 1 << j;
        grown.clear();
        for (const auto& [row, v] : frontier)
          for (int local_out = 0; local_out < (1 << local_bits);
               ++local_out) {
            Cplx w = base.unitary(local_out, local_in);
            if (w == Cplx(0.0)) continue;
            long nrow = row;
            for (int j = 0; j < local_bits; ++j)
              if ((local_out >> j) & 1) nrow |= 1L << pos[t][j];
            grown.emplace_back(nrow, v * w);
          }
        std::swap(frontier, grown);
      }
      for (const auto& [row, v] : frontier) {
        int votes = 0;
        for (int t = 0; t < r; ++t) votes += copy_output_bit(row, t);
        long voted = votes >= (r + 1) / 2 ? row ^ (1L << (r * a)) : row;
        u(voted, z) = v;
      }
    }
    TwoOutcomeMeasurement built(1 << (r * L), anc_total, r * a, std::move(u));
    std::scoped_lock lock(cache->mu);
    return cache->built.try_emplace(y, std::move(built)).first->second;
  };
  return out;
}

QuantumOneWayProtocol basis_equality_protocol(int n) {
  require(n >= 1 && n <= 10, ErrorCode::invalid_argument,
          "basis_equality_protocol: n out of range");
  QuantumOneWayProtocol p;
  p.problem = equality_problem(n);
  p.message_qubits = n;
  int dim = 1 << n;
  p.encoder = [dim](int x) { return DensityMatrix::basis_state(dim, x); };
  p.decoder = [dim](int y) {
    return TwoOutcomeMeasurement::from_accept_predicate(
        dim, [y](int s) { return s == y; });
  };
  return p;
}

QuantumOneWayProtocol rotated_equality_protocol(int n, double theta) {
  require(n >= 1 && n <= 10, ErrorCode::invalid_argument,
          "rotated_equality_protocol: n out of range");
  QuantumOneWayProtocol p;
  p.problem = equality_problem(n);
  p.message_qubits = n;
  int dim = 1 << n;
  double c = std::cos(theta), s = std::sin(theta);
  p.encoder = [dim, n, c, s](int x) {
    Cvec v = Cvec::Zero(dim);
    for (int z = 0; z < dim; ++z) {
      double amp = 1.0;
      for (int b = 0; b < n; ++b)
        amp *= ((z >> b) & 1) == ((x >> b) & 1) ? c : s;
      v(z) = amp;
    }
    v /= v.norm();
    return DensityMatrix::pure(v);
  };
  p.decoder = [dim](int y) {
    return TwoOutcomeMeasurement::from_accept_predicate(
        dim, [y](int z) { return z == y; });
  };
  return p;
}

QuantumOneWayProtocol promise_clause_protocol(int n) {
  QuantumOneWayProtocol p;
  p.problem = promise_problem(n);
  require(n <= 8, ErrorCode::dimension_limit,
          "promise_clause_protocol: message too large to simulate");
  p.message_qubits = n;
  int dim = 1 << n;
  int half_mask = (1 << (n / 2)) - 1;
  int quarter = n / 4;
  p.encoder = [dim](int x) { return DensityMatrix::basis_state(dim, x); };
  p.decoder = [dim, n, half_mask, quarter](int y) {
    return TwoOutcomeMeasurement::from_accept_predicate(dim, [=](int x) {
      int both = x & y;
      int s1 = std::popcount(static_cast<unsigned>(both >> (n / 2)));
      int s2 = std::popcount(static_cast<unsigned>(both & half_mask));
      return s1 >= quarter && s2 == 0;
    });
  };
  return p;
}

QuantumOneWayProtocol coset_basis_protocol(int p) {
  require(p == 2 || p == 3 || p == 5 || p == 7, ErrorCode::invalid_argument,
          "coset_basis_protocol: p must be one of 2, 3, 5, 7");
  QuantumOneWayProtocol proto;
  proto.problem = coset_problem(p);
  int qubits = 0;
  while ((1 << qubits) < p * p) ++qubits;
  proto.message_qubits = qubits;
  int dim = 1 << qubits;
  proto.encoder = [dim](int x) { return DensityMatrix::basis_state(dim, x); };
  proto.decoder = [dim, p](int y) {
    int a = y / p, b = y % p;
    return TwoOutcomeMeasurement::from_accept_predicate(dim, [=](int s) {
      if (s >= p * p) return false;
      return s % p == (a * (s / p) + b) % p;
    });
  };
  return proto;
}

QuantumOneWayProtocol biased_bit_protocol(double e) {
  require(e >= 0.0 && e < 0.5, ErrorCode::invalid_argument,
          "biased_bit_protocol: e must be in [0, 1/2)");
  QuantumOneWayProtocol p;
  p.problem = send_bit_problem();
  p.message_qubits = 1;
  double good = std::sqrt(1.0 - e), bad = std::sqrt(e);
  p.encoder = [good, bad](int x) {
    Cvec v(2);
    v(x) = good;
    v(1 - x) = bad;
    return DensityMatrix::pure(v);
  };
  p.decoder = [](int) { return TwoOutcomeMeasurement::computational(1, 0); };
  return p;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t n = std::max<uint64_t>(lo, 2); n <= hi; ++n)
    if (is_prime_u64(n)) out.push_back(n);
  return out;
}

int bits_needed(uint64_t v) {
  int b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return std::max(b, 1);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every 64-bit integer.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::pair<uint64_t, uint64_t> FingerprintProtocol::sample_message(
    uint64_t x, Rng& rng) const {
  uint64_t p = primes[rng.below(primes.size())];
  return {p, x % p};
}

BoundReport FingerprintProtocol::bound_report(const std::string& problem) const {
  BoundReport r;
  r.problem = problem;
  r.measure = "R12";
  r.kind = "upper";
  r.value = message_bits;
  r.provenance = "prime fingerprint, primes in [" + std::to_string(prime_lo) +
                 ", " + std::to_string(prime_hi) + "]";
  return r;
}

FingerprintProtocol equality_fingerprint(int n, double target_error) {
  require(n >= 1 && n <= 62, ErrorCode::invalid_argument,
          "equality_fingerprint: n out of range");
  require(target_error > 0.0 && target_error < 1.0,
          ErrorCode::invalid_argument, "equality_fingerprint: bad target");
  FingerprintProtocol fp;
  fp.mode = "eq";
  uint64_t nn = static_cast<uint64_t>(n) * n;
  for (uint64_t t = 1;; t *= 2) {
    uint64_t lo = std::max<uint64_t>(4, t * nn), hi = 2 * lo;
    require(hi <= (1u << 24), ErrorCode::dimension_limit,
            "equality_fingerprint: target needs an impractical prime range");
    std::vector<uint64_t> primes = primes_in(lo, hi);
    if (primes.empty()) continue;
    // A nonzero difference below 2^n has fewer than n / log2(lo) prime
    // factors >= lo, so a uniformly drawn prime collides with probability at
    // most that count over the range size.
    int max_divisors = static_cast<int>(static_cast<double>(n) / std::log2(static_cast<double>(lo)));
    double bound = static_cast<double>(max_divisors) / static_cast<double>(primes.size());
    if (bound <= target_error) {
      fp.prime_lo = lo;
      fp.prime_hi = hi;
      fp.primes = std::move(primes);
      fp.error_bound = bound;
      fp.message_bits = bits_needed(hi) + bits_needed(hi - 1);
      fp.decide = [](uint64_t p, uint64_t residue, int y) {
        return static_cast<uint64_t>(y) % p == residue;
      };
      return fp;
    }
  }
}

std::optional<BoundReport> protocol_bound_report(
    const QuantumOneWayProtocol& p, const ProtocolEvaluation& ev) {
  if (ev.worst_error > 1.0 / 3.0) return std::nullopt;
  BoundReport r;
  r.problem = p.problem.id;
  r.measure = "Q12";
  r.kind = "upper";
  r.value = p.message_qubits;
  r.provenance =
      "evaluated protocol, worst error " + std::to_string(ev.worst_error);
  return r;
}

FingerprintProtocol subset_fingerprint(const FiniteGroup& g,
                                       const std::vector<int>& s) {
  require(g.order() <= 4096, ErrorCode::dimension_limit,
          "subset_fingerprint: group too large");
  OneWayProblem prob = subset_problem(g, s);
  FingerprintProtocol fp;
  fp.mode = "subset";
  double log2g = std::log2(static_cast<double>(g.order()));
  uint64_t ssq = static_cast<uint64_t>(s.size()) * s.size();
  uint64_t lo = std::max<uint64_t>(
      2, static_cast<uint64_t>(std::ceil(ssq * log2g * log2g)));
  uint64_t hi = 2 * lo;
  require(hi <= (1u << 26), ErrorCode::dimension_limit,
          "subset_fingerprint: prime range too large");
  fp.prime_lo = lo;
  fp.prime_hi = hi;
  fp.primes = primes_in(lo, hi);
  require(!fp.primes.empty(), ErrorCode::numeric_check,
          "subset_fingerprint: empty prime range");
  fp.error_bound = 0.0;  // one-sided; false accepts quantified empirically
  fp.message_bits = bits_needed(hi) + bits_needed(hi - 1);
  int order = g.order();
  auto f = prob.f;
  fp.decide = [f, order](uint64_t p, uint64_t residue, int y) {
    for (int z = 0; z < order; ++z)
      if (static_cast<uint64_t>(z) % p == residue && f(z, y) == 1) return true;
    return false;
  };
  return fp;
}

double membership_advice_probability(const FiniteGroup& g, const Subgroup& h,
                                     int x) {
  require(g.order() <= 512, ErrorCode::dimension_limit,
          "membership_advice_probability: group too large");
  require(x >= 0 && x < g.order(), ErrorCode::invalid_argument,
          "membership_advice_probability: element out of range");
  int n = g.order();
  Cvec psi = Cvec::Zero(2L * n);
  double amp = 1.0 / std::sqrt(2.0 * h.order());
  for (int e : h.elements()) {
    psi(e) += amp;           // |0>|h>
    psi(n + g.op(x, e)) += amp;  // |1>|xh>
  }
  Cmat had(2, 2);
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  Cvec out = apply_on_factors(psi, had, {2, n}, {0});
  double p0 = 0.0;
  for (int e = 0; e < n; ++e) p0 += std::norm(out(e));
  return p0;
}

double truth_table_advice_probability(const std::vector<int>& truth_table,
                                      int x) {
  size_t size = truth_table.size();
  require(size >= 2 && (size & (size - 1)) == 0 && size <= 256,
          ErrorCode::invalid_argument,
          "truth table must have 2^n entries, n <= 8");
  require(x >= 0 && static_cast<size_t>(x) < size, ErrorCode::invalid_argument,
          "truth_table_advice_probability: x out of range");
  double p = 0.0;
  double weight = 1.0 / static_cast<double>(size);
  for (size_t z = 0; z < size; ++z) {
    require(truth_table[z] == 0 || truth_table[z] == 1,
            ErrorCode::invalid_argument, "truth table entries must be bits");
    // Observing |z>|f(z)>: answer f(z) on a hit, a fair coin otherwise.
    p += weight * (static_cast<size_t>(x) == z ? 1.0 : 0.5);
  }
  return p;
}

MatrixDiagnostics matrix_diagnostics(const OneWayProblem& f) {
  long total = static_cast<long>(f.alice_size) * f.bob_size;
  require(total <= (1L << 20), ErrorCode::dimension_limit,
          "matrix_diagnostics: matrix too large");
  require(f.total(), ErrorCode::invalid_argument,
          "matrix_diagnostics: problem must be total");

  MatrixDiagnostics d;
  d.rows = f.alice_size;
  d.cols = f.bob_size;

  std::vector<std::vector<uint8_t>> rows(f.alice_size,
                                         std::vector<uint8_t>(f.bob_size));
  for (int x = 0; x < f.alice_size; ++x)
    for (int y = 0; y < f.bob_size; ++y)
      rows[x][y] = static_cast<uint8_t>(f.f(x, y));

  std::set<std::vector<uint8_t>> row_set(rows.begin(), rows.end());
  d.distinct_rows = static_cast<int>(row_set.size());
  std::set<std::vector<uint8_t>> col_set;
  std::vector<int> col_rep;  // one column index per distinct column
  for (int y = 0; y < f.bob_size; ++y) {
    std::vector<uint8_t> col(f.alice_size);
    for (int x = 0; x < f.alice_size; ++x) col[x] = rows[x][y];
    if (col_set.insert(std::move(col)).second) col_rep.push_back(y);
  }
  d.distinct_cols = static_cast<int>(col_set.size());

  d.d1 = 0;
  while ((1 << d.d1) < d.distinct_rows) ++d.d1;

  // VC dimension by level-wise extension: a set can only be shattered if its
  // subsets are, so grow shattered sets one distinct column at a time.
  // Columns are packed into 64-bit words over the distinct rows; a pattern is
  // realized iff the AND of the matching column masks is nonzero.
  std::vector<std::vector<uint8_t>> urows(row_set.begin(), row_set.end());
  int nrows = static_cast<int>(urows.size());
  int words = (nrows + 63) / 64;
  std::vector<std::vector<uint64_t>> colbits(col_rep.size()),
      colbits_neg(col_rep.size());
  for (size_t c = 0; c < col_rep.size(); ++c) {
    colbits[c].assign(words, 0);
    colbits_neg[c].assign(words, 0);
    for (int ri = 0; ri < nrows; ++ri) {
      if (urows[ri][col_rep[c]])
        colbits[c][ri / 64] |= 1ull << (ri % 64);
      else
        colbits_neg[c][ri / 64] |= 1ull << (ri % 64);
    }
  }
  long budget = 2'000'000'000;  // word-op budget for the subset search
  std::vector<uint64_t> acc(words);
  auto shattered = [&](const std::vector<int>& sel) {
    int k = static_cast<int>(sel.size());
    budget -= (1L << k) * k * words;
    require(budget > 0, ErrorCode::dimension_limit,
            "matrix_diagnostics: VC search budget exceeded");
    for (int pat = 0; pat < (1 << k); ++pat) {
      for (int w = 0; w < words; ++w) acc[w] = ~0ull;
      for (int i = 0; i < k; ++i) {
        const auto& col = (pat >> i) & 1 ? colbits[sel[i]] : colbits_neg[sel[i]];
        for (int w = 0; w < words; ++w) acc[w] &= col[w];
      }
      bool hit = false;
      for (int w = 0; w < words; ++w)
        if (acc[w]) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };

  int ncols = static_cast<int>(col_rep.size());
  // Two sound prunes keep the search exact but tractable: 2^k realized
  // patterns need 2^k distinct rows, so levels above floor(log2(rows)) are
  // skipped outright; and every column of a shattered k-set must take each
  // value on at least 2^(k-1) distinct rows, so unbalanced columns drop out
  // as the level rises.
  std::vector<int> min_count(ncols);
  for (int c = 0; c < ncols; ++c) {
    int ones = 0;
    for (int w = 0; w < words; ++w)
      ones += std::popcount(colbits[c][w]);
    min_count[c] = std::min(ones, nrows - ones);
  }
  int cap = 0;
  while ((2L << cap) <= nrows) ++cap;

  d.vc = 0;
  std::vector<std::vector<int>> level(1);  // the empty set seeds level 1
  for (int k = 1; k <= cap && !level.empty(); ++k) {
    int need = 1 << (k - 1);
    bool record = k < cap;  // sets at the top level are never extended
    std::vector<std::vector<int>> next;
    bool found = false;
    for (const auto& base : level) {
      bool usable = true;
      for (int c : base)
        if (min_count[c] < need) {
          usable = false;
          break;
        }
      if (!usable) continue;
      int start = base.empty() ? 0 : base.back() + 1;
      for (int c = start; c < ncols; ++c) {
        if (min_count[c] < need) continue;
        std::vector<int> cand = base;
        cand.push_back(c);
        if (shattered(cand)) {
          found = true;
          if (!record) break;
          next.push_back(std::move(cand));
        }
      }
      if (found && !record) break;
    }
    if (!found) break;
    d.vc = k;
    level = std::move(next);
  }

  // Sauer bound: distinct rows <= sum_{i<=vc} C(cols, i).
  double sum = 0.0;
  double term = 1.0;
  for (int i = 0; i <= d.vc; ++i) {
    if (i > 0) term = term * (d.cols - i + 1) / i;
    sum += term;
    if (sum > 4.6e18) {
      sum = 4.6e18;
      break;
    }
  }
  d.sauer_bound = sum;
  d.sauer_holds = static_cast<double>(d.distinct_rows) <= sum;

  for (const char* kind : {"upper", "lower"}) {
    BoundReport r;
    r.problem = f.id;
    r.measure = "D1";
    r.kind = kind;
    r.value = d.d1;
    r.provenance = "ceil(log2 of " + std::to_string(d.distinct_rows) +
                   " distinct rows)";
    d.reports.push_back(std::move(r));
  }
  return d;
}

}  // namespace qowlab
