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

// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line
// (with elapsed seconds) and enforces its own runtime budget; the process
// exits nonzero when any criterion fails.
//
// Usage: acceptance <qowlab-cli-binary> <report-schema.json>

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qowlab/experiments.hpp"
#include "qowlab/groups.hpp"
#include "qowlab/lowerbounds.hpp"
#include "qowlab/polymethod.hpp"
#include "qowlab/protocols.hpp"
#include "qowlab/qcore.hpp"
#include "qowlab/reconstruct.hpp"
#include "qowlab/report.hpp"
#include "schema_check.hpp"

namespace {

using namespace qowlab;
using Clock = std::chrono::steady_clock;

std::string g_cli;
Json g_schema;

struct Failure {
  std::string msg;
};

void check(bool ok, const std::string& msg) {
  if (!ok) throw Failure{msg};
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// 1. Gentle measurement: recovered state within sqrt(eps) of the original.

void criterion_recovery() {
  const int kInstances = 1050;
  int pure_count = 0;
  for (int t = 0; t < kInstances; ++t) {
    int dim = 2 + t % 7;  // dims 2..8
    Rng rng = Rng::stream(1001, static_cast<uint64_t>(t));
    bool pure = (t % 2 == 0);
    DensityMatrix rho =
        pure ? random_pure_density(dim, rng) : random_density(dim, rng);
    bool pow2 = (dim & (dim - 1)) == 0;
    int system_bits =
        pow2 ? std::bit_width(static_cast<unsigned>(dim)) - 1 : 0;
    int output_bit =
        pow2 ? static_cast<int>(rng.below(1 + system_bits)) : 0;
    Cmat u = random_unitary(2 * dim, rng);
    TwoOutcomeMeasurement m(dim, 1, output_bit, u);

    RecoveryResult rr = measure_and_recover(rho, m);
    double eps = rr.p_err;
    double dist = trace_distance(rr.recovered, rho);
    check(dist <= std::sqrt(eps) + 1e-8,
          "instance " + std::to_string(t) + ": recovered distance " +
              fmt_double(dist) + " above sqrt(" + fmt_double(eps) + ")");
    if (pure) {
      ++pure_count;
      double want = std::sqrt(eps * (1.0 - eps));
      check(std::abs(rr.intermediate_tdist - want) <= 1e-8,
            "instance " + std::to_string(t) + ": intermediate distance " +
                fmt_double(rr.intermediate_tdist) + " != sqrt(eps(1-eps))");
    }
  }
  check(pure_count >= 500, "too few pure instances");
}

// ---------------------------------------------------------------------------
// 2. Classical reconstruction: decoded answers match f exhaustively, with at
// most K recorded corrections per input.

void criterion_reconstruction() {
  auto check_protocol = [](const QuantumOneWayProtocol& proto,
                           const std::string& label) {
    int k = proto.message_qubits;
    double eta = compliance_budget(k);
    ProtocolEvaluation ev = evaluate_protocol(proto);
    check(ev.worst_error <= eta,
          label + ": worst error " + fmt_double(ev.worst_error) +
              " above budget " + fmt_double(eta));
    for (int x = 0; x < proto.problem.alice_size; ++x) {
      SimulationResult sim = simulate_message(proto, x);
      check(static_cast<int>(sim.advice.entries.size()) <= k,
            label + ": x=" + std::to_string(x) + " needs more than " +
                std::to_string(k) + " corrections");
      for (int y : proto.problem.bob_domain(x)) {
        int got = bob_decode(proto, sim.advice, y);
        check(got == proto.problem.f(x, y),
              label + ": decode mismatch at x=" + std::to_string(x) +
                  " y=" + std::to_string(y));
      }
    }
  };

  check_protocol(boost_protocol(basis_equality_protocol(1), 3), "eq:1 r=3");
  check_protocol(boost_protocol(basis_equality_protocol(2), 3), "eq:2 r=3");
  check_protocol(boost_protocol(basis_equality_protocol(3), 1), "eq:3");
  check_protocol(boost_protocol(promise_clause_protocol(4), 1), "promise:4");
  check_protocol(boost_protocol(rotated_equality_protocol(1, 0.1), 3),
                 "rotated eq:1 r=3");

  Report rep = run_experiment("reconstruct", {{"problem", "eq:1"}, {"seed", 1}});
  check(rep.results["T"].get<int>() == 1, "walkthrough: T != 1");
  check(rep.results["K"].get<int>() == 1, "walkthrough: K != 1");
  check(rep.results["all_correct"].get<bool>(), "walkthrough: decode errors");
  check(rep.verdict, "walkthrough: verdict fail");
}

// ---------------------------------------------------------------------------
// 3. Point-vs-line distribution gap matches the closed form exactly.

void criterion_coset_delta() {
  for (int p : {2, 3, 5, 7, 11, 101}) {
    CosetDeltaReport rep = coset_delta_exact(p);
    Rational delta = Rational(p - 1) / Rational(p * p);
    Rational pr0 = Rational(p - 1) / Rational(p);
    check(rep.match, "p=" + std::to_string(p) + ": routes disagree");
    check(rep.delta == delta,
          "p=" + std::to_string(p) + ": delta != (p-1)/p^2");
    check(rep.enumerated == delta,
          "p=" + std::to_string(p) + ": enumerated route off");
    check(rep.pr_f0_match && rep.pr_f0 == pr0,
          "p=" + std::to_string(p) + ": Pr[f=0] != 1 - 1/p");
    std::string want_path = p <= 13 ? "pair-distributions" : "difference-classes";
    check(rep.path == want_path,
          "p=" + std::to_string(p) + ": unexpected route " + rep.path);
  }
}

// ---------------------------------------------------------------------------
// 4. Subset gap: both computation routes agree exactly.

void criterion_subset_delta() {
  FiniteGroup z5 = FiniteGroup::parse("z5");
  SubsetDeltaReport rep = subset_delta(z5, {0, 1});
  check(rep.equal, "z5 {0,1}: routes disagree");
  check(rep.delta == Rational(2) / Rational(5), "z5 {0,1}: delta != 2/5");

  Report r = run_experiment(
      "subset-delta",
      {{"random_instances", 50}, {"max_order", 256}, {"seed", 11}});
  check(r.results["all_equal"].get<bool>(), "random instances: route mismatch");
  check(r.verdict, "random instances: verdict fail");
}

// ---------------------------------------------------------------------------
// 5. Random-subset flatness: closed form equals enumeration on every small
// group, and Monte Carlo agrees at z101.

void criterion_randset() {
  const char* groups[] = {"z2",  "z3",    "z4",   "z2^2", "z5",  "z6",
                          "z7",  "z8",    "z4xz2", "z2^3", "z9",  "z3^2",
                          "z10", "z11",   "z12",  "z6xz2"};
  for (const char* name : groups) {
    FiniteGroup g = FiniteGroup::parse(name);
    int kmax = std::min(4, g.order());
    for (int k = 1; k <= kmax; ++k) {
      check(randset_exact(g, k) == randset_enumerate(g, k),
            std::string(name) + " k=" + std::to_string(k) +
                ": closed form != enumeration");
    }
  }
  FiniteGroup z3 = FiniteGroup::parse("z3");
  check(randset_exact(z3, 2) == Rational(1) / Rational(24),
        "z3 k=2: expected 1/24");

  FiniteGroup z101 = FiniteGroup::parse("z101");
  RandsetReport rep = randset_check(z101, 10, 10000, 17, 4);
  check(rep.exact == Rational(17381) / Rational(1111000),
        "z101 k=10: closed form changed");
  check(rep.mean_ok, "z101 k=10: MC mean " + fmt_double(rep.mc_mean) +
                         " further than 4 se from " +
                         fmt_double(rep.exact.get_d()));
}

// ---------------------------------------------------------------------------
// 6. Trace-distance certificate: expected distinguishability stays under
// sqrt(2^{L-1} delta) for the built-in instances and random protocols.

void criterion_vardist() {
  for (int p : {2, 3}) {
    QuantumOneWayProtocol proto = coset_basis_protocol(p);
    std::vector<FiniteDist> family = coset_a_family(p);
    FiniteDist b = FiniteDist::uniform(p * p);
    TraceDistanceReport rep = vardist_certificate(proto, family, b);
    check(rep.delta == Rational(p - 1) / Rational(p * p),
          "p=" + std::to_string(p) + ": delta != (p-1)/p^2");
    check(rep.expected_tdist <= rep.bound + 1e-8,
          "p=" + std::to_string(p) + ": certificate exceeded, " +
              fmt_double(rep.expected_tdist) + " > " + fmt_double(rep.bound));
    check(rep.verdict, "p=" + std::to_string(p) + ": verdict fail");
  }

  Report r = run_experiment("vardist-check",
                            {{"random_protocols", 20}, {"seed", 6}});
  check(r.results["all_within"].get<bool>(), "random protocols: bound exceeded");
  check(r.verdict, "random protocols: verdict fail");
}

// ---------------------------------------------------------------------------
// 7. Polynomial machinery: acceptance degrees, Chebyshev derivative values,
// both derivative inequalities, the factorial floor, and the equality case.

Cmat hh() {
  Cmat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool neg = ((i & j & 1) != 0) ^ ((i & j & 2) != 0);
      m(i, j) = neg ? -0.5 : 0.5;
    }
  return m;
}

Poly compose(const Poly& p, const Poly& u) {
  Poly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * u + Poly({p.c[i]});
  return acc;
}

std::vector<int> shuffled(int n, Rng& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int j = n - 1; j >= 1; --j)
    std::swap(img[j], img[rng.below(static_cast<uint64_t>(j) + 1)]);
  return img;
}

void criterion_polynomials() {
  // a) acceptance polynomials of eleven constructed algorithms.
  Cmat i2 = Cmat::Identity(2, 2);
  int algorithms = 0;

  QueryAlgorithm trivial;
  trivial.oracle_length = 4;
  trivial.index_dim = 4;
  trivial.work_qubits = 0;
  trivial.accept = [](int, int) { return true; };
  Poly pt = acceptance_polynomial(trivial);
  check(pt.degree() <= 0, "trivial algorithm: degree > 0");
  check(pt.eval(Rational(2)) == Rational(1), "trivial algorithm: p != 1");
  ++algorithms;

  QueryAlgorithm read1;
  read1.oracle_length = 4;
  read1.index_dim = 4;
  read1.work_qubits = 1;
  read1.stages.push_back(
      {QueryStage::Kind::unitary, kron(permutation_unitary({1, 0, 2, 3}), i2), 0});
  read1.stages.push_back({QueryStage::Kind::bit_query, Cmat(), 0});
  read1.accept = [](int, int w) { return (w & 1) != 0; };
  Poly pr = acceptance_polynomial(read1);
  check(pr.degree() <= 2 * read1.query_count(), "read-position: degree > 2T");
  check(pr.degree() == 1 && pr.c[1] == Rational(1) / Rational(4),
        "read-position: expected x/4");
  ++algorithms;

  QueryAlgorithm grover;
  grover.oracle_length = 4;
  grover.index_dim = 4;
  grover.work_qubits = 1;
  grover.stages.push_back({QueryStage::Kind::unitary, kron(hh(), i2), 0});
  grover.stages.push_back({QueryStage::Kind::phase_query, Cmat(), 0});
  grover.stages.push_back(
      {QueryStage::Kind::unitary, kron(uniform_diffusion(4), i2), 0});
  grover.stages.push_back({QueryStage::Kind::bit_query, Cmat(), 0});
  grover.accept = [](int, int w) { return (w & 1) != 0; };
  check(grover.query_count() == 2, "grover: query count != 2");
  Poly pg = acceptance_polynomial(grover);
  check(pg.degree() <= 4, "grover: degree > 2T");
  check(pg.eval(Rational(0)) == Rational(0) && pg.eval(Rational(1)) == Rational(1) &&
            pg.eval(Rational(2)) == Rational(1) / Rational(2) &&
            pg.eval(Rational(3)) == Rational(0) && pg.eval(Rational(4)) == Rational(1),
        "grover: weight-averaged values changed");
  ++algorithms;

  for (int i = 0; i < 8; ++i) {
    Rng rng = Rng::stream(701, static_cast<uint64_t>(i));
    int n = 1 << (1 + i % 3);  // 2, 4, 8
    QueryAlgorithm a;
    a.oracle_length = n;
    a.index_dim = n;
    a.work_qubits = 1;
    a.stages.push_back(
        {QueryStage::Kind::unitary, kron(permutation_unitary(shuffled(n, rng)), i2), 0});
    a.stages.push_back({QueryStage::Kind::phase_query, Cmat(), 0});
    a.stages.push_back(
        {QueryStage::Kind::unitary, kron(uniform_diffusion(n), i2), 0});
    a.stages.push_back({QueryStage::Kind::bit_query, Cmat(), 0});
    if (i % 2 == 1) {
      a.stages.push_back(
          {QueryStage::Kind::unitary, kron(permutation_unitary(shuffled(n, rng)), i2), 0});
      a.stages.push_back({QueryStage::Kind::phase_query, Cmat(), 0});
    }
    a.accept = [](int idx, int w) { return ((idx ^ w) & 1) != 0; };
    Poly pa = acceptance_polynomial(a);
    check(pa.degree() <= 2 * a.query_count(),
          "random algorithm " + std::to_string(i) + ": degree " +
              std::to_string(pa.degree()) + " > 2T");
    for (int wt = 0; wt <= n; ++wt) {
      Rational v = pa.eval(Rational(wt));
      check(v >= Rational(0) && v <= Rational(1),
            "random algorithm " + std::to_string(i) + ": value outside [0,1]");
    }
    ++algorithms;
  }
  check(algorithms >= 10, "fewer than ten constructed algorithms");

  // b) derivative values at 1: closed form vs differentiated recurrence.
  for (int d = 0; d <= 20; ++d) {
    Poly t = chebyshev(d);
    for (int m = 0; m <= 5; ++m) {
      check(chebyshev_derivative_at_one(d, m) == t.derivative(m).eval(Rational(1)),
            "d=" + std::to_string(d) + " m=" + std::to_string(m) +
                ": closed form mismatch");
    }
  }

  // c) higher-derivative bound on 200 random rational cubics over [0, 4].
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::stream(702, static_cast<uint64_t>(i));
    std::vector<Rational> coeffs(4);
    for (int j = 0; j < 3; ++j) {
      long num = static_cast<long>(rng.below(2001)) - 1000;
      coeffs[j] = Rational(num) / Rational(1 + static_cast<long>(rng.below(16)));
    }
    long lead = 1 + static_cast<long>(rng.below(1000));
    if (rng.below(2)) lead = -lead;
    coeffs[3] = Rational(lead) / Rational(1 + static_cast<long>(rng.below(16)));
    Poly poly(coeffs);
    double r0 = sup_norm(poly, Rational(4), 0);
    for (int m = 1; m <= 3; ++m) {
      double sup_m = sup_norm(poly, Rational(4), m);
      double rhs = markov_bounds(r0, 0.0, 4, 3, m).va_rhs;
      check(sup_m <= rhs + 1e-9, "poly " + std::to_string(i) + " m=" +
                                     std::to_string(m) + ": " + fmt_double(sup_m) +
                                     " > " + fmt_double(rhs));
    }
  }

  // d) factorial floor on 100 constructed vanishing polynomials.
  for (int i = 0; i < 100; ++i) {
    Rng rng = Rng::stream(703, static_cast<uint64_t>(i));
    int k = 1 + i % 3;
    Poly base({Rational(1)});
    for (int j = 0; j < k; ++j) base = base * Poly({Rational(-j), Rational(1)});
    Poly q;
    do {
      std::vector<Rational> qc(3);
      for (auto& c : qc) {
        long num = static_cast<long>(rng.below(11)) - 5;
        c = Rational(num) / Rational(1 + static_cast<long>(rng.below(3)));
      }
      q = Poly(qc);
    } while (q.eval(Rational(k)) == Rational(0));
    Poly p = base * q;
    Rational delta = p.eval(Rational(k));
    if (delta < 0) {
      p = p.scaled(Rational(-1));
      delta = -delta;
    }
    check(derivative_floor_check(p, k, delta, Rational(k + 4)),
          "instance " + std::to_string(i) + ": factorial floor violated");
  }

  // e) first-derivative equality case: the rescaled extremal polynomial on
  // [0, 4] certifies exactly its own degree.
  Poly half_shift({Rational(-1), Rational(1) / Rational(2)});
  for (int d = 2; d <= 10; ++d) {
    Poly q = compose(chebyshev(d), half_shift);
    double r0 = sup_norm(q, Rational(4), 0);
    double r1 = sup_norm(q, Rational(4), 1);
    MarkovBounds mb = markov_bounds(r0, r1, 4, d, 1);
    check(mb.aa_lower_degree == static_cast<double>(d),
          "d=" + std::to_string(d) + ": equality case returned " +
              fmt_double(mb.aa_lower_degree));
  }
}

// ---------------------------------------------------------------------------
// 8. Find-all success ceiling: starved schedules stay under the bound.

void criterion_find_all() {
  struct Case {
    int n, k;
    std::vector<int> schedule;
    uint64_t seed;
  };
  const Case cases[] = {
      {64, 2, {1, 1}, 801},
      {256, 2, {1, 1}, 802},
      {256, 4, {1, 1, 1, 1}, 803},
  };
  for (const Case& c : cases) {
    GroverReport rep = grover_find_all(c.n, c.k, c.schedule, 10000, c.seed, 4);
    check(rep.bound < 1.0, "n=" + std::to_string(c.n) + " k=" +
                               std::to_string(c.k) + ": schedule not starved");
    check(rep.within, "n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
                          ": empirical " + fmt_double(rep.empirical) +
                          " above bound " + fmt_double(rep.bound));
  }

  GroverReport exact = grover_find_all(4, 1, {1}, 2000, 804, 4);
  check(exact.empirical == 1.0, "n=4 k=1: single sweep no longer exact");
  check(exact.bound == 1.0, "n=4 k=1: bound should be vacuous");
  check(exact.within, "n=4 k=1: verdict fail");
}

// ---------------------------------------------------------------------------
// 9. Advice protocols and matrix diagnostics.

void criterion_advice() {
  for (const char* name : {"z2^3", "z4xz2"}) {
    FiniteGroup g = FiniteGroup::parse(name);
    for (const Subgroup& h : all_subgroups(g)) {
      for (int x = 0; x < g.order(); ++x) {
        double prob = membership_advice_probability(g, h, x);
        double want = h.contains(x) ? 1.0 : 0.5;
        check(std::abs(prob - want) <= 1e-9,
              std::string(name) + ": membership probability " +
                  fmt_double(prob) + " at x=" + std::to_string(x));
      }
    }
  }

  for (int n = 1; n <= 6; ++n) {
    double expected = 0.5 + std::ldexp(1.0, -n - 1);
    for (int t = 0; t < 3; ++t) {
      Rng rng = Rng::stream(901, static_cast<uint64_t>(10 * n + t));
      std::vector<int> table(static_cast<size_t>(1) << n);
      for (auto& b : table) b = static_cast<int>(rng.below(2));
      for (int x = 0; x < (1 << n); ++x) {
        check(truth_table_advice_probability(table, x) == expected,
              "n=" + std::to_string(n) + ": guessing probability drifted");
      }
    }
  }

  check(matrix_diagnostics(equality_problem(2)).sauer_holds,
        "equality matrix: shatter bound violated");
  check(matrix_diagnostics(coset_problem(3)).sauer_holds,
        "coset matrix: shatter bound violated");
  Report r = run_experiment("diagnostics",
                            {{"random_functions", 50}, {"seed", 9}});
  check(r.results["all_hold"].get<bool>(), "random functions: bound violated");
  check(r.verdict, "random functions: verdict fail");
}

// ---------------------------------------------------------------------------
// 10. CLI determinism: identical invocations yield byte-identical JSON that
// validates against the shipped schema.

struct CliRun {
  std::string out;
  int status = -1;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  check(pipe != nullptr, "popen failed for: " + args);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  CliRun run;
  run.out = std::move(out);
  run.status = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return run;
}

void criterion_cli_determinism() {
  const char* invocations[] = {
      "goodasnew --dim 4 --trials 50 --seed 3",
      "reconstruct --problem eq:1 --seed 1",
      "coset-delta --p 5 --seed 1",
      "subset-delta --group z5 --set 0,1 --seed 1",
      "randset --group z9 --k 3 --trials 500 --seed 2 --jobs 2",
      "vardist-check --problem coset:3 --seed 1",
      "membership --group 'z2^3' --seed 1",
      "pqp --n 3 --seed 1",
      "diagnostics --problem eq:2 --seed 1",
      "cheb --d 8 --m 2 --seed 1",
      "markov --suite aa-equality --max-d 6 --n 4 --seed 1",
      "degree-bound --n 100 --k 1 --delta 1 --r0 1 --seed 1",
      "direct-product --n 10000 --k 2 --t 10 --seed 1",
      "grover-all --n 64 --k 2 --trials 500 --seed 4 --jobs 2",
      "fingerprint --mode eq --n 16 --target 0.01 --trials 500 --seed 5",
  };
  for (const char* args : invocations) {
    CliRun first = run_cli(args);
    check(first.status == 0, std::string(args) + ": exit code " +
                                 std::to_string(first.status));
    CliRun second = run_cli(args);
    check(second.status == 0, std::string(args) + ": rerun exit code " +
                                  std::to_string(second.status));
    check(first.out == second.out,
          std::string(args) + ": reruns differ byte-wise");
    Json doc;
    try {
      doc = Json::parse(first.out);
    } catch (const std::exception& e) {
      check(false, std::string(args) + ": output is not JSON: " + e.what());
    }
    std::string violation = schema_check::validate(g_schema, doc);
    check(violation.empty(),
          std::string(args) + ": schema violation: " + violation);
    check(doc["verdict"] == "pass", std::string(args) + ": verdict fail");
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* name;
  double budget_seconds;  // 0 = no budget
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: acceptance <qowlab-cli> <report-schema.json>\n");
    return 2;
  }
  g_cli = argv[1];
  {
    std::ifstream in(argv[2]);
    if (!in) {
      std::fprintf(stderr, "cannot open schema %s\n", argv[2]);
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    g_schema = Json::parse(buf.str());
  }

  const Criterion criteria[] = {
      {"gentle measurement recovery bound", 30, criterion_recovery},
      {"classical reconstruction of one-way messages", 120,
       criterion_reconstruction},
      {"point-vs-line distribution gap closed form", 60, criterion_coset_delta},
      {"subset distribution gap dual routes", 60, criterion_subset_delta},
      {"random-subset flatness expectation", 120, criterion_randset},
      {"trace-distance certificate", 120, criterion_vardist},
      {"acceptance polynomials and derivative bounds", 180,
       criterion_polynomials},
      {"find-all success probability ceiling", 300, criterion_find_all},
      {"advice protocols and matrix diagnostics", 60, criterion_advice},
      {"CLI determinism and schema conformance", 0, criterion_cli_determinism},
  };

  bool all_pass = true;
  int idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    auto t0 = Clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const Failure& f) {
      failure = f.msg;
    } catch (const std::exception& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (failure.empty() && c.budget_seconds > 0 && secs > c.budget_seconds) {
      failure = "runtime " + fmt_double(secs) + "s exceeds budget of " +
                fmt_double(c.budget_seconds) + "s";
    }
    if (failure.empty()) {
      std::printf("[PASS] %2d. %s (%.1fs)\n", idx, c.name, secs);
    } else {
      all_pass = false;
      std::printf("[FAIL] %2d. %s (%.1fs): %s\n", idx, c.name, secs,
                  failure.c_str());
    }
    std::fflush(stdout);
  }

  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: criteria failed");
  return all_pass ? 0 : 1;
}
