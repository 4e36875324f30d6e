// Copyright 2026 The qowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "qowlab/protocols.hpp"

using namespace qowlab;

TEST_CASE("problem families have the advertised shapes and values") {
  OneWayProblem eq = equality_problem(2);
  CHECK(eq.alice_size == 4);
  CHECK(eq.bob_size == 4);
  CHECK(eq.total());
  CHECK(eq.f(2, 2) == 1);
  CHECK(eq.f(2, 3) == 0);

  OneWayProblem coset = coset_problem(3);
  CHECK(coset.alice_size == 9);
  CHECK(coset.bob_size == 9);
  // Point (u, v) = (1, 2) lies on the line v = u + 1 (a = 1, b = 1).
  CHECK(coset.f(1 * 3 + 2, 1 * 3 + 1) == 1);
  CHECK(coset.f(1 * 3 + 0, 1 * 3 + 1) == 0);
  // Each line holds exactly p points.
  for (int y = 0; y < 9; ++y) {
    int on_line = 0;
    for (int x = 0; x < 9; ++x) on_line += coset.f(x, y);
    CHECK(on_line == 3);
  }
  CHECK_THROWS_AS(coset_problem(4), LabError);
  CHECK_THROWS_AS(coset_problem(9), LabError);

  OneWayProblem promise = promise_problem(4);
  CHECK(!promise.total());
  CHECK(promise.f(0b1100, 0b1100) == 1);   // top half loaded, bottom empty
  CHECK(promise.f(0b0011, 0b0011) == 0);   // bottom half loaded, top empty
  CHECK(promise.f(0b1111, 0b1111) == -1);  // outside the promise
  CHECK(promise.bob_domain(0b1100).size() > 0);

  OneWayProblem subset =
      subset_problem(FiniteGroup::cyclic(5), {0, 1});
  CHECK(subset.f(0, 0) == 1);
  CHECK(subset.f(2, 3) == 1);  // 2 + 3 = 0 in z5
  CHECK(subset.f(2, 2) == 0);  // 4 is not in {0, 1}

  OneWayProblem bit = send_bit_problem();
  CHECK(bit.alice_size == 2);
  CHECK(bit.bob_size == 1);
  CHECK(bit.f(1, 0) == 1);
}

TEST_CASE("problem ids round-trip through the parser") {
  CHECK(parse_problem("eq:3").id == "eq:3");
  CHECK(parse_problem("coset:5").id == "coset:5");
  CHECK(parse_problem("promise:4").id == "promise:4");
  CHECK(parse_problem("subset:z5:0,1").id == "subset:z5:0,1");
  CHECK(parse_problem("sendbit").id == "sendbit");
  CHECK_THROWS_AS(parse_problem("parity:3"), LabError);
  CHECK_THROWS_AS(parse_problem("eq"), LabError);
}

TEST_CASE("exact protocols decide every defined pair perfectly") {
  SUBCASE("basis equality") {
    ProtocolEvaluation ev =
        evaluate_protocol(basis_equality_protocol(2), true);
    CHECK(ev.worst_error <= 1e-12);
    CHECK(ev.per_pair.size() == 16);
  }
  SUBCASE("coset basis") {
    ProtocolEvaluation ev = evaluate_protocol(coset_basis_protocol(3));
    CHECK(ev.worst_error <= 1e-12);
  }
  SUBCASE("promise clause") {
    ProtocolEvaluation ev = evaluate_protocol(promise_clause_protocol(4), true);
    CHECK(ev.worst_error <= 1e-12);
    // Only pairs inside the promise are scored.
    for (const PairError& pe : ev.per_pair)
      CHECK(promise_problem(4).f(pe.x, pe.y) >= 0);
  }
}

TEST_CASE("rotated equality has worst error sin^2(theta) on one qubit") {
  double theta = 0.3;
  ProtocolEvaluation ev =
      evaluate_protocol(rotated_equality_protocol(1, theta), true);
  double s2 = std::sin(theta) * std::sin(theta);
  CHECK(ev.worst_error == doctest::Approx(s2).epsilon(1e-9));

  // theta = 0 recovers the exact protocol.
  CHECK(evaluate_protocol(rotated_equality_protocol(2, 0.0)).worst_error <=
        1e-12);
}

TEST_CASE("biased bit protocol errs with the stated probability") {
  ProtocolEvaluation ev = evaluate_protocol(biased_bit_protocol(0.3), true);
  CHECK(ev.worst_error == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(ev.per_pair.size() == 2);
  for (const PairError& pe : ev.per_pair)
    CHECK(pe.error == doctest::Approx(0.3).epsilon(1e-9));
  CHECK_THROWS_AS(biased_bit_protocol(0.75), LabError);
}

TEST_CASE("majority_error matches the binomial tail") {
  CHECK(majority_error(0.3, 1) == doctest::Approx(0.3).epsilon(1e-12));
  // P[>= 2 of 3 fail at 0.3] = 3 * 0.09 * 0.7 + 0.027 = 0.216.
  CHECK(majority_error(0.3, 3) == doctest::Approx(0.216).epsilon(1e-12));
  // P[>= 3 of 5 fail at 1/3] = (10*4 + 5*2 + 1) / 243 = 51/243.
  CHECK(majority_error(1.0 / 3.0, 5) ==
        doctest::Approx(51.0 / 243.0).epsilon(1e-12));
  // Strictly decreasing in r below one half.
  CHECK(majority_error(0.3, 5) < majority_error(0.3, 3));
  CHECK(majority_error(0.3, 3) < 0.3);
  CHECK_THROWS_AS(majority_error(0.3, 2), LabError);  // even r
}

TEST_CASE("boosting repeats the message and takes a majority vote") {
  QuantumOneWayProtocol base = biased_bit_protocol(0.3);

  QuantumOneWayProtocol b3 = boost_protocol(base, 3);
  CHECK(b3.message_qubits == 3);
  ProtocolEvaluation ev3 = evaluate_protocol(b3);
  CHECK(ev3.worst_error == doctest::Approx(0.216).epsilon(1e-8));

  QuantumOneWayProtocol b5 = boost_protocol(biased_bit_protocol(1.0 / 3.0), 5);
  ProtocolEvaluation ev5 = evaluate_protocol(b5);
  CHECK(ev5.worst_error == doctest::Approx(51.0 / 243.0).epsilon(1e-8));

  // r = 1 is the identity transformation up to evaluation.
  QuantumOneWayProtocol b1 = boost_protocol(base, 1);
  CHECK(evaluate_protocol(b1).worst_error ==
        doctest::Approx(0.3).epsilon(1e-9));

  // Boosting an exact protocol stays exact.
  QuantumOneWayProtocol eq3 = boost_protocol(basis_equality_protocol(1), 3);
  CHECK(evaluate_protocol(eq3).worst_error <= 1e-9);

  CHECK_THROWS_AS(boost_protocol(base, 0), LabError);
  CHECK_THROWS_AS(boost_protocol(base, 4), LabError);  // even r
}

TEST_CASE("bound reports cover low-error protocols only") {
  QuantumOneWayProtocol p = basis_equality_protocol(2);
  ProtocolEvaluation ev = evaluate_protocol(p);
  auto rep = protocol_bound_report(p, ev);
  REQUIRE(rep.has_value());
  CHECK(rep->measure == "Q12");
  CHECK(rep->kind == "upper");
  CHECK(rep->value == doctest::Approx(2.0));
  CHECK(rep->problem == "eq:2");

  ProtocolEvaluation bad;
  bad.worst_error = 0.45;
  CHECK(!protocol_bound_report(p, bad).has_value());
}

TEST_CASE("primality test agrees with known values") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64((uint64_t(1) << 61) - 1));  // Mersenne prime
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest prime below 2^64
  CHECK(!is_prime_u64(0));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(561));   // Carmichael number
  CHECK(!is_prime_u64(6601));  // Carmichael number
  CHECK(!is_prime_u64(18446744073709551615ULL));
}

TEST_CASE("equality fingerprints are one-sided and meet their bound") {
  FingerprintProtocol fp = equality_fingerprint(8, 0.01);
  CHECK(fp.mode == "eq");
  CHECK(fp.error_bound <= 0.01);
  CHECK(fp.message_bits > 0);
  CHECK(fp.message_bits <= 64);
  REQUIRE(!fp.primes.empty());
  for (uint64_t p : fp.primes) {
    CHECK(is_prime_u64(p));
    CHECK(p >= fp.prime_lo);
    CHECK(p < fp.prime_hi);
  }

  // Equal inputs always agree, for every prime.
  for (uint64_t p : fp.primes)
    for (uint64_t x : {uint64_t(0), uint64_t(37), uint64_t(255)})
      CHECK(fp.decide(p, x % p, static_cast<int>(x)));

  // Unequal inputs collide within the stated bound, Monte Carlo check.
  Rng rng = Rng::stream(21, 0);
  int collisions = 0;
  int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    uint64_t x = rng.below(256);
    uint64_t y = rng.below(256);
    if (x == y) y = (y + 1) % 256;
    auto [p, residue] = fp.sample_message(x, rng);
    if (fp.decide(p, residue, static_cast<int>(y))) collisions++;
  }
  double rate = static_cast<double>(collisions) / trials;
  double se = std::sqrt(fp.error_bound * (1.0 - fp.error_bound) /
                        static_cast<double>(trials));
  CHECK(rate <= fp.error_bound + 4.0 * se + 1e-9);

  BoundReport rep = fp.bound_report("eq:8");
  CHECK(rep.measure == "R12");
  CHECK(rep.kind == "upper");
  CHECK(rep.value == doctest::Approx(fp.message_bits));
}

TEST_CASE("subset fingerprints accept members with certainty") {
  FiniteGroup g = FiniteGroup::cyclic(12);
  FingerprintProtocol fp = subset_fingerprint(g, {0, 4, 8});
  CHECK(fp.mode == "subset");
  CHECK(fp.error_bound == 0.0);

  OneWayProblem prob = subset_problem(g, {0, 4, 8});
  Rng rng = Rng::stream(22, 0);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) {
      if (prob.f(x, y) != 1) continue;
      auto [p, residue] = fp.sample_message(static_cast<uint64_t>(x), rng);
      CHECK(fp.decide(p, residue, y));
    }
}

TEST_CASE("membership advice is perfect inside and a coin flip outside") {
  FiniteGroup g = FiniteGroup::parse("z2^3");
  for (const Subgroup& h : all_subgroups(g)) {
    for (int x = 0; x < g.order(); ++x) {
      double p = membership_advice_probability(g, h, x);
      if (h.contains(x))
        CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
      else
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("truth-table advice boosts a coin by exactly 2^-(n+1)") {
  SUBCASE("one variable") {
    std::vector<int> t = {0, 1};
    CHECK(truth_table_advice_probability(t, 0) == 0.75);
    CHECK(truth_table_advice_probability(t, 1) == 0.75);
  }
  SUBCASE("two variables") {
    std::vector<int> t = {1, 0, 0, 1};
    for (int x = 0; x < 4; ++x)
      CHECK(truth_table_advice_probability(t, x) == 0.625);
  }
  SUBCASE("independent of the table contents") {
    std::vector<int> ones(8, 1);
    std::vector<int> mixed = {0, 1, 1, 0, 1, 0, 0, 1};
    CHECK(truth_table_advice_probability(ones, 5) == 0.5 + 1.0 / 16.0);
    CHECK(truth_table_advice_probability(mixed, 5) == 0.5 + 1.0 / 16.0);
  }
  CHECK_THROWS_AS(truth_table_advice_probability({0, 1, 1}, 0), LabError);
  CHECK_THROWS_AS(truth_table_advice_probability({0, 2}, 0), LabError);
}

TEST_CASE("matrix diagnostics on equality match hand counts") {
  MatrixDiagnostics d = matrix_diagnostics(equality_problem(2));
  CHECK(d.rows == 4);
  CHECK(d.cols == 4);
  CHECK(d.distinct_rows == 4);
  CHECK(d.distinct_cols == 4);
  CHECK(d.d1 == 2);
  // The identity matrix shatters single columns but no pair.
  CHECK(d.vc == 1);
  CHECK(d.sauer_bound == doctest::Approx(5.0));  // C(4,0) + C(4,1)
  CHECK(d.sauer_holds);
  CHECK(!d.reports.empty());
}

TEST_CASE("matrix diagnostics on the coset problem find vc = 2") {
  MatrixDiagnostics d = matrix_diagnostics(coset_problem(3));
  CHECK(d.rows == 9);
  CHECK(d.distinct_rows == 9);
  CHECK(d.d1 == 4);
  // Two lines shatter (meet, differ, miss); three never do, because two
  // distinct lines share at most one point.
  CHECK(d.vc == 2);
  CHECK(d.sauer_holds);

  // Partial problems are rejected.
  CHECK_THROWS_AS(matrix_diagnostics(promise_problem(4)), LabError);
}
