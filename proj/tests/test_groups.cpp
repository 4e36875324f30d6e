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

#include <algorithm>
#include <set>

#include "qowlab/groups.hpp"

using namespace qowlab;

TEST_CASE("group specs parse to the expected orders and names") {
  CHECK(FiniteGroup::parse("z5").order() == 5);
  CHECK(FiniteGroup::parse("z3^2").order() == 9);
  CHECK(FiniteGroup::parse("z2 x z3^2").order() == 18);
  CHECK(FiniteGroup::parse("z4xz2").order() == 8);
  CHECK(FiniteGroup::parse("Z12").order() == 12);

  CHECK(FiniteGroup::cyclic(7).name() == "z7");
  std::vector<int> f = FiniteGroup::parse("z2x z3^2").factors();
  CHECK(f == std::vector<int>{2, 3, 3});

  CHECK_THROWS_AS(FiniteGroup::parse(""), LabError);
  CHECK_THROWS_AS(FiniteGroup::parse("q8"), LabError);
  CHECK_THROWS_AS(FiniteGroup::parse("z0"), LabError);
  CHECK_THROWS_AS(FiniteGroup::parse("z2^13"), LabError);  // above 4096
}

TEST_CASE("group axioms hold on parsed groups") {
  CHECK(FiniteGroup::parse("z12").verify_axioms());
  CHECK(FiniteGroup::parse("z2^4").verify_axioms());
  CHECK(FiniteGroup::parse("z5 x z7").verify_axioms());
}

TEST_CASE("mixed-radix arithmetic matches componentwise addition") {
  FiniteGroup g = FiniteGroup::parse("z3 x z4");
  // Element index = a * 4 + b for (a, b) in z3 x z4.
  int x = 1 * 4 + 2;
  int y = 2 * 4 + 3;
  int expect = ((1 + 2) % 3) * 4 + (2 + 3) % 4;
  CHECK(g.op(x, y) == expect);
  CHECK(g.op(x, g.inverse(x)) == g.identity());
  for (int a = 0; a < g.order(); ++a)
    CHECK(g.op(g.identity(), a) == a);
}

TEST_CASE("element orders and order statistics") {
  FiniteGroup z12 = FiniteGroup::cyclic(12);
  CHECK(z12.element_order(0) == 1);
  CHECK(z12.element_order(1) == 12);
  CHECK(z12.element_order(6) == 2);
  CHECK(z12.element_order(4) == 3);

  OrderStats s = order_stats(z12);
  CHECK(s.order2_count == 1);
  CHECK(s.max_order == 12);

  OrderStats cube = order_stats(FiniteGroup::parse("z2^3"));
  CHECK(cube.order2_count == 7);
  CHECK(cube.max_order == 2);
}

TEST_CASE("subgroups validate closure and support membership") {
  FiniteGroup z12 = FiniteGroup::cyclic(12);
  Subgroup h(z12, {0, 4, 8});
  CHECK(h.order() == 3);
  CHECK(h.contains(8));
  CHECK(!h.contains(2));

  CHECK_THROWS_AS(Subgroup(z12, {0, 4}), LabError);    // not closed
  CHECK_THROWS_AS(Subgroup(z12, {4, 8}), LabError);    // missing identity
  CHECK_THROWS_AS(Subgroup(z12, {0, 12}), LabError);   // out of range

  // Duplicates are collapsed before validation.
  CHECK(Subgroup(z12, {0, 4, 8, 8}).order() == 3);

  FiniteGroup z5 = FiniteGroup::cyclic(5);
  CHECK_THROWS_AS(Subgroup(z5, {0, 2, 3}), LabError);
}

TEST_CASE("generated subgroups close over their generators") {
  FiniteGroup g = FiniteGroup::parse("z4 x z2");
  Subgroup h = Subgroup::generated(g, {2 * 2 + 1});  // (2, 1)
  CHECK(h.order() == 2);

  Subgroup whole = Subgroup::generated(g, {1 * 2 + 0, 0 * 2 + 1});
  CHECK(whole.order() == 8);

  Subgroup trivial = Subgroup::generated(g, {});
  CHECK(trivial.order() == 1);
}

TEST_CASE("left cosets partition the group into equal blocks") {
  FiniteGroup z12 = FiniteGroup::cyclic(12);
  Subgroup h(z12, {0, 4, 8});
  auto cosets = left_cosets(z12, h);
  CHECK(cosets.size() == 4);

  std::set<int> seen;
  for (const auto& c : cosets) {
    CHECK(c.size() == 3);
    for (int x : c) seen.insert(x);
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("periodicity counts distinct translates") {
  FiniteGroup z12 = FiniteGroup::cyclic(12);
  // A subgroup has one translate per coset.
  CHECK(periodicity(z12, {0, 4, 8}) == 4);
  CHECK(periodicity(z12, std::vector<int>{0}) == 12);

  FiniteGroup z5 = FiniteGroup::cyclic(5);
  // {0,1} has trivial stabilizer in z5, so all 5 translates differ.
  CHECK(periodicity(z5, {0, 1}) == 5);

  // The whole group is invariant under every translation.
  std::vector<int> all(5);
  for (int i = 0; i < 5; ++i) all[i] = i;
  CHECK(periodicity(z5, all) == 1);

  CHECK_THROWS_AS(periodicity(z5, std::vector<int>{}), LabError);
}

TEST_CASE("subgroup enumeration matches hand counts") {
  // z2^3 has 16 subgroups: 1 trivial, 7 of order 2, 7 of order 4, itself.
  auto cube = all_subgroups(FiniteGroup::parse("z2^3"));
  CHECK(cube.size() == 16);
  int by_order[9] = {0};
  for (const auto& h : cube) by_order[h.order()]++;
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 7);
  CHECK(by_order[4] == 7);
  CHECK(by_order[8] == 1);

  // z4 x z2 has 8 subgroups.
  auto z4z2 = all_subgroups(FiniteGroup::parse("z4 x z2"));
  CHECK(z4z2.size() == 8);

  // Cyclic groups have one subgroup per divisor.
  auto z12 = all_subgroups(FiniteGroup::cyclic(12));
  CHECK(z12.size() == 6);

  CHECK_THROWS_AS(all_subgroups(FiniteGroup::parse("z17")), LabError);
}
