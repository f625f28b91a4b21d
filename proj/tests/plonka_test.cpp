// Copyright 2026 The Plonka Workbench Authors. All Rights Reserved.
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
// =============================================================================

#include "doctest.h"
#include "plonka/fixtures.hpp"
#include "plonka/generators.hpp"
#include "plonka/plonka.hpp"

using namespace plonka;

namespace {

// B2 over and/or as the two-element lattice.
LogicalMatrix l2() { return fixtures::b2_matrix(lattice_signature()); }

DirectedSystemOfMatrices trivial_below_l2() {
  DirectedSystemOfMatrices x;
  x.index = JoinSemilattice::chain(2);
  x.components = {trivial_matrix(lattice_signature()), l2()};
  x.homs = {{{0}, {1}}, {{}, {0, 1}}};
  return x;
}

}  // namespace

TEST_SUITE("plonka") {

TEST_CASE("join tables are validated") {
  CHECK_NOTHROW(JoinSemilattice(2, {0, 1, 1, 1}));
  CHECK_THROWS_AS(JoinSemilattice(2, {0, 1, 0, 1}), ValidationError);
  CHECK_THROWS_AS(JoinSemilattice(2, {1, 1, 1, 1}), ValidationError);
  JoinSemilattice c = JoinSemilattice::chain(3);
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.leq(2, 1));
  CHECK(c.join(0, 1) == 1);
}

TEST_CASE("the sum of B2 below the trivial algebra is weak Kleene") {
  PlonkaSum s = plonka_sum(one_lift(fixtures::b2_matrix()));
  LogicalMatrix w = fixtures::wk3_matrix();
  CHECK(s.matrix.algebra == w.algebra);
  CHECK(s.matrix.designated == w.designated);
  CHECK(s.tag == Tagging{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("sums follow the definition on random chain systems") {
  Rng rng(99);
  for (int round = 0; round < 15; ++round) {
    DirectedSystemOfMatrices x = random_chain_system(rng, 4, 3);
    REQUIRE(validate_system(x).ok);
    PlonkaSum s = plonka_sum(x);
    int and_ = s.matrix.algebra.op_index(Symbol::intern("and"));
    // a ∧ b is computed in the component of the joined index.
    for (Element a = 0; a < s.matrix.size(); ++a) {
      for (Element b = 0; b < s.matrix.size(); ++b) {
        auto [i, la] = s.tag[a];
        auto [j, lb] = s.tag[b];
        std::size_t k = x.index.join(i, j);
        Element fa = x.homs[i][k][la], fb = x.homs[j][k][lb];
        Element local = x.components[k].algebra.apply(
            x.components[k].algebra.op_index(Symbol::intern("and")), {fa, fb});
        auto [ki, kl] = s.tag[s.matrix.algebra.apply(and_, {a, b})];
        CHECK(ki == k);
        CHECK(kl == local);
      }
      auto [i, la] = s.tag[a];
      CHECK(s.matrix.designates(a) == x.components[i].designates(la));
    }
  }
}

TEST_CASE("system validation reports violations") {
  DirectedSystemOfMatrices ok = one_lift(fixtures::b2_matrix());
  CHECK(validate_system(ok).ok);

  DirectedSystemOfMatrices bad_filter = trivial_below_l2();
  bad_filter.homs[0][1] = {0};  // the designated t goes to 0
  SystemReport r = validate_system(bad_filter);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());
  CHECK_THROWS_AS(plonka_sum(bad_filter), ValidationError);

  DirectedSystemOfMatrices not_hom = one_lift(fixtures::b2_matrix());
  not_hom.homs[0][0] = {1, 1};
  CHECK_FALSE(validate_system(not_hom).ok);

  DirectedSystemOfMatrices ragged = one_lift(fixtures::b2_matrix());
  ragged.homs.pop_back();
  CHECK_FALSE(validate_system(ragged).ok);
}

TEST_CASE("decomposition of weak Kleene") {
  Decomposition d = decompose(fixtures::wk3_matrix(), PartitionTerm::lattice());
  REQUIRE(d.system.index.size() == 2);
  CHECK(d.system.index.leq(0, 1));
  CHECK(d.system.components[0].algebra == fixtures::b2());
  CHECK(d.system.components[1].is_trivial());
  CHECK(d.tag == Tagging{{0, 0}, {0, 1}, {1, 0}});
  CHECK(isomorphic(d.system, one_lift(fixtures::b2_matrix())));
}

TEST_CASE("decomposition inverts the sum") {
  Rng rng(123);
  for (int round = 0; round < 15; ++round) {
    DirectedSystemOfMatrices x = random_chain_system(rng, 4, 3);
    PlonkaSum s = plonka_sum(x);
    Decomposition d = decompose(s.matrix, PartitionTerm::lattice());
    CHECK(isomorphic(d.system, x));
    PlonkaSum again = plonka_sum(d.system);
    CHECK(isomorphic(again.matrix, s.matrix));
  }
}

TEST_CASE("partition identity failures are concrete") {
  Signature s{{"and", 2}, {"or", 2}};
  Rng rng(5);
  std::size_t failures = 0;
  for (int round = 0; round < 30; ++round) {
    FiniteAlgebra a = random_algebra(s, 3, rng);
    IdentityCheck c = verify_partition_identities(a, PartitionTerm::lattice());
    if (c.ok) continue;
    ++failures;
    REQUIRE(c.failure);
    CHECK(c.failure->lhs != c.failure->rhs);
    CHECK(c.failure->variables.size() == c.failure->tuple.size());
    CHECK_THROWS_AS(decompose(LogicalMatrix(a, Subset(3)), PartitionTerm::lattice()),
                    DecompositionError);
  }
  CHECK(failures > 0);
  CHECK(verify_partition_identities(fixtures::wk3_matrix().algebra, PartitionTerm::lattice()).ok);
}

TEST_CASE("upset filters of the chain system") {
  DirectedSystemOfMatrices x = fixtures::chain_bool4_system();
  CHECK(elements_of(upset_filter(x, {1})) == std::vector<Element>{1, 2, 3, 4, 5, 6});
  CHECK(elements_of(upset_filter(x, {0, 1})).size() == 7);
  CHECK(elements_of(upset_filter(x, {})) == std::vector<Element>{1, 2, 4, 5, 6});
  CHECK_THROWS_AS(upset_filter(x, {0}), ValidationError);
}

TEST_CASE("trivial components and the reduction condition") {
  DirectedSystemOfMatrices two = fixtures::two_trivials_system();
  CHECK(trivial_component_count(two) == 2);
  CHECK(suszko_reduced_condition(two).holds);
  ConditionReport r = suszko_reduced_condition(trivial_below_l2());
  CHECK_FALSE(r.holds);
  CHECK(r.violation == std::optional<std::pair<std::size_t, std::size_t>>({0, 1}));
  CHECK(suszko_reduced_condition(one_lift(fixtures::b2_matrix())).holds);
}

TEST_CASE("matrix isomorphism respects the designated set") {
  LogicalMatrix m = fixtures::b2xb2_matrix();
  CHECK(isomorphic(m, m));
  CHECK_FALSE(isomorphic(m, LogicalMatrix(m.algebra, make_subset(4, {1}))));
  CHECK(isomorphic(LogicalMatrix(m.algebra, make_subset(4, {1})),
                   LogicalMatrix(m.algebra, make_subset(4, {2}))));
}

TEST_CASE("companion presentations") {
  LogicPresentation lm = companion_of(fixtures::cl_matrices());
  REQUIRE(lm.is_matrices());
  REQUIRE(lm.matrices().matrices.size() == 1);
  CHECK(isomorphic(lm.matrices().matrices[0], fixtures::wk3_matrix()));
  LogicPresentation lh = companion_of(LogicPresentation::by_calculus(cl_calculus()));
  REQUIRE_FALSE(lh.is_matrices());
  CHECK(calculi_equivalent(lh.calculus().calculus, pwk_calculus()));
}

}  // TEST_SUITE
