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

#include <set>

#include "doctest.h"
#include "plonka/classifier.hpp"
#include "plonka/fixtures.hpp"
#include "plonka/plonka.hpp"

using namespace plonka;

namespace {

Signature const bsig = boolean_signature();

Term T(char const* text) { return parse_term(text, bsig); }

// Terms of depth <= d over v variables with one unary and two binary
// operations.
std::size_t term_count(std::size_t v, std::size_t d) {
  std::size_t n = v;
  for (std::size_t k = 0; k < d; ++k) n = v + n + 2 * n * n;
  return n;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("term enumeration counts and order") {
  VarSet xy = vars_of(T("and(x, y)"));
  for (std::size_t d = 0; d <= 2; ++d) {
    CHECK(enumerate_terms(bsig, xy, d).size() == term_count(2, d));
  }
  CHECK(enumerate_terms(bsig, xy, 2).size() == 302);
  std::vector<Term> ts = enumerate_terms(bsig, xy, 1);
  CHECK(ts[0] == T("x"));
  CHECK(ts[1] == T("y"));
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1].depth() <= ts[i].depth());
  std::set<std::string> distinct;
  for (auto const& t : enumerate_terms(bsig, xy, 2)) distinct.insert(to_string(t));
  CHECK(distinct.size() == 302);
}

TEST_CASE("implication witnesses protoalgebraicity of classical logic") {
  ProtoWitness w{{T("or(not(x), y)")}};
  CHECK(check_proto_witness(fixtures::cl_matrices(), w).verdict == Verdict::kTrue);
  // x, Δ ⊢ y is one modus ponens step; the theorem needs a longer proof than
  // the default search finds, so only a negative answer would be wrong.
  CHECK(check_proto_witness(LogicPresentation::by_calculus(cl_calculus()), w).verdict !=
        Verdict::kFalse);
  WitnessCheck pwk = check_proto_witness(fixtures::pwk_matrices(), w);
  CHECK(pwk.verdict == Verdict::kFalse);
  CHECK(pwk.counter_model.has_value());
  // The empty set fails x ⊢ y.
  CHECK(check_proto_witness(fixtures::cl_matrices(), ProtoWitness{}).verdict == Verdict::kFalse);
}

TEST_CASE("proto samples separate the base from its companion") {
  ProtoSampleBounds small{2, 1};
  ProtoSampleReport cl = proto_refutation_sample(fixtures::cl_matrices(), small);
  CHECK(cl.terms == 302);
  CHECK(cl.candidates == 303);
  CHECK_FALSE(cl.passing.empty());
  ProtoSampleReport pwk = proto_refutation_sample(fixtures::pwk_matrices(), small);
  CHECK(pwk.failures == pwk.candidates);
  CHECK(pwk.passing.empty());
}

TEST_CASE("the companion is truth-equational") {
  TruthWitness tau{{{T("x"), T("or(x, not(x))")}}};
  std::vector<LogicalMatrix> models{fixtures::wk3_matrix()};
  CHECK(check_truth_witness(fixtures::pwk_matrices(), tau, models).verdict == Verdict::kTrue);
  TruthWitness wrong{{{T("x"), T("and(x, not(x))")}}};
  CHECK(check_truth_witness(fixtures::pwk_matrices(), wrong, models).verdict == Verdict::kFalse);
  std::vector<LogicalMatrix> unreduced{
      LogicalMatrix(fixtures::boolean_lattice4(), make_subset(4, {1, 3}))};
  TruthWitness lat{{{Term::variable("x"), Term::variable("x")}}};
  CHECK_THROWS_AS(check_truth_witness(fixtures::cl_lattice_matrices(), lat, unreduced),
                  ValidationError);
}

TEST_CASE("equivalential witnesses") {
  ProtoWitness bi{{T("or(not(x), y)"), T("or(not(y), x)")}};
  std::vector<LogicalMatrix> models{fixtures::b2_matrix(), fixtures::b2xb2_matrix()};
  CHECK(check_equivalential_witness(fixtures::cl_matrices(), bi, models).verdict == Verdict::kTrue);
  ProtoWitness one{{T("or(not(x), y)")}};
  CHECK(check_equivalential_witness(fixtures::cl_matrices(), one, models).verdict ==
        Verdict::kFalse);
  std::vector<LogicalMatrix> wk{fixtures::wk3_matrix()};
  CHECK_THROWS_AS(check_equivalential_witness(fixtures::cl_matrices(), bi, wk), ValidationError);
}

TEST_CASE("inconsistency sets") {
  InconsistencySet s{{T("x"), T("not(x)")}};
  CHECK(check_inconsistency_set(fixtures::cl_matrices(), s).verdict == Verdict::kTrue);
  CHECK(check_inconsistency_set(fixtures::pwk_matrices(), s).verdict == Verdict::kFalse);
  CHECK(check_inconsistency_set(fixtures::cl_matrices(), InconsistencySet{{T("x")}}).verdict ==
        Verdict::kFalse);
  CHECK_THROWS_AS(check_inconsistency_set(fixtures::cl_matrices(), InconsistencySet{}),
                  ValidationError);
}

TEST_CASE("trivial submatrices rule out inconsistency terms") {
  RefuterResult cl = inconsistency_terms_refuter(fixtures::cl_matrices(), {fixtures::b2_matrix()});
  CHECK(cl.not_refuted);
  RefuterResult pwk =
      inconsistency_terms_refuter(fixtures::pwk_matrices(), {fixtures::wk3_matrix()});
  CHECK_FALSE(pwk.not_refuted);
  CHECK(pwk.model == std::optional<std::size_t>(0));
}

}  // TEST_SUITE
