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
#include "plonka/hilbert.hpp"
#include "plonka/matrixlogic.hpp"
#include "plonka/scenarios.hpp"
#include "plonka/workspace.hpp"

using namespace plonka;

namespace {

Signature const bsig = boolean_signature();

Term T(char const* text) { return parse_term(text, bsig); }

std::size_t parse_error_line(std::string const& text) {
  try {
    parse_certificate(text, bsig);
  } catch (ParseError const& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_SUITE("hilbert") {

TEST_CASE("hand-written certificates are checked step by step") {
  std::string const text =
      "calculus CL\n"
      "hyp x\n"
      "hyp or(not(x), y)\n"
      "step 1: x BY hyp\n"
      "step 2: or(not(x), y) BY hyp\n"
      "step 3: y BY rule MP sub {p=x, q=y} from 1,2\n";
  Derivation d = parse_certificate(text, bsig);
  CHECK(d.steps.size() == 3);
  CHECK(d.conclusion() == T("y"));
  CheckResult ok = check_derivation(cl_calculus(), d);
  CHECK(ok.ok);

  // Premises in the wrong order do not match the rule.
  Derivation swapped = parse_certificate(
      "hyp x\nhyp or(not(x), y)\nstep 1: x BY hyp\nstep 2: or(not(x), y) BY hyp\n"
      "step 3: y BY rule MP sub {p=x, q=y} from 2,1\n",
      bsig);
  CheckResult bad = check_derivation(cl_calculus(), swapped);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.failing_step);
  CHECK(*bad.failing_step == 2);
}

TEST_CASE("references must point backwards") {
  Derivation d = parse_certificate(
      "hyp x\nstep 1: x BY rule MP sub {p=x, q=x} from 1,1\n", bsig);
  CHECK_FALSE(check_derivation(cl_calculus(), d).ok);
  Derivation fwd = parse_certificate(
      "hyp x\nstep 1: x BY hyp\nstep 2: x BY rule MP sub {p=x, q=x} from 1,3\n", bsig);
  CheckResult r = check_derivation(cl_calculus(), fwd);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_step == std::optional<std::size_t>(1));
}

TEST_CASE("hypothesis steps must be hypotheses") {
  Derivation d = parse_certificate("hyp x\nstep 1: y BY hyp\n", bsig);
  CHECK_FALSE(check_derivation(cl_calculus(), d).ok);
}

TEST_CASE("unknown rules fail the check") {
  Derivation d = parse_certificate("step 1: x BY rule NOPE sub {}\n", bsig);
  CheckResult r = check_derivation(cl_calculus(), d);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_step == std::optional<std::size_t>(0));
}

TEST_CASE("scheme steps rewrite inside a context in both directions") {
  Calculus pwk = pwk_calculus();
  Derivation d = parse_certificate(
      "hyp or(x, y)\n"
      "step 1: or(x, y) BY hyp\n"
      "step 2: or(and(x, or(x, x)), y) BY scheme P1 rl ctx or(∘, y) from 1\n"
      "step 3: or(x, y) BY scheme P1 lr ctx or(∘, y) from 2\n",
      bsig);
  CHECK(check_derivation(pwk, d).ok);
  Derivation wrong = parse_certificate(
      "hyp or(x, y)\n"
      "step 1: or(x, y) BY hyp\n"
      "step 2: or(and(x, or(x, x)), y) BY scheme P1 lr ctx or(∘, y) from 1\n",
      bsig);
  CHECK_FALSE(check_derivation(pwk, wrong).ok);
}

TEST_CASE("certificate syntax errors report the line") {
  CHECK(parse_error_line("hyp x\nstep 2: x BY hyp\n") == 2);
  CHECK(parse_error_line("hyp x\nstep 1: x BY magic\n") == 2);
  CHECK(parse_error_line("\n\nstep 1: and(x BY hyp\n") == 3);
  CHECK(parse_error_line("hyp x\nstep 1: x BY hyp\nstep 2: x BY rule MP sub {p=x} from 0\n") == 3);
  CHECK(parse_error_line("garbage\n") == 1);
  CHECK(parse_error_line("# comment\nhyp x\nstep 1: x BY hyp\n") == 0);
}

TEST_CASE("proof search finds checked derivations") {
  ProofSearchResult r = bounded_prove(cl_calculus(), {T("x")}, T("or(x, y)"));
  REQUIRE(r.derivation);
  CHECK(check_derivation(cl_calculus(), *r.derivation).ok);
  CHECK(r.derivation->conclusion() == T("or(x, y)"));
  ProofSearchResult hyp = bounded_prove(cl_calculus(), {T("x")}, T("x"));
  REQUIRE(hyp.derivation);
  CHECK(hyp.derivation->steps.size() == 1);
}

TEST_CASE("proof search gives up honestly") {
  ProofLimits tiny;
  tiny.step_budget = 10;
  ProofSearchResult r = bounded_prove(cl_calculus(), {}, T("or(and(x, y), not(and(x, y)))"), tiny);
  CHECK_FALSE(r.derivation);
  // An invalid inference is never proved.
  ProofSearchResult bad = bounded_prove(cl_calculus(), {T("x")}, T("y"));
  CHECK_FALSE(bad.derivation);
}

TEST_CASE("certificates round-trip") {
  Calculus pwk = pwk_calculus();
  std::size_t proved = 0;
  for (auto const& [premises, goal] : curated_pwk_inferences()) {
    Workspace const& ws = *builtin_workspace();
    std::vector<Term> gamma;
    for (auto const& p : premises) gamma.push_back(ws.parse_term(p, bsig));
    ProofSearchResult r = bounded_prove(pwk, gamma, ws.parse_term(goal, bsig));
    if (!r.derivation) continue;
    ++proved;
    std::string text = serialize_certificate(pwk, *r.derivation);
    Derivation back = parse_certificate(text, bsig);
    CHECK(check_derivation(pwk, back).ok);
    CHECK(serialize_certificate(pwk, back) == text);
    break;
  }
  CHECK(proved == 1);
}

TEST_CASE("the transformation of classical logic is the weak Kleene calculus") {
  Calculus left = transform_left(cl_calculus(), PartitionTerm::lattice());
  CHECK(calculi_equivalent(left, pwk_calculus()));
  CHECK_FALSE(calculi_equivalent(cl_calculus(), pwk_calculus()));
}

TEST_CASE("every transformed rule is sound for the companion") {
  MatrixPresentation const wk3 = fixtures::pwk_matrices().matrices();
  Calculus left = transform_left(cl_calculus(), PartitionTerm::lattice());
  for (auto const& r : left.rules) {
    CAPTURE(r.name);
    CHECK(entails(wk3, r.premises, r.conclusion).holds);
  }
  for (auto const& s : left.schemes) {
    CAPTURE(s.name);
    CHECK(check_equation_in_K(wk3, s.lhs, s.rhs).holds);
  }
  // Modus ponens itself is not.
  Calculus const cl = cl_calculus();
  Rule const* mp = cl.find_rule("MP");
  REQUIRE(mp);
  CHECK_FALSE(entails(wk3, mp->premises, mp->conclusion).holds);
}

TEST_CASE("irregular schemes are rejected by the transformation") {
  Calculus h = cl_lattice_calculus();
  h.schemes.push_back({"bad", T("and(x, or(x, y))"), T("x")});
  CHECK_THROWS_AS(transform_left(h, PartitionTerm::lattice()), ValidationError);
}

TEST_CASE("calculus validation") {
  Calculus h = cl_calculus();
  h.rules.push_back(h.rules.front());
  CHECK_THROWS_AS(validate_calculus(h), ValidationError);
  Calculus ill = cl_lattice_calculus();
  ill.rules.push_back({"neg", {}, T("not(x)")});
  CHECK_THROWS_AS(validate_calculus(ill), ValidationError);
}

TEST_CASE("alpha equivalence") {
  Rule a{"a", {T("p")}, T("or(p, q)")};
  Rule b{"b", {T("x")}, T("or(x, y)")};
  Rule c{"c", {T("x")}, T("or(x, x)")};
  CHECK(alpha_equivalent(a, b));
  CHECK_FALSE(alpha_equivalent(a, c));
  ContextScheme s{"s", T("and(x, y)"), T("and(y, x)")};
  ContextScheme t{"t", T("and(u, v)"), T("and(v, u)")};
  CHECK(alpha_equivalent(s, t));
  CHECK(s.is_regular());
  CHECK_FALSE(ContextScheme({"i", T("and(x, or(x, y))"), T("x")}).is_regular());
}

}  // TEST_SUITE
