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

#include <algorithm>

#include "doctest.h"
#include "plonka/classifier.hpp"
#include "plonka/fixtures.hpp"
#include "plonka/generators.hpp"
#include "plonka/matrixlogic.hpp"

using namespace plonka;

namespace {

Signature const bsig = boolean_signature();

Term T(char const* text) { return parse_term(text, bsig); }
std::vector<Term> Ts(char const* text) { return parse_term_list(text, bsig); }

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) out.emplace_back(n, mask);
  return out;
}

// Upsets of the order a <= b iff and(a, b) = a.
std::vector<Subset> upsets(FiniteAlgebra const& a) {
  int and_ = a.op_index(Symbol::intern("and"));
  std::vector<Subset> out;
  for (auto const& s : all_subsets(a.size())) {
    bool up = true;
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        if (s.test(x) && a.apply(and_, {x, y}) == x && !s.test(y)) up = false;
      }
    }
    if (up) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Γ ⊨ φ in <WK3, {1, n}> by the hard-coded weak Kleene tables.
bool wk3_entails(std::vector<Term> const& gamma, Term const& phi) {
  Element const n = 2;
  std::function<Element(Term const&, std::vector<Symbol> const&, std::vector<Element> const&)> ev =
      [&](Term const& t, std::vector<Symbol> const& vs, std::vector<Element> const& val) -> Element {
    if (t.is_variable()) {
      return val[std::find(vs.begin(), vs.end(), t.symbol()) - vs.begin()];
    }
    std::vector<Element> a;
    for (auto const& s : t.args()) a.push_back(ev(s, vs, val));
    std::string const& op = t.symbol().name();
    if (op == "not") return a[0] == n ? n : 1 - a[0];
    if (a[0] == n || a[1] == n) return n;
    return op == "and" ? (a[0] & a[1]) : (a[0] | a[1]);
  };
  std::vector<Term> all = gamma;
  all.push_back(phi);
  VarSet vs = vars_of(std::span<Term const>(all));
  bool ok = true;
  for_each_assignment(3, vs.size(), [&](std::span<Element const> v) {
    std::vector<Element> val(v.begin(), v.end());
    bool premises = std::all_of(gamma.begin(), gamma.end(),
                                [&](Term const& g) { return ev(g, vs, val) != 0; });
    if (premises && ev(phi, vs, val) == 0) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace

TEST_SUITE("matrixlogic") {

TEST_CASE("weak Kleene tables") {
  LogicalMatrix w = fixtures::wk3_matrix();
  FiniteAlgebra const& a = w.algebra;
  CHECK(a.table(a.op_index(Symbol::intern("and"))).values ==
        std::vector<Element>{0, 0, 2, 0, 1, 2, 2, 2, 2});
  CHECK(a.table(a.op_index(Symbol::intern("or"))).values ==
        std::vector<Element>{0, 1, 2, 1, 1, 2, 2, 2, 2});
  CHECK(a.table(a.op_index(Symbol::intern("not"))).values == std::vector<Element>{1, 0, 2});
  CHECK(elements_of(w.designated) == std::vector<Element>{1, 2});
}

TEST_CASE("subset helpers") {
  Subset s = make_subset(4, {1, 3});
  CHECK(elements_of(s) == std::vector<Element>{1, 3});
  CHECK(canonical_less(make_subset(4, {3}), make_subset(4, {0, 1})));
  CHECK(canonical_less(make_subset(4, {0, 3}), make_subset(4, {1, 2})));
  CHECK_THROWS_AS(LogicalMatrix(fixtures::b2(), Subset(3)), ValidationError);
}

TEST_CASE("classical entailment with counter-valuations") {
  MatrixPresentation cl{{fixtures::b2_matrix()}};
  CHECK(entails(cl, Ts("x, or(not(x), y)"), T("y")).holds);
  CHECK(entails(cl, {}, T("or(x, not(x))")).holds);
  EntailmentResult r = entails(cl, Ts("x"), T("y"));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness->valuation.get(Symbol::intern("x")) == 1);
  CHECK(*r.witness->valuation.get(Symbol::intern("y")) == 0);
  CHECK(entails(cl, Ts("x, not(x)"), T("y")).holds);
}

TEST_CASE("paraconsistent weak Kleene entailment") {
  MatrixPresentation pwk{{fixtures::wk3_matrix()}};
  CHECK_FALSE(entails(pwk, Ts("x, not(x)"), T("y")).holds);
  CHECK_FALSE(entails(pwk, Ts("x, or(not(x), y)"), T("y")).holds);
  CHECK(entails(pwk, Ts("x"), T("or(x, y)")).holds);
  CHECK(entails(pwk, {}, T("or(x, not(x))")).holds);
}

TEST_CASE("the largest admissible premise set") {
  std::vector<Term> d = delta_max(Ts("x, and(x, y), not(z), y"), T("or(x, y)"));
  CHECK(to_string(std::span<Term const>(d)) == to_string(std::span<Term const>(Ts("x, and(x, y), y"))));
  CHECK(delta_max(Ts("x, not(x)"), T("y")).empty());
}

TEST_CASE("companion of classical logic decides like weak Kleene") {
  LogicPresentation cl = fixtures::cl_matrices();
  std::vector<Term> pool = enumerate_terms(bsig, vars_of(T("and(x, y)")), 1);
  std::size_t checked = 0;
  for (auto const& g : pool) {
    for (auto const& phi : pool) {
      std::vector<Term> gamma{g, T("not(y)")};
      bool expected = wk3_entails(gamma, phi);
      CompanionResult c = companion_entails(cl, gamma, phi);
      CHECK((c.result.verdict == Verdict::kTrue) == expected);
      ++checked;
    }
  }
  CHECK(checked == pool.size() * pool.size());
  CompanionResult ex = companion_entails(cl, Ts("x, not(x)"), T("y"));
  CHECK(ex.result.verdict == Verdict::kFalse);
  CHECK(ex.delta.empty());
}

TEST_CASE("tabulated masks agree with direct entailment") {
  MatrixPresentation pwk{{fixtures::wk3_matrix()}};
  VarSet vs = vars_of(T("and(x, y)"));
  Tabulation tab(pwk, vs);
  auto mx = tab.masks(T("x")), my = tab.masks(T("or(x, y)")), mn = tab.masks(T("not(x)"));
  CHECK(((mx[0] & ~my[0]) & tab.full_mask(0)) == 0);
  CHECK(((mx[0] & mn[0] & ~tab.masks(T("y"))[0]) & tab.full_mask(0)) != 0);
  CHECK(tab.full_mask(0) == (std::uint64_t{1} << 9) - 1);
}

TEST_CASE("filters on the weak Kleene algebra") {
  FiniteAlgebra w = fixtures::wk3_matrix().algebra;
  FilterLattice pwk = enumerate_filters(w, fixtures::pwk_matrices());
  REQUIRE(pwk.filters.size() == 2);
  CHECK(elements_of(pwk.filters[0]) == std::vector<Element>{1, 2});
  CHECK(elements_of(pwk.filters[1]) == std::vector<Element>{0, 1, 2});
  FilterLattice cl = enumerate_filters(w, fixtures::cl_matrices());
  REQUIRE(cl.filters.size() == 1);
  CHECK(cl.filters[0].count() == 3);
  CHECK(enumerate_filters(fixtures::b2(), fixtures::cl_matrices()).filters.size() == 2);
}

TEST_CASE("filter engines agree on weak Kleene and the product") {
  LogicPresentation byh = LogicPresentation::by_calculus(cl_calculus());
  for (auto const& m : {fixtures::b2_matrix(), fixtures::b2xb2_matrix(), fixtures::wk3_matrix()}) {
    for (auto const& f : all_subsets(m.size())) {
      bool by_m = is_filter_by_matrices(m.algebra, f, fixtures::cl_matrices().matrices()).is_filter;
      bool by_c = is_filter_by_calculus(m.algebra, f, cl_calculus()).is_filter;
      CHECK(by_m == by_c);
      CHECK(is_filter(m.algebra, f, byh).is_filter == by_c);
    }
  }
  LogicPresentation pwkh = LogicPresentation::by_calculus(pwk_calculus());
  FiniteAlgebra w = fixtures::wk3_matrix().algebra;
  for (auto const& f : all_subsets(3)) {
    CHECK(is_filter(w, f, pwkh).is_filter == is_filter(w, f, fixtures::pwk_matrices()).is_filter);
  }
}

TEST_CASE("failed filter checks explain themselves") {
  FilterCheck c = is_filter(fixtures::b2(), make_subset(2, {0}), fixtures::cl_matrices());
  CHECK_FALSE(c.is_filter);
  CHECK_FALSE(c.reason.empty());
}

TEST_CASE("upset logic calculus has exactly the upsets as filters") {
  LogicPresentation dl = LogicPresentation::by_calculus(dl_upset_calculus());
  for (auto const& a : {fixtures::chain_lattice(2), fixtures::chain_lattice(3),
                        fixtures::boolean_lattice4()}) {
    FilterLattice fl = enumerate_filters(a, dl);
    CHECK(fl.filters == upsets(a));
  }
  CHECK(enumerate_filters(fixtures::boolean_lattice4(), dl).filters.size() == 6);
}

TEST_CASE("conjunction-disjunction calculus matches its matrix on random algebras") {
  Signature lsig = lattice_signature();
  Rng rng(2026);
  LogicPresentation byh = LogicPresentation::by_calculus(cl_lattice_calculus());
  MatrixPresentation const byms = fixtures::cl_lattice_matrices().matrices();
  for (int round = 0; round < 25; ++round) {
    FiniteAlgebra a = random_algebra(lsig, 2 + rng.below(2), rng);
    for (auto const& f : all_subsets(a.size())) {
      bool c = is_filter(a, f, byh).is_filter;
      bool m = is_filter_by_matrices(a, f, byms).is_filter;
      CHECK(c == m);
    }
  }
  // On lattices the filters are the lattice filters and the empty set.
  FilterLattice b4 = enumerate_filters(fixtures::boolean_lattice4(), byh);
  CHECK(b4.filters.size() == 5);
}

TEST_CASE("Leibniz congruence against the polynomial oracle") {
  Signature s{{"f", 2}, {"g", 1}};
  Rng rng(17);
  for (int round = 0; round < 60; ++round) {
    FiniteAlgebra a = random_algebra(s, round < 55 ? 2 + rng.below(2) : 4, rng);
    for (auto const& f : all_subsets(a.size())) {
      CHECK(leibniz(a, f) == leibniz_by_polynomials(a, f));
    }
  }
}

TEST_CASE("Leibniz congruences of the standard matrices") {
  CHECK(leibniz(fixtures::b2(), make_subset(2, {1})).is_identity());
  CHECK(leibniz(fixtures::b2(), make_subset(2, {0, 1})).is_total());
  LogicalMatrix w = fixtures::wk3_matrix();
  CHECK(leibniz(w.algebra, w.designated).is_identity());
  // {d, e, 1} on the four-element lattice identifies nothing; {1, d} collapses d with 1.
  FiniteAlgebra b4 = fixtures::boolean_lattice4();
  CHECK(leibniz(b4, make_subset(4, {1, 2, 3})).is_identity());
  Congruence up = leibniz(b4, make_subset(4, {1, 3}));
  CHECK(up.related(1, 3));
  CHECK(up.related(0, 2));
  CHECK(up.block_count() == 2);
}

TEST_CASE("Suszko congruence through both routes") {
  LogicalMatrix w = fixtures::wk3_matrix();
  for (auto const& f : enumerate_filters(w.algebra, fixtures::pwk_matrices()).filters) {
    Congruence a = suszko(w.algebra, f, fixtures::pwk_matrices());
    CHECK(a == suszko_by_generation(w.algebra, f, fixtures::pwk_matrices()));
    CHECK(refines(a, leibniz(w.algebra, f)));
  }
  FiniteAlgebra c3 = fixtures::chain_lattice(3);
  LogicPresentation dl = LogicPresentation::by_calculus(dl_upset_calculus());
  // {b, c} on a < b < c collapses b with c and keeps a apart.
  Subset bc = make_subset(3, {1, 2});
  Congruence s = suszko(c3, bc, dl);
  CHECK(s == suszko_by_generation(c3, bc, dl));
  CHECK(s.related(1, 2));
  CHECK_FALSE(s.related(0, 1));
  CHECK_THROWS_AS(suszko(fixtures::b2(), make_subset(2, {0}), fixtures::cl_matrices()), ValidationError);
}

TEST_CASE("protoalgebraic control: Suszko equals Leibniz for classical filters") {
  std::vector<FiniteAlgebra> f{fixtures::b2(), fixtures::b2()};
  FiniteAlgebra p = direct_product(f);
  for (auto const& g : enumerate_filters(p, fixtures::cl_matrices()).filters) {
    CHECK(suszko(p, g, fixtures::cl_matrices()) == leibniz(p, g));
  }
}

TEST_CASE("reduction and model checks") {
  FiniteAlgebra b4 = fixtures::boolean_lattice4();
  LogicalMatrix m(b4, make_subset(4, {1, 3}));
  LogicalMatrix r = reduce(m, leibniz(b4, m.designated));
  CHECK(r.size() == 2);
  CHECK(is_leibniz_reduced(r));
  CHECK_FALSE(is_leibniz_reduced(m));
  CHECK_THROWS_AS(reduce(m, total_congruence(4)), ValidationError);
  CHECK(is_model(fixtures::wk3_matrix(), fixtures::pwk_matrices()));
  CHECK_FALSE(is_model(fixtures::wk3_matrix(), fixtures::cl_matrices()));
  CHECK(is_suszko_reduced(fixtures::wk3_matrix(), fixtures::pwk_matrices()));
  CHECK_FALSE(is_suszko_reduced(fixtures::wk3_matrix(), fixtures::cl_matrices()));
}

TEST_CASE("trivial submatrices") {
  CHECK(has_trivial_submatrix(fixtures::wk3_matrix()));
  CHECK_FALSE(has_trivial_submatrix(fixtures::b2_matrix()));
  CHECK_FALSE(has_trivial_submatrix(fixtures::b2xb2_matrix()));
}

TEST_CASE("equations in the algebra reducts") {
  MatrixPresentation const pwk = fixtures::pwk_matrices().matrices();
  CHECK(check_equation_in_K(pwk, T("and(x, y)"), T("and(y, x)")).holds);
  EquationCheck e = check_equation_in_K(pwk, T("or(x, not(x))"), T("or(y, not(y))"));
  CHECK_FALSE(e.holds);
  CHECK(e.witness.has_value());
}

TEST_CASE("partition term checks") {
  PartitionTerm t = PartitionTerm::lattice();
  CHECK(partition_term_check(fixtures::cl_matrices(), t) == Verdict::kTrue);
  CHECK(partition_term_check(fixtures::pwk_matrices(), t) == Verdict::kTrue);
  PartitionTerm first(parse_term("and(x, y)", bsig));
  CHECK(partition_term_check(fixtures::cl_matrices(), first) == Verdict::kFalse);
}

TEST_CASE("bounds are enforced") {
  Limits tight;
  tight.max_subsets = 2;
  CHECK_THROWS_AS(enumerate_filters(fixtures::wk3_matrix().algebra, fixtures::pwk_matrices(), tight),
                  BoundExceeded);
}

}  // TEST_SUITE
