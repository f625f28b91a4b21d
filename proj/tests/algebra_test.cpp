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
#include <numeric>
#include <set>

#include "doctest.h"
#include "plonka/algebra.hpp"
#include "plonka/fixtures.hpp"
#include "plonka/generators.hpp"
#include "plonka/hilbert.hpp"

using namespace plonka;

namespace {

// Every set partition of {0..n-1} as canonical labels, by restricted growth
// strings.
std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      rgs[i] = b;
      go(i + 1, std::max(used, b + 1));
    }
  };
  if (n) go(0, 0);
  return out;
}

bool compatible(FiniteAlgebra const& a, std::vector<std::size_t> const& label) {
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    int ar = a.signature()[op].arity;
    std::vector<Element> x(ar), y(ar);
    bool bad = false;
    for_each_assignment(a.size(), 2 * ar, [&](std::span<Element const> v) {
      for (int i = 0; i < ar; ++i) {
        x[i] = v[2 * i];
        y[i] = v[2 * i + 1];
        if (label[x[i]] != label[y[i]]) return true;
      }
      if (label[a.apply(op, x)] != label[a.apply(op, y)]) bad = true;
      return !bad;
    });
    if (bad) return false;
  }
  return true;
}

std::set<std::vector<Element>> polynomials_by_closure(FiniteAlgebra const& a) {
  std::size_t n = a.size();
  std::set<std::vector<Element>> fs;
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), 0);
  fs.insert(id);
  for (Element c = 0; c < n; ++c) fs.insert(std::vector<Element>(n, c));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<Element>> cur(fs.begin(), fs.end());
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      std::size_t ar = a.signature()[op].arity;
      for_each_assignment(cur.size(), ar, [&](std::span<Element const> pick) {
        std::vector<Element> g(n);
        for (Element e = 0; e < n; ++e) {
          std::vector<Element> args(ar);
          for (std::size_t i = 0; i < ar; ++i) args[i] = cur[pick[i]][e];
          g[e] = a.apply(op, args);
        }
        grew |= fs.insert(g).second;
        return true;
      });
    }
  }
  return fs;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("two-element Boolean algebra tables") {
  FiniteAlgebra b = fixtures::b2();
  int and_ = b.op_index(Symbol::intern("and"));
  int or_ = b.op_index(Symbol::intern("or"));
  int not_ = b.op_index(Symbol::intern("not"));
  REQUIRE(and_ >= 0);
  CHECK(b.table(and_).values == std::vector<Element>{0, 0, 0, 1});
  CHECK(b.table(or_).values == std::vector<Element>{0, 1, 1, 1});
  CHECK(b.table(not_).values == std::vector<Element>{1, 0});
  CHECK(b.op_index(Symbol::intern("imp")) == -1);
}

TEST_CASE("tables must be total and in range") {
  Signature s{{"f", 1}};
  CHECK_THROWS_AS(FiniteAlgebra(s, 2, {OperationTable{1, {0}}}), ValidationError);
  CHECK_THROWS_AS(FiniteAlgebra(s, 2, {OperationTable{1, {0, 2}}}), ValidationError);
  CHECK_NOTHROW(FiniteAlgebra(s, 2, {OperationTable{1, {1, 0}}}));
}

TEST_CASE("evaluation under a valuation") {
  FiniteAlgebra b = fixtures::b2();
  Term t = parse_term("or(not(x), y)", boolean_signature());
  Symbol x = Symbol::intern("x"), y = Symbol::intern("y");
  CHECK(evaluate(b, t, Valuation{{x, 1}, {y, 0}}) == 0);
  CHECK(evaluate(b, t, Valuation{{x, 0}, {y, 0}}) == 1);
  CHECK_THROWS_AS(evaluate(b, t, Valuation{{x, 1}}), UnboundVariable);
  std::vector<Symbol> vars{x, y};
  std::vector<Element> vals{1, 1};
  CHECK(evaluate(b, t, vars, vals) == 1);
}

TEST_CASE("assignments run in lexicographic order") {
  std::vector<std::vector<Element>> seen;
  for_each_assignment(2, 2, [&](std::span<Element const> v) {
    seen.emplace_back(v.begin(), v.end());
    return true;
  });
  CHECK(seen == std::vector<std::vector<Element>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  std::size_t calls = 0;
  CHECK_FALSE(for_each_assignment(3, 2, [&](std::span<Element const>) { return ++calls < 4; }));
  CHECK(calls == 4);
}

TEST_CASE("direct products encode the first factor most significantly") {
  std::vector<FiniteAlgebra> f{fixtures::b2(), fixtures::b2()};
  FiniteAlgebra p = direct_product(f);
  CHECK(p.size() == 4);
  CHECK(product_coordinates(f, 2) == std::vector<Element>{1, 0});
  int and_ = p.op_index(Symbol::intern("and"));
  CHECK(p.apply(and_, {2, 3}) == 2);
  CHECK(p.apply(and_, {1, 2}) == 0);
}

TEST_CASE("subalgebras and generated subuniverses") {
  std::vector<FiniteAlgebra> f{fixtures::b2(), fixtures::b2()};
  FiniteAlgebra p = direct_product(f);
  std::vector<Element> one{1};
  CHECK(generated_subalgebra(p, one) == std::vector<Element>{0, 1, 2, 3});
  std::vector<Element> diag{3};
  CHECK(generated_subalgebra(p, diag) == std::vector<Element>{0, 3});
  FiniteAlgebra s = subalgebra(p, std::vector<Element>{0, 3});
  CHECK(s == fixtures::b2());
  CHECK_THROWS(generated_subalgebra(p, std::vector<Element>{}));
}

TEST_CASE("homomorphism checks") {
  FiniteAlgebra b = fixtures::b2();
  std::vector<FiniteAlgebra> f{b, b};
  FiniteAlgebra p = direct_product(f);
  std::vector<Element> first{0, 0, 1, 1};
  CHECK(is_homomorphism(p, b, first));
  std::vector<Element> bad{0, 1, 1, 1};
  CHECK_FALSE(is_homomorphism(p, b, bad));
  std::vector<Element> short_map{0};
  CHECK_THROWS_AS(is_homomorphism(p, b, short_map), ValidationError);
}

TEST_CASE("congruence enumeration agrees with brute-force partitions") {
  Signature s{{"f", 2}, {"g", 1}};
  Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    std::size_t n = 2 + rng.below(3);
    FiniteAlgebra a = random_algebra(s, n, rng);
    std::set<std::vector<Element>> expected;
    for (auto const& p : all_partitions(n)) {
      if (compatible(a, p)) expected.insert(congruence_from_labels(p).block_of);
    }
    std::set<std::vector<Element>> got;
    for (auto const& c : enumerate_congruences(a)) {
      CHECK(is_congruence(a, c));
      got.insert(c.block_of);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("lattice congruence counts") {
  CHECK(enumerate_congruences(fixtures::chain_lattice(3)).size() == 4);
  CHECK(enumerate_congruences(fixtures::chain_lattice(4)).size() == 8);
  CHECK(enumerate_congruences(fixtures::boolean_lattice4()).size() == 4);
  CHECK(enumerate_congruences(fixtures::b2()).size() == 2);
}

TEST_CASE("congruence operations") {
  std::vector<std::size_t> l1{0, 0, 1, 1}, l2{0, 1, 0, 1};
  Congruence a = congruence_from_labels(l1), b = congruence_from_labels(l2);
  CHECK(meet(a, b).is_identity());
  CHECK(refines(meet(a, b), a));
  CHECK_FALSE(refines(a, b));
  CHECK(a.block_count() == 2);
  CHECK(total_congruence(3).is_total());
  CHECK(identity_congruence(3).block_count() == 3);
  std::vector<std::size_t> l3{5, 2, 5};
  CHECK(congruence_from_labels(l3).block_of == std::vector<Element>{0, 1, 0});
}

TEST_CASE("quotients by product kernels") {
  std::vector<FiniteAlgebra> f{fixtures::b2(), fixtures::b2()};
  FiniteAlgebra p = direct_product(f);
  std::vector<std::size_t> kernel{0, 0, 1, 1};
  Quotient q = quotient(p, congruence_from_labels(kernel));
  CHECK(q.algebra.size() == 2);
  CHECK(is_homomorphism(q.projection));
  CHECK(!isomorphisms(q.algebra, fixtures::b2()).empty());
}

TEST_CASE("unary polynomials agree with pointwise closure") {
  Signature s{{"f", 2}};
  Rng rng(11);
  for (int round = 0; round < 30; ++round) {
    FiniteAlgebra a = random_algebra(s, 2 + rng.below(2), rng);
    auto ps = unary_polynomial_functions(a);
    std::set<std::vector<Element>> got(ps.begin(), ps.end());
    CHECK(got == polynomials_by_closure(a));
    CHECK(std::is_sorted(ps.begin(), ps.end()));
  }
  CHECK_THROWS_AS(unary_polynomial_functions(fixtures::chain_lattice(8)), BoundExceeded);
}

TEST_CASE("isomorphisms agree with brute-force permutations") {
  Signature s{{"f", 2}};
  Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    std::size_t n = 2 + rng.below(3);
    FiniteAlgebra a = random_algebra(s, n, rng);
    // b is a relabelled copy of a
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Element> values(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) values[perm[x] * n + perm[y]] = perm[a.apply(0, {x, y})];
    }
    FiniteAlgebra b(s, n, {OperationTable{2, values}});
    std::vector<std::vector<Element>> expected;
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_homomorphism(a, b, p)) expected.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(isomorphisms(a, b) == expected);
    CHECK(!expected.empty());
  }
  CHECK(isomorphisms(fixtures::boolean_lattice4(), fixtures::boolean_lattice4()).size() == 2);
  CHECK(isomorphisms(fixtures::chain_lattice(3), fixtures::chain_lattice(3)).size() == 1);
  CHECK(isomorphisms(fixtures::chain_lattice(3), fixtures::boolean_lattice4()).empty());
}

}  // TEST_SUITE
