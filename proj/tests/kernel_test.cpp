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
#include "plonka/hilbert.hpp"
#include "plonka/kernel.hpp"

using namespace plonka;

namespace {

Signature const& sig() {
  static Signature s = boolean_signature();
  return s;
}

Term T(char const* text) { return parse_term(text, sig()); }

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("terms print in prefix form and parse back") {
  for (char const* text : {"x", "not(x)", "and(x, or(y, not(z)))", "or(or(x, x), and(y, x))"}) {
    Term t = T(text);
    CHECK(to_string(t) == text);
    CHECK(parse_term(to_string(t), sig()) == t);
  }
  CHECK(to_string(T("and( x ,or(y,x) )")) == "and(x, or(y, x))");
}

TEST_CASE("structural equality shares nothing but shape") {
  Term a = T("and(x, y)");
  Term b = Term::apply("and", {Term::variable("x"), Term::variable("y")});
  CHECK(a == b);
  CHECK_FALSE(a == T("and(y, x)"));
  CHECK(a.hash() == b.hash());
}

TEST_CASE("depth, size and variables") {
  Term t = T("and(x, or(y, not(x)))");
  CHECK(t.depth() == 3);
  CHECK(term_depth(t) == 3);
  CHECK(t.size() == 6);
  VarSet v = vars_of(t);
  REQUIRE(v.size() == 2);
  CHECK(var_subset(vars_of(T("x")), v));
  CHECK_FALSE(var_subset(vars_of(T("z")), v));
  CHECK(var_union(vars_of(T("z")), v).size() == 3);
  std::vector<Term> ts{T("x"), T("not(w)")};
  CHECK(vars_of(std::span<Term const>(ts)).size() == 2);
}

TEST_CASE("term lists split at top-level commas") {
  auto ts = parse_term_list("x, and(x, y), not(y)", sig());
  REQUIRE(ts.size() == 3);
  CHECK(to_string(ts[1]) == "and(x, y)");
  CHECK(parse_term_list("", sig()).empty());
}

TEST_CASE("parse errors carry the offending position") {
  auto position_of = [](char const* text) -> std::size_t {
    try {
      parse_term(text, sig());
    } catch (ParseError const& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("and(x") == 5);
  CHECK(position_of("foo(x)") == 0);
  CHECK(position_of("x y") == 2);
  CHECK(position_of("") == 0);
  CHECK_THROWS_AS(parse_term("not(x, y)", sig()), ParseError);
  CHECK_THROWS_AS(parse_term("and(x)", sig()), ParseError);
  try {
    parse_term("and(x", sig());
  } catch (ParseError const& e) {
    CHECK(e.message() == "expected ')'");
  }
}

TEST_CASE("well-formedness is relative to a signature") {
  Term t = T("not(x)");
  CHECK_NOTHROW(check_well_formed(t, sig()));
  CHECK_THROWS_AS(check_well_formed(t, lattice_signature()), ValidationError);
}

TEST_CASE("substitution is simultaneous") {
  Substitution s{{Symbol::intern("x"), T("y")}, {Symbol::intern("y"), T("x")}};
  CHECK(substitute(T("and(x, y)"), s) == T("and(y, x)"));
  Substitution first{{Symbol::intern("x"), T("not(y)")}};
  Substitution second{{Symbol::intern("y"), T("z")}};
  Term t = T("or(x, y)");
  CHECK(substitute(t, compose(first, second)) == substitute(substitute(t, first), second));
}

TEST_CASE("matching binds pattern variables consistently") {
  Substitution s;
  REQUIRE(match(T("and(p, q)"), T("and(x, or(x, y))"), s));
  CHECK(s.at(Symbol::intern("p")) == T("x"));
  CHECK(s.at(Symbol::intern("q")) == T("or(x, y)"));
  Substitution s2;
  CHECK_FALSE(match(T("and(p, p)"), T("and(x, y)"), s2));
  Substitution s3;
  CHECK(match(T("and(p, p)"), T("and(not(x), not(x))"), s3));
  Substitution s4;
  CHECK_FALSE(match(T("not(p)"), T("and(x, y)"), s4));
}

TEST_CASE("fresh variables avoid the given set") {
  VarSet avoid = vars_of(T("and(z, z1)"));
  Symbol f = fresh_variable(avoid);
  CHECK_FALSE(std::binary_search(avoid.begin(), avoid.end(), f));
  CHECK(f.name() == "z2");
}

TEST_CASE("plugging fills every hole occurrence") {
  Symbol hole = Symbol::intern("h");
  CHECK(plug(T("or(h, not(h))"), hole, T("and(x, y)")) == T("or(and(x, y), not(and(x, y)))"));
}

TEST_CASE("signature lookups") {
  Signature s{{"f", 2}, {"g", 1}};
  REQUIRE(s.find("g").has_value());
  CHECK(*s.find("g") == 1);
  CHECK_FALSE(s.contains(Symbol::intern("h")));
  CHECK(s[0].arity == 2);
  CHECK(boolean_signature() == boolean_signature());
  CHECK_FALSE(boolean_signature() == lattice_signature());
}

}  // TEST_SUITE
