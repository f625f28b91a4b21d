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

#include "plonka/partition_term.hpp"

namespace plonka {

PartitionTerm::PartitionTerm(Term term, Symbol x, Symbol y)
    : term_(std::move(term)), x_(x), y_(y) {
  if (x_ == y_) throw ValidationError("partition term needs two distinct variables");
  VarSet expected = x_ < y_ ? VarSet{x_, y_} : VarSet{y_, x_};
  if (term_.vars() != expected) {
    throw ValidationError("partition term '" + to_string(term_) + "' must contain exactly " +
                          x_.name() + " and " + y_.name());
  }
}

PartitionTerm::PartitionTerm(Term term)
    : PartitionTerm(std::move(term), Symbol::intern("x"), Symbol::intern("y")) {}

PartitionTerm PartitionTerm::lattice() {
  Term x = Term::variable("x");
  Term y = Term::variable("y");
  return PartitionTerm(Term::apply("and", {x, Term::apply("or", {x, y})}));
}

Term PartitionTerm::apply(Term const& a, Term const& b) const {
  return substitute(term_, Substitution{{x_, a}, {y_, b}});
}

std::vector<PartitionEquation> partition_equations(Signature const& sig, PartitionTerm const& t) {
  check_well_formed(t.term(), sig);
  Term x = Term::variable("x");
  Term y = Term::variable("y");
  Term z = Term::variable("z");
  auto dot = [&](Term const& a, Term const& b) { return t.apply(a, b); };

  std::vector<PartitionEquation> out;
  out.push_back({"P1", "P1", dot(x, x), x});
  out.push_back({"P2", "P2", dot(x, dot(y, z)), dot(dot(x, y), z)});
  out.push_back({"P3", "P3", dot(x, dot(y, z)), dot(x, dot(z, y))});
  for (auto const& op : sig.operations()) {
    std::vector<Term> args;
    for (int i = 1; i <= op.arity; ++i) args.push_back(Term::variable("x" + std::to_string(i)));
    Term g = Term::apply(op.name, args);
    std::vector<Term> shifted;
    for (auto const& a : args) shifted.push_back(dot(a, y));
    out.push_back({"P4", "P4." + op.name.name(), dot(g, y), Term::apply(op.name, shifted)});
  }
  for (auto const& op : sig.operations()) {
    std::vector<Term> args;
    for (int i = 1; i <= op.arity; ++i) args.push_back(Term::variable("x" + std::to_string(i)));
    Term folded = y;
    for (auto const& a : args) folded = dot(folded, a);
    out.push_back({"P5", "P5." + op.name.name(), dot(y, Term::apply(op.name, args)), folded});
  }
  return out;
}

}  // namespace plonka
