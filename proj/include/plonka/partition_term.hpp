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

#ifndef PLONKA_PARTITION_TERM_HPP_
#define PLONKA_PARTITION_TERM_HPP_

#include <string>
#include <vector>

#include "plonka/kernel.hpp"

namespace plonka {

// A binary term x·y in which both x and y occur.
class PartitionTerm {
 public:
  // Throws ValidationError unless vars_of(term) is exactly {x, y}.
  PartitionTerm(Term term, Symbol x, Symbol y);
  // Uses the variables named "x" and "y".
  explicit PartitionTerm(Term term);

  // x ∧ (x ∨ y) over and/or.
  static PartitionTerm lattice();

  Term const& term() const noexcept { return term_; }
  Symbol x() const noexcept { return x_; }
  Symbol y() const noexcept { return y_; }

  // a·b, by simultaneous substitution.
  Term apply(Term const& a, Term const& b) const;

 private:
  Term term_;
  Symbol x_;
  Symbol y_;
};

// One defining equation of a partition function, instantiated at a term.
// `family` is P1..P5; P4 and P5 produce one instance per operation, named
// "P4.op" and "P5.op".
struct PartitionEquation {
  std::string family;
  std::string name;
  Term lhs;
  Term rhs;
};

// P1 a·a = a; P2 a·(b·c) = (a·b)·c; P3 a·(b·c) = a·(c·b);
// P4 g(a1..an)·b = g(a1·b, .., an·b); P5 b·g(a1..an) = (..(b·a1)·..)·an.
// Throws ValidationError when the term uses operations outside `sig`.
std::vector<PartitionEquation> partition_equations(Signature const& sig, PartitionTerm const& t);

}  // namespace plonka

#endif  // PLONKA_PARTITION_TERM_HPP_
