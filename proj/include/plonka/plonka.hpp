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

// Directed systems of matrices over finite join-semilattices and their sums.

#ifndef PLONKA_PLONKA_HPP_
#define PLONKA_PLONKA_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plonka/matrixlogic.hpp"
#include "plonka/partition_term.hpp"

namespace plonka {

class JoinSemilattice {
 public:
  JoinSemilattice() = default;
  // Throws ValidationError unless the table is idempotent, commutative and
  // associative.
  JoinSemilattice(std::size_t size, std::vector<std::size_t> join);

  static JoinSemilattice chain(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size_ + j]; }
  bool leq(std::size_t i, std::size_t j) const { return join(i, j) == j; }
  std::vector<std::size_t> const& table() const noexcept { return join_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::size_t> join_;
};

struct DirectedSystemOfMatrices {
  JoinSemilattice index;
  std::vector<LogicalMatrix> components;
  // homs[i][j] is the map A_i -> A_j when i <= j, empty otherwise.
  std::vector<std::vector<std::vector<Element>>> homs;
};

struct SystemReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Shape, shared signature, homomorphisms, identities on the diagonal,
// composition and filter preservation, all checked exhaustively.
SystemReport validate_system(DirectedSystemOfMatrices const& x);

// Global element -> (index, local element).
using Tagging = std::vector<std::pair<std::size_t, Element>>;

struct PlonkaSum {
  LogicalMatrix matrix;
  Tagging tag;  // components in index order, local elements in order
};

// Throws ValidationError when validate_system fails.
PlonkaSum plonka_sum(DirectedSystemOfMatrices const& x);

// One-element algebra over `sig` with its full filter.
LogicalMatrix trivial_matrix(Signature const& sig);
// m below the one-element trivial matrix.
DirectedSystemOfMatrices one_lift(LogicalMatrix const& m);

struct IdentityFailure {
  std::string identity;          // P1..P5, with the operation for P4/P5
  std::vector<Symbol> variables;
  std::vector<Element> tuple;    // values of `variables`
  Element lhs = 0;
  Element rhs = 0;
};

struct IdentityCheck {
  bool ok = true;
  std::optional<IdentityFailure> failure;  // lexicographically least
};

IdentityCheck verify_partition_identities(FiniteAlgebra const& a, PartitionTerm const& t);

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Decomposition {
  DirectedSystemOfMatrices system;
  Tagging tag;  // global element of m -> (fiber, local element)
};

// Fibers ordered by least element, local elements in increasing order. Every
// structural claim is verified; failures raise DecompositionError with a
// witness.
Decomposition decompose(LogicalMatrix const& m, PartitionTerm const& t);

// Components of J contribute their whole carrier, the rest their filter.
// Throws ValidationError when J is not an upset.
Subset upset_filter(DirectedSystemOfMatrices const& x, std::vector<std::size_t> const& upset);

struct ConditionReport {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // (n, i)
};

// For every n < i with a trivial component at n there is j with n <= j,
// i not <= j and A_j non-trivial. Trivial means designated = carrier.
ConditionReport suszko_reduced_condition(DirectedSystemOfMatrices const& x);

std::size_t trivial_component_count(DirectedSystemOfMatrices const& x);

// Same semilattice, isomorphic components and commuting homomorphisms.
bool isomorphic(DirectedSystemOfMatrices const& x, DirectedSystemOfMatrices const& y);
// Matrices up to an isomorphism preserving the designated sets.
bool isomorphic(LogicalMatrix const& a, LogicalMatrix const& b);

// Presentation of the left variable inclusion companion: lifted matrices
// (each m ⊕ 1) or the transformed calculus.
LogicPresentation companion_of(LogicPresentation const& l,
                               PartitionTerm const& t = PartitionTerm::lattice());

}  // namespace plonka

#endif  // PLONKA_PLONKA_HPP_
