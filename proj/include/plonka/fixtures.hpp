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

// Named structures used by the scenarios, the command line tool and tests.

#ifndef PLONKA_FIXTURES_HPP_
#define PLONKA_FIXTURES_HPP_

#include "plonka/plonka.hpp"

namespace plonka::fixtures {

// Two-element Boolean algebra, 0 < 1, over any subset of and/or/not.
FiniteAlgebra b2(Signature const& sig = boolean_signature());
// <B2, {1}>.
LogicalMatrix b2_matrix(Signature const& sig = boolean_signature());
// B2 x B2 with designated {(1, 1)}; element 2a + b encodes (a, b).
LogicalMatrix b2xb2_matrix(Signature const& sig = boolean_signature());
// Sum of B2 below the trivial algebra: elements 0, 1, n = 2; designated {1, n}.
LogicalMatrix wk3_matrix(Signature const& sig = boolean_signature());
// Chain 0 < 1 < .. < n-1 with meet and join.
FiniteAlgebra chain_lattice(std::size_t n);
// {0, d, e, 1} as 0..3, with d, e the atoms.
FiniteAlgebra boolean_lattice4();

// Presentations.
LogicPresentation cl_matrices();
LogicPresentation cl_lattice_matrices();  // <B2, {1}> over and/or
LogicPresentation pwk_matrices();         // <WK3, {1, n}>

// The 3-chain a < b < c with filter {b, c} embedded into {0, d, e, 1} with
// filter all but 0 by a -> 0, b -> d, c -> 1.
DirectedSystemOfMatrices chain_bool4_system();
// Six copies of <L2, {top}> and two trivial matrices over and/or. Indices:
// 0, 1 trivial; 2 L, 3 M, 4 R; 5 P, 6 Q; 7 T, ordered by 0 < 2, 3;
// 1 < 3, 4; 2, 3 < 5; 3, 4 < 6; 5, 6 < 7.
DirectedSystemOfMatrices two_trivials_system();

// Join-semilattice generated by covering pairs (lo, hi); throws unless every
// pair of indices has a least upper bound.
JoinSemilattice semilattice_from_order(std::size_t n,
                                       std::vector<std::pair<std::size_t, std::size_t>> covers);

}  // namespace plonka::fixtures

#endif  // PLONKA_FIXTURES_HPP_
