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

// Seeded and exhaustive generators of algebras, semilattices and directed
// systems for property checks.

#ifndef PLONKA_GENERATORS_HPP_
#define PLONKA_GENERATORS_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "plonka/plonka.hpp"

namespace plonka {

// Deterministic across platforms: raw engine output reduced modulo n.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

FiniteAlgebra random_algebra(Signature const& sig, std::size_t size, Rng& rng);

// Every join table on {0..n-1}, one per isomorphism class, in a fixed order.
std::vector<JoinSemilattice> semilattices_up_to_iso(std::size_t n);

// All homomorphisms A -> B mapping F_A into F_B, in lexicographic order.
std::vector<std::vector<Element>> filter_homomorphisms(LogicalMatrix const& a,
                                                       LogicalMatrix const& b);

// Calls `f` on every valid system over `index` with the given components,
// in a fixed order. Stops early when `f` returns false.
void for_each_system(JoinSemilattice const& index, std::vector<LogicalMatrix> const& components,
                     std::function<bool(DirectedSystemOfMatrices const&)> const& f);

// A system over a random semilattice of at most `max_fibers` indices whose
// components are chains of at most `max_size` elements with nonempty
// upset filters, and randomly chosen commuting homomorphisms.
DirectedSystemOfMatrices random_chain_system(Rng& rng, std::size_t max_fibers,
                                             std::size_t max_size);

}  // namespace plonka

#endif  // PLONKA_GENERATORS_HPP_
