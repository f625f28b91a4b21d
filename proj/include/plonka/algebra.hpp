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

// Finite algebras given by operation tables over the carrier {0, ..., n-1}.

#ifndef PLONKA_ALGEBRA_HPP_
#define PLONKA_ALGEBRA_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "plonka/kernel.hpp"

namespace plonka {

using Element = std::uint32_t;

// Work bounds shared by the exhaustive engines. Every guard raises
// BoundExceeded rather than truncating a search silently.
struct Limits {
  std::size_t max_carrier = 6;         // congruence / polynomial oracles
  std::size_t max_subsets = 12;        // filter enumeration, carrier size
  std::size_t product_guard = 100000;  // product-subalgebra generation
  std::size_t max_maps = 2000000;      // candidate valuations A -> B
  std::size_t scheme_depth = 1;        // substitution depth in proof search
  std::size_t proof_steps = 20000;     // derived formulas in proof search
  std::size_t jobs = 1;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense operation table. Argument tuples are encoded in mixed radix, first
// argument most significant.
struct OperationTable {
  int arity = 0;
  std::vector<Element> values;
};

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  // Validates totality and range of every table.
  FiniteAlgebra(Signature sig, std::size_t size, std::vector<OperationTable> tables);

  Signature const& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return size_; }
  std::vector<OperationTable> const& tables() const noexcept { return tables_; }
  OperationTable const& table(std::size_t op) const { return tables_[op]; }

  Element apply(std::size_t op, std::span<Element const> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * size_ + a;
    return tables_[op].values[idx];
  }
  Element apply(std::size_t op, std::initializer_list<Element> args) const {
    return apply(op, std::span<Element const>(args.begin(), args.size()));
  }
  // Table index for an operation symbol; -1 when absent.
  int op_index(Symbol name) const;

  friend bool operator==(FiniteAlgebra const& a, FiniteAlgebra const& b);

 private:
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<OperationTable> tables_;
  std::vector<int> by_symbol_;  // symbol id -> table index
};

// Builds a table by calling `f` on every argument tuple.
OperationTable make_table(std::size_t size, int arity,
                          std::function<Element(std::span<Element const>)> const& f);

// Finite assignment of carrier elements to variables.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<Symbol, Element>> entries);

  void set(Symbol v, Element a);
  std::optional<Element> get(Symbol v) const;
  std::vector<std::pair<Symbol, Element>> const& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<Symbol, Element>> entries_;
};

class UnboundVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Element evaluate(FiniteAlgebra const& a, Term const& t, Valuation const& v);

// Fast path: value of t when vars[i] is assigned values[i]. No bounds checks
// beyond unbound-variable detection.
Element evaluate(FiniteAlgebra const& a, Term const& t, std::span<Symbol const> vars,
                 std::span<Element const> values);

// Calls `f(values)` for every assignment of carrier elements to `count`
// variables, in lexicographic order (last variable fastest). Stops early and
// returns false when `f` returns false.
bool for_each_assignment(std::size_t carrier, std::size_t count,
                         std::function<bool(std::span<Element const>)> const& f);

struct Homomorphism {
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<Element> map;
};

// Throws ValidationError on signature mismatch or a malformed map.
bool is_homomorphism(Homomorphism const& h);
bool is_homomorphism(FiniteAlgebra const& source, FiniteAlgebra const& target,
                     std::span<Element const> map);

// Least subuniverse containing `seeds`, sorted. Throws on an empty seed set.
std::vector<Element> generated_subalgebra(FiniteAlgebra const& a,
                                          std::span<Element const> seeds);

// Subalgebra on a subuniverse, with elements renumbered in increasing order.
FiniteAlgebra subalgebra(FiniteAlgebra const& a, std::span<Element const> universe);

// Carrier is the cartesian product with lexicographic encoding, the first
// factor most significant.
FiniteAlgebra direct_product(std::span<FiniteAlgebra const> factors);
std::vector<Element> product_coordinates(std::span<FiniteAlgebra const> factors, Element e);

// Partition of the carrier; block_of[a] is the least element of a's block.
struct Congruence {
  std::vector<Element> block_of;

  std::size_t size() const noexcept { return block_of.size(); }
  bool related(Element a, Element b) const { return block_of[a] == block_of[b]; }
  bool is_identity() const;
  bool is_total() const;
  std::size_t block_count() const;
  friend bool operator==(Congruence const&, Congruence const&) = default;
};

Congruence identity_congruence(std::size_t n);
Congruence total_congruence(std::size_t n);
// Canonicalizes arbitrary block labels.
Congruence congruence_from_labels(std::span<std::size_t const> labels);
bool is_congruence(FiniteAlgebra const& a, Congruence const& theta);
Congruence meet(Congruence const& a, Congruence const& b);
// theta ⊆ phi as relations.
bool refines(Congruence const& theta, Congruence const& phi);

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism projection;
};
Quotient quotient(FiniteAlgebra const& a, Congruence const& theta);

// All congruences, sorted by block_of. Throws BoundExceeded above max_carrier.
std::vector<Congruence> enumerate_congruences(FiniteAlgebra const& a,
                                              Limits const& limits = {});

using UnaryFunction = std::vector<Element>;

// Unary polynomial functions, sorted. Throws BoundExceeded above max_carrier.
std::vector<UnaryFunction> unary_polynomial_functions(FiniteAlgebra const& a,
                                                      Limits const& limits = {});

// Bijections between carriers that commute with all tables, in
// lexicographic order. `allowed(x, y)` restricts the image of x; at most
// `max_count` are returned.
std::vector<std::vector<Element>> isomorphisms(
    FiniteAlgebra const& a, FiniteAlgebra const& b,
    std::function<bool(Element, Element)> const& allowed = {},
    std::size_t max_count = std::numeric_limits<std::size_t>::max());

}  // namespace plonka

#endif  // PLONKA_ALGEBRA_HPP_
