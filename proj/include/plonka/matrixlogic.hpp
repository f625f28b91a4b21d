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

// Logical matrices, consequence, filters, Leibniz and Suszko congruences.

#ifndef PLONKA_MATRIXLOGIC_HPP_
#define PLONKA_MATRIXLOGIC_HPP_

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plonka/algebra.hpp"
#include "plonka/hilbert.hpp"
#include "plonka/partition_term.hpp"

namespace plonka {

using Subset = boost::dynamic_bitset<>;

Subset make_subset(std::size_t n, std::initializer_list<Element> elements);
Subset make_subset(std::size_t n, std::span<Element const> elements);
std::vector<Element> elements_of(Subset const& s);
// Cardinality first, then lexicographic on the sorted elements.
bool canonical_less(Subset const& a, Subset const& b);

struct LogicalMatrix {
  FiniteAlgebra algebra;
  Subset designated;

  LogicalMatrix() = default;
  // Throws ValidationError when the designated set has the wrong size.
  LogicalMatrix(FiniteAlgebra a, Subset f);

  std::size_t size() const { return algebra.size(); }
  bool designates(Element a) const { return designated.test(a); }
  bool is_trivial() const { return designated.count() == algebra.size(); }
};

struct MatrixPresentation {
  std::vector<LogicalMatrix> matrices;

  // Throws ValidationError on an empty list or mixed signatures.
  void validate() const;
  Signature const& signature() const { return matrices.front().algebra.signature(); }
};

struct CalculusPresentation {
  Calculus calculus;
  std::size_t scheme_depth = 1;
};

struct LogicPresentation {
  std::variant<MatrixPresentation, CalculusPresentation> value;

  static LogicPresentation by_matrices(std::vector<LogicalMatrix> ms);
  static LogicPresentation by_calculus(Calculus h, std::size_t scheme_depth = 1);

  bool is_matrices() const { return std::holds_alternative<MatrixPresentation>(value); }
  MatrixPresentation const& matrices() const { return std::get<MatrixPresentation>(value); }
  CalculusPresentation const& calculus() const { return std::get<CalculusPresentation>(value); }
  Signature const& signature() const;
};

enum class Verdict { kFalse, kTrue, kUnknown };
std::string to_string(Verdict v);

// Valuation refuting an inference in one matrix of a presentation.
struct CounterModel {
  std::size_t matrix = 0;
  Valuation valuation;
};

struct EntailmentResult {
  bool holds = true;
  std::optional<CounterModel> witness;
};

// Exact: every matrix, every valuation of vars(Γ ∪ {φ}). The witness is the
// lexicographically least refuting valuation of the first refuting matrix.
EntailmentResult entails(MatrixPresentation const& m, std::vector<Term> const& gamma,
                         Term const& phi);

struct ConsequenceResult {
  Verdict verdict = Verdict::kUnknown;
  std::optional<CounterModel> witness;   // matrices, on kFalse
  std::optional<Derivation> derivation;  // calculus, on kTrue
};

// Matrix presentations are exact; calculus presentations answer kTrue with a
// derivation or kUnknown when the bounded search gives up.
ConsequenceResult consequence(LogicPresentation const& l, std::vector<Term> const& gamma,
                              Term const& phi, Limits const& limits = {});

// {γ ∈ Γ : vars(γ) ⊆ vars(φ)}, in input order.
std::vector<Term> delta_max(std::vector<Term> const& gamma, Term const& phi);

struct CompanionResult {
  std::vector<Term> delta;
  ConsequenceResult result;
};

// Γ ⊢^l φ iff Δmax ⊢ φ: by monotonicity, the largest admissible premise
// subset decides the existential definition.
CompanionResult companion_entails(LogicPresentation const& l, std::vector<Term> const& gamma,
                                  Term const& phi, Limits const& limits = {});

// Designated-value masks of terms over a fixed variable list, for bulk
// entailment over many inferences sharing variables. Bit k of a mask is the
// k-th valuation in for_each_assignment order.
class Tabulation {
 public:
  // Throws BoundExceeded if some matrix has more than 64 valuations.
  Tabulation(MatrixPresentation const& m, VarSet vars);

  std::vector<std::uint64_t> masks(Term const& t) const;
  std::uint64_t full_mask(std::size_t matrix) const { return full_[matrix]; }
  std::size_t matrix_count() const { return full_.size(); }

 private:
  MatrixPresentation const* m_;
  VarSet vars_;
  std::vector<std::vector<std::vector<Element>>> assignments_;
  std::vector<std::uint64_t> full_;
};

struct FilterCheck {
  bool is_filter = true;
  std::string reason;  // on failure: the violated rule, scheme or inference
};

// Both engines are exact. Matrices: the product construction described in
// docs/filter-check.md. Calculus: closure under every rule instance and, for
// each scheme, every instance pair lies in the Leibniz congruence of F.
FilterCheck is_filter(FiniteAlgebra const& a, Subset const& f, LogicPresentation const& l,
                      Limits const& limits = {});
FilterCheck is_filter_by_matrices(FiniteAlgebra const& a, Subset const& f,
                                  MatrixPresentation const& m, Limits const& limits = {});
FilterCheck is_filter_by_calculus(FiniteAlgebra const& a, Subset const& f, Calculus const& h,
                                  Limits const& limits = {});

struct FilterLattice {
  FiniteAlgebra algebra;
  std::vector<Subset> filters;  // canonical order
};

// Throws BoundExceeded above limits.max_subsets elements.
FilterLattice enumerate_filters(FiniteAlgebra const& a, LogicPresentation const& l,
                                Limits const& limits = {});
// Filters containing `below`, canonical order.
std::vector<Subset> filters_above(FiniteAlgebra const& a, Subset const& below,
                                  LogicPresentation const& l, Limits const& limits = {});
Subset filter_generated(FiniteAlgebra const& a, LogicPresentation const& l, Subset const& x,
                        Limits const& limits = {});

// Largest congruence compatible with F, by separating pairs through basic
// translations.
Congruence leibniz(FiniteAlgebra const& a, Subset const& f);
// The same relation through materialized unary polynomial functions.
Congruence leibniz_by_polynomials(FiniteAlgebra const& a, Subset const& f,
                                  Limits const& limits = {});

// Intersection of the Leibniz congruences of all filters above F. Throws
// ValidationError when F is not a filter.
Congruence suszko(FiniteAlgebra const& a, Subset const& f, LogicPresentation const& l,
                  Limits const& limits = {});
// Independent route: a, b related iff Fg(F ∪ {p(a)}) = Fg(F ∪ {p(b)}) for
// every unary polynomial p.
Congruence suszko_by_generation(FiniteAlgebra const& a, Subset const& f,
                                LogicPresentation const& l, Limits const& limits = {});

// Throws ValidationError when θ is not a congruence or not compatible with
// the designated set.
LogicalMatrix reduce(LogicalMatrix const& m, Congruence const& theta);

bool is_model(LogicalMatrix const& m, LogicPresentation const& l, Limits const& limits = {});
bool is_leibniz_reduced(LogicalMatrix const& m);
// False for matrices that are not models.
bool is_suszko_reduced(LogicalMatrix const& m, LogicPresentation const& l,
                       Limits const& limits = {});

// Some designated a with Sg{a} inside the designated set.
bool has_trivial_submatrix(LogicalMatrix const& m);

struct EquationCheck {
  bool holds = true;
  std::optional<CounterModel> witness;
};

// ε ≈ δ in every algebra reduct of the presentation.
EquationCheck check_equation_in_K(MatrixPresentation const& m, Term const& eps, Term const& delta);

// x ⊢ x·y and the partition equations. Matrices: entailment plus the
// equations in the algebra reducts, a sufficient condition. Calculus: a
// bounded derivation of x ⊢ x·y plus derivations of both directions of each
// equation in the empty context; kUnknown when a probe is not found, never
// kFalse.
Verdict partition_term_check(LogicPresentation const& l, PartitionTerm const& t,
                             Limits const& limits = {});

}  // namespace plonka

#endif  // PLONKA_MATRIXLOGIC_HPP_
