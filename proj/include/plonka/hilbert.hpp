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

// Hilbert-style calculi with finite rules and bidirectional context schemes.

#ifndef PLONKA_HILBERT_HPP_
#define PLONKA_HILBERT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "plonka/kernel.hpp"
#include "plonka/partition_term.hpp"

namespace plonka {

// Axioms are rules without premises. Premise order is part of the rule.
struct Rule {
  std::string name;
  std::vector<Term> premises;
  Term conclusion;

  bool is_axiom() const noexcept { return premises.empty(); }
};

// chi(lhs, z) <|> chi(rhs, z) for every context chi.
struct ContextScheme {
  std::string name;
  Term lhs;
  Term rhs;

  bool is_regular() const { return lhs.vars() == rhs.vars(); }
};

struct Calculus {
  std::string name;
  Signature signature;
  std::vector<Rule> rules;
  std::vector<ContextScheme> schemes;

  Rule const* find_rule(std::string_view rule_name) const;
  ContextScheme const* find_scheme(std::string_view scheme_name) const;
};

// Throws ValidationError on ill-formed terms or duplicate names.
void validate_calculus(Calculus const& h);

// The hole of a scheme context, printed as "∘".
Symbol hole_symbol();

struct Justification {
  enum class Kind { kHypothesis, kRule, kScheme };
  Kind kind = Kind::kHypothesis;
  std::string name;                // rule or scheme name
  Substitution substitution;       // rule or scheme instance
  std::vector<std::size_t> from;   // 0-based premise step indices
  bool forward = true;             // scheme direction: lhs to rhs
  std::optional<Term> context;     // scheme context containing the hole
};

struct Step {
  Term formula;
  Justification justification;
};

struct Derivation {
  std::vector<Term> hypotheses;
  std::vector<Step> steps;

  Term const& conclusion() const { return steps.back().formula; }
};

struct CheckResult {
  bool ok = true;
  std::optional<std::size_t> failing_step;  // 0-based
  std::string message;
};

// Exact verification of every step. Scheme steps are verified by plugging
// the instantiated sides into the context; the substitution is recovered from
// the formulas, so a stored substitution is never trusted.
CheckResult check_derivation(Calculus const& h, Derivation const& d);

struct ProofLimits {
  std::size_t substitution_depth = 1;
  std::size_t step_budget = 20000;
  // Derived formulas deeper than this are discarded; 0 selects the maximal
  // depth of the hypotheses and goal plus two.
  std::size_t max_term_depth = 0;
};

struct ProofSearchResult {
  std::optional<Derivation> derivation;  // empty: unknown
  std::size_t explored = 0;
  bool budget_exhausted = false;
};

// Breadth-first forward search. Rule premises are matched against derived
// formulas; variables left free by matching, and all variables of axioms,
// range over terms of depth <= substitution_depth built from vars(Γ ∪ {φ})
// and one fresh variable. Deterministic. Every returned derivation has passed
// check_derivation.
ProofSearchResult bounded_prove(Calculus const& h, std::vector<Term> const& gamma,
                                Term const& phi, ProofLimits const& limits = {});

// H1 copies axioms, H2 replaces γ1..γn ▷ φ by γ1..γn ▷ φ·(γ1·(γ2·(..·γn))),
// H3 adds x ▷ x·y and H4 adds the partition equations as schemes. Regular
// schemes of `h` are kept; irregular ones raise ValidationError because they
// are not sound for the companion.
Calculus transform_left(Calculus const& h, PartitionTerm const& t);

// The signature {and/2, or/2, not/1}.
Signature boolean_signature();
// The signature {and/2, or/2}.
Signature lattice_signature();

// or(not(a), b).
Term implies(Term const& a, Term const& b);

// Axioms A1..A6 and modus ponens over boolean_signature().
Calculus cl_calculus();
// A1..A6, R1, R2 and the partition schemes of x ∧ (x ∨ y), written out.
Calculus pwk_calculus();
// Conjunction/disjunction fragment of classical logic: conjunction
// elimination, disjunction introduction, adjunction, absorption and the
// regular distributive-lattice identities as schemes.
Calculus cl_lattice_calculus();
// Γ ⊢ φ iff some γ ∈ Γ lies below φ in every distributive lattice: the
// previous calculus without adjunction.
Calculus dl_upset_calculus();

// Rules equal up to a bijective renaming of variables.
bool alpha_equivalent(Rule const& a, Rule const& b);
bool alpha_equivalent(ContextScheme const& a, ContextScheme const& b);
// Same rules and schemes up to naming, renaming and order.
bool calculi_equivalent(Calculus const& a, Calculus const& b);

// Line-oriented certificate; see docs/FORMATS.md.
std::string serialize_certificate(Calculus const& h, Derivation const& d);
// Throws ParseError (position = line number) on malformed input.
Derivation parse_certificate(std::string_view text, Signature const& sig);

}  // namespace plonka

#endif  // PLONKA_HILBERT_HPP_
