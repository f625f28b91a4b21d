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

// Witness checks for the Leibniz hierarchy and inconsistency terms.

#ifndef PLONKA_CLASSIFIER_HPP_
#define PLONKA_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "plonka/matrixlogic.hpp"

namespace plonka {

// Δ(x, y); may be empty.
struct ProtoWitness {
  std::vector<Term> delta;
};

// Equations τ(x).
struct TruthWitness {
  std::vector<std::pair<Term, Term>> equations;
};

// Σ(x), nonempty.
struct InconsistencySet {
  std::vector<Term> terms;
};

struct WitnessCheck {
  Verdict verdict = Verdict::kTrue;
  std::string detail;  // failing condition or element, when not kTrue
  std::optional<CounterModel> counter_model;
};

// Every term of depth <= `depth` over `vars`, by increasing depth; within a
// depth, by operation order and then argument tuples lexicographically.
std::vector<Term> enumerate_terms(Signature const& sig, VarSet const& vars, std::size_t depth);

// ∅ ⊢ Δ(x, x) and x, Δ(x, y) ⊢ y.
WitnessCheck check_proto_witness(LogicPresentation const& l, ProtoWitness const& w,
                                 Limits const& limits = {});

struct ProtoSampleBounds {
  std::size_t depth = 2;
  std::size_t max_size = 2;
};

struct ProtoSampleReport {
  std::size_t terms = 0;
  std::size_t candidates = 0;
  std::size_t failures = 0;
  std::size_t unknown = 0;
  std::vector<ProtoWitness> passing;  // the first few, in enumeration order
};

// Every Δ of at most max_size terms in x, y of depth at most `depth`,
// including the empty set. Corroboration up to the bounds, not a proof.
ProtoSampleReport proto_refutation_sample(LogicPresentation const& l,
                                          ProtoSampleBounds const& bounds = {},
                                          Limits const& limits = {});

// a ∈ F iff A ⊨ τ(a), on every listed model. Throws ValidationError when a
// listed model is not Leibniz-reduced.
WitnessCheck check_truth_witness(LogicPresentation const& l, TruthWitness const& w,
                                 std::vector<LogicalMatrix> const& models);

// Ω^A F coincides with {(a, b) : Δ(a, b) ⊆ F} on every listed model.
// Throws ValidationError when a listed matrix is not a model.
WitnessCheck check_equivalential_witness(LogicPresentation const& l, ProtoWitness const& w,
                                         std::vector<LogicalMatrix> const& models,
                                         Limits const& limits = {});

// Σ(x) ⊢ y for y fresh: the generic instance decides every substitution.
WitnessCheck check_inconsistency_set(LogicPresentation const& l, InconsistencySet const& s,
                                     Limits const& limits = {});

struct RefuterResult {
  bool not_refuted = true;
  std::optional<std::size_t> model;  // non-trivial model with a trivial submatrix
};

RefuterResult inconsistency_terms_refuter(LogicPresentation const& l,
                                          std::vector<LogicalMatrix> const& models);

}  // namespace plonka

#endif  // PLONKA_CLASSIFIER_HPP_
