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

#include "plonka/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace plonka {

namespace {

constexpr std::size_t kKeepPassing = 8;

Symbol sym_x() { return Symbol::intern("x"); }
Symbol sym_y() { return Symbol::intern("y"); }

VarSet xy() {
  VarSet v{sym_x(), sym_y()};
  std::sort(v.begin(), v.end());
  return v;
}

std::string describe(std::vector<Term> const& ts) {
  return "{" + to_string(std::span<Term const>(ts)) + "}";
}

// Δ(x, x): every δ with y replaced by x.
std::vector<Term> diagonal(std::vector<Term> const& delta) {
  Substitution s;
  s.insert_or_assign(sym_y(), Term::variable(sym_x()));
  std::vector<Term> out;
  for (auto const& d : delta) out.push_back(substitute(d, s));
  return out;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::kFalse || b == Verdict::kFalse) return Verdict::kFalse;
  if (a == Verdict::kUnknown || b == Verdict::kUnknown) return Verdict::kUnknown;
  return Verdict::kTrue;
}

}  // namespace

std::vector<Term> enumerate_terms(Signature const& sig, VarSet const& vars, std::size_t depth) {
  std::vector<Term> all;
  for (Symbol v : vars) all.push_back(Term::variable(v));
  std::size_t previous_end = 0;  // terms before this index have depth < d - 1
  for (std::size_t d = 1; d <= depth; ++d) {
    std::size_t const pool = all.size();
    std::vector<Term> fresh;
    for (auto const& op : sig.operations()) {
      std::size_t const n = static_cast<std::size_t>(op.arity);
      if (n == 0) {
        if (d == 1) fresh.push_back(Term::apply(op.name, {}));
        continue;
      }
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        bool reaches = std::any_of(idx.begin(), idx.end(),
                                   [&](std::size_t i) { return i >= previous_end; });
        if (reaches) {
          std::vector<Term> args;
          for (std::size_t i : idx) args.push_back(all[i]);
          fresh.push_back(Term::apply(op.name, std::move(args)));
        }
        std::size_t k = n;
        while (k > 0 && ++idx[k - 1] == pool) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    previous_end = pool;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return all;
}

WitnessCheck check_proto_witness(LogicPresentation const& l, ProtoWitness const& w,
                                 Limits const& limits) {
  WitnessCheck out;
  Term const x = Term::variable(sym_x());
  Term const y = Term::variable(sym_y());
  for (auto const& d : w.delta) check_well_formed(d, l.signature());

  std::vector<Term> const diag = diagonal(w.delta);
  Verdict theorems = Verdict::kTrue;
  for (auto const& d : diag) {
    ConsequenceResult r = consequence(l, {}, d, limits);
    if (r.verdict == Verdict::kFalse) {
      out.verdict = Verdict::kFalse;
      out.detail = "not a theorem: " + to_string(d);
      out.counter_model = r.witness;
      return out;
    }
    theorems = combine(theorems, r.verdict);
  }

  std::vector<Term> premises{x};
  premises.insert(premises.end(), w.delta.begin(), w.delta.end());
  ConsequenceResult mp = consequence(l, premises, y, limits);
  if (mp.verdict == Verdict::kFalse) {
    out.verdict = Verdict::kFalse;
    out.detail = "x, " + describe(w.delta) + " does not entail y";
    out.counter_model = mp.witness;
    return out;
  }
  out.verdict = combine(theorems, mp.verdict);
  if (out.verdict == Verdict::kUnknown) out.detail = "bounded proof search inconclusive";
  return out;
}

ProtoSampleReport proto_refutation_sample(LogicPresentation const& l,
                                          ProtoSampleBounds const& bounds, Limits const& limits) {
  ProtoSampleReport report;
  std::vector<Term> const terms = enumerate_terms(l.signature(), xy(), bounds.depth);
  report.terms = terms.size();

  auto record = [&](std::vector<std::size_t> const& chosen, Verdict v) {
    ++report.candidates;
    if (v == Verdict::kFalse) {
      ++report.failures;
    } else if (v == Verdict::kUnknown) {
      ++report.unknown;
    } else if (report.passing.size() < kKeepPassing) {
      ProtoWitness w;
      for (std::size_t i : chosen) w.delta.push_back(terms[i]);
      report.passing.push_back(std::move(w));
    }
  };

  // Candidates: subsets of the pool in order of size, lexicographic on
  // indices within a size.
  auto for_each_candidate = [&](auto&& visit) {
    std::size_t const n = terms.size();
    for (std::size_t k = 0; k <= bounds.max_size && k <= n; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  };

  if (!l.is_matrices()) {
    // One bounded proof search per candidate; workers take candidates
    // round-robin and results are recorded in enumeration order.
    std::vector<std::vector<std::size_t>> all;
    for_each_candidate([&](std::vector<std::size_t> const& idx) { all.push_back(idx); });
    std::vector<Verdict> verdicts(all.size(), Verdict::kUnknown);
    auto check = [&](std::size_t k) {
      ProtoWitness w;
      for (std::size_t i : all[k]) w.delta.push_back(terms[i]);
      verdicts[k] = check_proto_witness(l, w, limits).verdict;
    };
    // Symbol ids follow interning order, which orders variables inside the
    // search; the first candidate interns every name the others use.
    if (!all.empty()) check(0);
    auto work = [&](std::size_t start, std::size_t stride) {
      for (std::size_t k = 1 + start; k < all.size(); k += stride) check(k);
    };
    std::size_t const jobs = std::max<std::size_t>(1, std::min(limits.jobs, all.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    work(0, jobs);
    for (auto& t : pool) t.join();
    for (std::size_t k = 0; k < all.size(); ++k) record(all[k], verdicts[k]);
    return report;
  }

  // Matrices: designation masks over the valuations of (x, y). δ(x, x) is a
  // theorem iff δ is designated on every valuation with x = y.
  MatrixPresentation const& m = l.matrices();
  Tabulation const tab(m, xy());
  std::size_t const mc = tab.matrix_count();
  std::vector<std::uint64_t> diag_mask(mc, 0);
  for (std::size_t mi = 0; mi < mc; ++mi) {
    std::size_t const s = m.matrices[mi].size();
    for (std::size_t a = 0; a < s; ++a) diag_mask[mi] |= std::uint64_t{1} << (a * s + a);
  }
  std::vector<std::vector<std::uint64_t>> mask;
  std::vector<char> theorem_on_diag;
  for (auto const& t : terms) {
    mask.push_back(tab.masks(t));
    bool ok = true;
    for (std::size_t mi = 0; mi < mc; ++mi) {
      if ((mask.back()[mi] & diag_mask[mi]) != diag_mask[mi]) ok = false;
    }
    theorem_on_diag.push_back(ok);
  }
  std::vector<std::uint64_t> const mx = tab.masks(Term::variable(sym_x()));
  std::vector<std::uint64_t> const my = tab.masks(Term::variable(sym_y()));

  for_each_candidate([&](std::vector<std::size_t> const& idx) {
    bool ok = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return theorem_on_diag[i]; });
    for (std::size_t mi = 0; ok && mi < mc; ++mi) {
      std::uint64_t p = mx[mi];
      for (std::size_t i : idx) p &= mask[i][mi];
      if ((p & ~my[mi]) != 0) ok = false;
    }
    record(idx, ok ? Verdict::kTrue : Verdict::kFalse);
  });
  return report;
}

WitnessCheck check_truth_witness(LogicPresentation const& l, TruthWitness const& w,
                                 std::vector<LogicalMatrix> const& models) {
  VarSet vars;
  for (auto const& [lhs, rhs] : w.equations) {
    check_well_formed(lhs, l.signature());
    check_well_formed(rhs, l.signature());
    vars = var_union(vars, var_union(lhs.vars(), rhs.vars()));
  }
  if (vars.size() > 1) throw ValidationError("defining equations must use a single variable");
  Symbol const v = vars.empty() ? sym_x() : vars.front();

  WitnessCheck out;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    LogicalMatrix const& mat = models[mi];
    if (!is_leibniz_reduced(mat)) {
      throw ValidationError("model " + std::to_string(mi) + " is not Leibniz-reduced");
    }
    for (Element a = 0; a < mat.size(); ++a) {
      Valuation val{{v, a}};
      bool sat = std::all_of(w.equations.begin(), w.equations.end(), [&](auto const& eq) {
        return evaluate(mat.algebra, eq.first, val) == evaluate(mat.algebra, eq.second, val);
      });
      if (sat != mat.designates(a)) {
        out.verdict = Verdict::kFalse;
        std::ostringstream os;
        os << "model " << mi << ", element " << a
           << (mat.designates(a) ? ": designated but the equations fail"
                                 : ": equations hold but not designated");
        out.detail = os.str();
        out.counter_model = CounterModel{mi, val};
        return out;
      }
    }
  }
  return out;
}

WitnessCheck check_equivalential_witness(LogicPresentation const& l, ProtoWitness const& w,
                                         std::vector<LogicalMatrix> const& models,
                                         Limits const& limits) {
  for (auto const& d : w.delta) {
    check_well_formed(d, l.signature());
    if (!var_subset(d.vars(), xy())) throw ValidationError("Δ must use only x and y");
  }
  WitnessCheck out;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    LogicalMatrix const& mat = models[mi];
    if (!is_model(mat, l, limits)) {
      throw ValidationError("matrix " + std::to_string(mi) + " is not a model");
    }
    Congruence const omega = leibniz(mat.algebra, mat.designated);
    for (Element a = 0; a < mat.size(); ++a) {
      for (Element b = 0; b < mat.size(); ++b) {
        Valuation val{{sym_x(), a}, {sym_y(), b}};
        bool in_f = std::all_of(w.delta.begin(), w.delta.end(), [&](Term const& d) {
          return mat.designates(evaluate(mat.algebra, d, val));
        });
        bool related = omega.block_of[a] == omega.block_of[b];
        if (in_f != related) {
          out.verdict = Verdict::kFalse;
          std::ostringstream os;
          os << "model " << mi << ", pair (" << a << ", " << b << ")"
             << (related ? ": Leibniz-related but Δ not designated"
                         : ": Δ designated but not Leibniz-related");
          out.detail = os.str();
          out.counter_model = CounterModel{mi, val};
          return out;
        }
      }
    }
  }
  return out;
}

WitnessCheck check_inconsistency_set(LogicPresentation const& l, InconsistencySet const& s,
                                     Limits const& limits) {
  if (s.terms.empty()) throw ValidationError("an inconsistency set must be nonempty");
  for (auto const& t : s.terms) check_well_formed(t, l.signature());
  Term const y = Term::variable(fresh_variable(vars_of(std::span<Term const>(s.terms)), "y"));
  ConsequenceResult r = consequence(l, s.terms, y, limits);
  WitnessCheck out;
  out.verdict = r.verdict;
  if (r.verdict == Verdict::kFalse) {
    out.detail = describe(s.terms) + " does not entail the fresh variable " + to_string(y);
    out.counter_model = r.witness;
  } else if (r.verdict == Verdict::kUnknown) {
    out.detail = "bounded proof search inconclusive";
  }
  return out;
}

RefuterResult inconsistency_terms_refuter(LogicPresentation const& l,
                                          std::vector<LogicalMatrix> const& models) {
  RefuterResult out;
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    if (models[mi].algebra.signature() != l.signature()) {
      throw ValidationError("model " + std::to_string(mi) + " has a different signature");
    }
    if (!models[mi].is_trivial() && has_trivial_submatrix(models[mi])) {
      out.not_refuted = false;
      out.model = mi;
      return out;
    }
  }
  return out;
}

}  // namespace plonka
