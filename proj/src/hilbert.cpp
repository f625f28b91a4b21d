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

#include "plonka/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace plonka {

Rule const* Calculus::find_rule(std::string_view rule_name) const {
  for (auto const& r : rules) {
    if (r.name == rule_name) return &r;
  }
  return nullptr;
}

ContextScheme const* Calculus::find_scheme(std::string_view scheme_name) const {
  for (auto const& s : schemes) {
    if (s.name == scheme_name) return &s;
  }
  return nullptr;
}

void validate_calculus(Calculus const& h) {
  std::vector<std::string> names;
  for (auto const& r : h.rules) {
    for (auto const& p : r.premises) check_well_formed(p, h.signature);
    check_well_formed(r.conclusion, h.signature);
    names.push_back(r.name);
  }
  for (auto const& s : h.schemes) {
    check_well_formed(s.lhs, h.signature);
    check_well_formed(s.rhs, h.signature);
    names.push_back(s.name);
  }
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) throw ValidationError("duplicate rule or scheme name '" + *dup + "'");
}

Symbol hole_symbol() {
  static Symbol const hole = Symbol::intern("\xE2\x88\x98");
  return hole;
}

namespace {

bool contains_hole(Term const& t) {
  return std::binary_search(t.vars().begin(), t.vars().end(), hole_symbol());
}

// The term filling every hole of `context` so that it becomes `target`; all
// hole occurrences must receive the same filler.
bool extract_hole(Term const& context, Term const& target, std::optional<Term>& filler) {
  if (context.is_variable()) {
    if (context.symbol() == hole_symbol()) {
      if (filler) return *filler == target;
      filler = target;
      return true;
    }
    return context == target;
  }
  if (!contains_hole(context)) return context == target;
  if (target.is_variable() || context.symbol() != target.symbol() ||
      context.args().size() != target.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < context.args().size(); ++i) {
    if (!extract_hole(context.args()[i], target.args()[i], filler)) return false;
  }
  return true;
}

CheckResult fail(std::size_t step, std::string message) {
  return CheckResult{false, step, std::move(message)};
}

}  // namespace

CheckResult check_derivation(Calculus const& h, Derivation const& d) {
  if (d.steps.empty()) return CheckResult{false, std::nullopt, "derivation has no steps"};
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    Step const& s = d.steps[k];
    try {
      check_well_formed(s.formula, h.signature);
    } catch (ValidationError const& e) {
      return fail(k, e.what());
    }
    Justification const& j = s.justification;
    for (std::size_t f : j.from) {
      if (f >= k) return fail(k, "cites step " + std::to_string(f + 1) + " that is not earlier");
    }
    switch (j.kind) {
      case Justification::Kind::kHypothesis: {
        if (std::find(d.hypotheses.begin(), d.hypotheses.end(), s.formula) == d.hypotheses.end()) {
          return fail(k, "not a hypothesis");
        }
        break;
      }
      case Justification::Kind::kRule: {
        Rule const* r = h.find_rule(j.name);
        if (!r) return fail(k, "unknown rule '" + j.name + "'");
        if (j.from.size() != r->premises.size()) {
          return fail(k, "rule '" + j.name + "' needs " + std::to_string(r->premises.size()) +
                             " premise(s)");
        }
        for (std::size_t i = 0; i < r->premises.size(); ++i) {
          if (!(substitute(r->premises[i], j.substitution) == d.steps[j.from[i]].formula)) {
            return fail(k, "premise " + std::to_string(i + 1) + " of rule '" + j.name +
                               "' does not match step " + std::to_string(j.from[i] + 1));
          }
        }
        if (!(substitute(r->conclusion, j.substitution) == s.formula)) {
          return fail(k, "conclusion does not match the instance of rule '" + j.name + "'");
        }
        break;
      }
      case Justification::Kind::kScheme: {
        ContextScheme const* sc = h.find_scheme(j.name);
        if (!sc) return fail(k, "unknown scheme '" + j.name + "'");
        if (j.from.size() != 1) return fail(k, "a scheme step has exactly one premise");
        if (!j.context || !contains_hole(*j.context)) return fail(k, "scheme context has no hole");
        Term const& premise = d.steps[j.from[0]].formula;
        std::optional<Term> before;
        std::optional<Term> after;
        if (!extract_hole(*j.context, premise, before) || !before) {
          return fail(k, "premise does not fit the context");
        }
        if (!extract_hole(*j.context, s.formula, after) || !after) {
          return fail(k, "formula does not fit the context");
        }
        Term const& from_side = j.forward ? sc->lhs : sc->rhs;
        Term const& to_side = j.forward ? sc->rhs : sc->lhs;
        Substitution sigma;
        if (!match(from_side, *before, sigma) || !match(to_side, *after, sigma)) {
          return fail(k, "hole contents are not an instance of scheme '" + j.name + "'");
        }
        break;
      }
    }
  }
  return CheckResult{};
}

namespace {

// Terms of depth <= depth over `vars`, in a fixed order: by depth, then by
// operation, then lexicographically in the argument indices.
std::vector<Term> term_pool(Signature const& sig, VarSet const& vars, std::size_t depth) {
  std::vector<Term> pool;
  for (auto v : vars) pool.push_back(Term::variable(v));
  std::size_t prev_begin = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::size_t prev_end = pool.size();
    for (auto const& op : sig.operations()) {
      std::size_t arity = op.arity;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool has_new = false;
        for (auto i : idx) has_new = has_new || i >= prev_begin;
        if (has_new) {
          std::vector<Term> args;
          for (auto i : idx) args.push_back(pool[i]);
          pool.push_back(Term::apply(op.name, std::move(args)));
        }
        std::size_t k = arity;
        while (k > 0) {
          --k;
          if (++idx[k] < prev_end) break;
          idx[k] = 0;
          if (k == 0) goto next_op;
        }
      }
    next_op:;
    }
    prev_begin = prev_end;
  }
  return pool;
}

// Subterm occurrences of t with the context obtained by replacing each by
// the hole.
void positions(Term const& t, std::vector<std::pair<Term, Term>>& out) {
  out.emplace_back(t, Term::variable(hole_symbol()));
  if (t.is_variable()) return;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    std::vector<std::pair<Term, Term>> inner;
    positions(t.args()[i], inner);
    for (auto& [sub, ctx] : inner) {
      std::vector<Term> args = t.args();
      args[i] = ctx;
      out.emplace_back(sub, Term::apply(t.symbol(), std::move(args)));
    }
  }
}

class ProofSearch {
 public:
  ProofSearch(Calculus const& h, std::vector<Term> const& gamma, Term const& phi,
              ProofLimits const& limits)
      : h_(h), gamma_(gamma), goal_(phi), limits_(limits) {
    std::vector<Term> all = gamma;
    all.push_back(phi);
    VarSet vars = vars_of(all);
    vars.push_back(fresh_variable(vars));
    std::sort(vars.begin(), vars.end());
    vars_ = vars;
    std::size_t deepest = 0;
    for (auto const& t : all) deepest = std::max(deepest, t.depth());
    cap_ = limits.max_term_depth ? limits.max_term_depth : deepest + 2;
    for (auto const& t : all) positions(t, goal_subterms_);
  }

  ProofSearchResult run() {
    ProofSearchResult result;
    for (auto const& g : gamma_) add(g, Justification{});
    if (!found_ && !exhausted()) {
      for (std::size_t d = 0; d <= limits_.substitution_depth && !found_ && !exhausted(); ++d) {
        pool_ = term_pool(h_.signature, vars_, d);
        new_from_ = d == 0 ? 0 : pool_prev_size_;
        if (d == 0) goal_directed_axioms();
        axioms();
        std::size_t frontier = 0;
        while (!found_ && !exhausted()) {
          std::size_t end = nodes_.size();
          rules(frontier, end, d > 0 && frontier == 0);
          if (found_ || exhausted()) break;
          schemes(frontier, end);
          if (nodes_.size() == end) break;
          frontier = end;
        }
        pool_prev_size_ = pool_.size();
      }
    }
    result.explored = nodes_.size();
    result.budget_exhausted = !found_ && exhausted();
    if (found_) result.derivation = reconstruct(*found_);
    return result;
  }

 private:
  struct Node {
    Term formula;
    Justification justification;  // `from` holds node ids
  };

  bool exhausted() const { return nodes_.size() >= limits_.step_budget; }

  void add(Term const& f, Justification j) {
    if (found_ || exhausted()) return;
    if (f.depth() > cap_) return;
    if (index_.count(f)) return;
    std::size_t id = nodes_.size();
    index_.emplace(f, id);
    std::uint32_t head = f.is_variable() ? 0 : f.symbol().id() + 1;
    by_head_[head].push_back(id);
    nodes_.push_back({f, std::move(j)});
    if (f == goal_) found_ = id;
  }

  // Calls f for every extension of `sigma` binding `free` to pool terms;
  // with `require_new`, at least one binding uses a term added in this phase.
  void for_each_binding(VarSet const& free, Substitution const& sigma, bool require_new,
                        std::function<void(Substitution const&)> const& f) {
    std::vector<std::size_t> idx(free.size(), 0);
    if (pool_.empty()) return;
    while (true) {
      bool has_new = !require_new;
      for (auto i : idx) has_new = has_new || i >= new_from_;
      if (has_new) {
        Substitution s = sigma;
        for (std::size_t k = 0; k < free.size(); ++k) s.insert_or_assign(free[k], pool_[idx[k]]);
        f(s);
        if (found_ || exhausted()) return;
      }
      std::size_t k = free.size();
      while (true) {
        if (k == 0) return;
        --k;
        if (++idx[k] < pool_.size()) break;
        idx[k] = 0;
      }
    }
  }

  static VarSet unbound(VarSet const& vars, Substitution const& sigma) {
    VarSet out;
    for (auto v : vars) {
      if (!sigma.count(v)) out.push_back(v);
    }
    return out;
  }

  Justification rule_justification(Rule const& r, Substitution const& s,
                                   std::vector<std::size_t> from) {
    Justification j;
    j.kind = Justification::Kind::kRule;
    j.name = r.name;
    for (auto v : vars_of(rule_terms(r))) j.substitution.insert_or_assign(v, substitute(Term::variable(v), s));
    j.from = std::move(from);
    return j;
  }

  static std::vector<Term> rule_terms(Rule const& r) {
    std::vector<Term> ts = r.premises;
    ts.push_back(r.conclusion);
    return ts;
  }

  void goal_directed_axioms() {
    for (auto const& r : h_.rules) {
      if (!r.is_axiom()) continue;
      for (auto const& [sub, ctx] : goal_subterms_) {
        Substitution sigma;
        if (!match(r.conclusion, sub, sigma)) continue;
        VarSet free = unbound(r.conclusion.vars(), sigma);
        for_each_binding(free, sigma, false, [&](Substitution const& s) {
          add(substitute(r.conclusion, s), rule_justification(r, s, {}));
        });
        if (found_ || exhausted()) return;
      }
    }
  }

  void axioms() {
    for (auto const& r : h_.rules) {
      if (!r.is_axiom()) continue;
      for_each_binding(r.conclusion.vars(), {}, true, [&](Substitution const& s) {
        add(substitute(r.conclusion, s), rule_justification(r, s, {}));
      });
      if (found_ || exhausted()) return;
    }
  }

  // Matches the premises of r in `order` against derived formulas; some
  // matched premise must lie in [frontier, end) unless `all`.
  void rules(std::size_t frontier, std::size_t end, bool all) {
    for (auto const& r : h_.rules) {
      if (r.is_axiom()) continue;
      std::vector<std::size_t> order(r.premises.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return r.premises[a].size() > r.premises[b].size();
      });
      std::vector<std::size_t> chosen(r.premises.size());
      match_premises(r, order, 0, Substitution{}, chosen, frontier, end, all);
      if (found_ || exhausted()) return;
    }
  }

  void match_premises(Rule const& r, std::vector<std::size_t> const& order, std::size_t k,
                      Substitution const& sigma, std::vector<std::size_t>& chosen,
                      std::size_t frontier, std::size_t end, bool all) {
    if (found_ || exhausted()) return;
    if (k == order.size()) {
      bool fresh = all;
      for (auto c : chosen) fresh = fresh || c >= frontier;
      if (!fresh) return;
      VarSet free = unbound(r.conclusion.vars(), sigma);
      for_each_binding(free, sigma, false, [&](Substitution const& s) {
        add(substitute(r.conclusion, s), rule_justification(r, s, chosen));
      });
      return;
    }
    Term const& pattern = r.premises[order[k]];
    VarSet free = unbound(pattern.vars(), sigma);
    if (free.empty()) {
      auto it = index_.find(substitute(pattern, sigma));
      if (it == index_.end() || it->second >= end) return;
      chosen[order[k]] = it->second;
      match_premises(r, order, k + 1, sigma, chosen, frontier, end, all);
      return;
    }
    auto try_node = [&](std::size_t id) {
      Substitution s = sigma;
      if (!match(pattern, nodes_[id].formula, s)) return;
      chosen[order[k]] = id;
      match_premises(r, order, k + 1, s, chosen, frontier, end, all);
    };
    if (pattern.is_variable()) {
      for (std::size_t id = 0; id < end && !found_ && !exhausted(); ++id) try_node(id);
    } else {
      auto it = by_head_.find(pattern.symbol().id() + 1);
      if (it == by_head_.end()) return;
      std::vector<std::size_t> const ids = it->second;
      for (std::size_t id : ids) {
        if (id >= end || found_ || exhausted()) break;
        try_node(id);
      }
    }
  }

  void schemes(std::size_t frontier, std::size_t end) {
    for (std::size_t id = frontier; id < end; ++id) {
      std::vector<std::pair<Term, Term>> pos;
      positions(nodes_[id].formula, pos);
      for (auto const& sc : h_.schemes) {
        for (int dir = 0; dir < 2; ++dir) {
          Term const& from_side = dir == 0 ? sc.lhs : sc.rhs;
          Term const& to_side = dir == 0 ? sc.rhs : sc.lhs;
          for (auto const& [sub, ctx] : pos) {
            Substitution sigma;
            if (!match(from_side, sub, sigma)) continue;
            VarSet free = unbound(to_side.vars(), sigma);
            for_each_binding(free, sigma, false, [&](Substitution const& s) {
              Justification j;
              j.kind = Justification::Kind::kScheme;
              j.name = sc.name;
              j.forward = dir == 0;
              j.context = ctx;
              j.substitution = s;
              j.from = {id};
              add(plug(ctx, hole_symbol(), substitute(to_side, s)), std::move(j));
            });
            if (found_ || exhausted()) return;
          }
        }
      }
    }
  }

  Derivation reconstruct(std::size_t goal) const {
    std::vector<bool> needed(nodes_.size(), false);
    std::vector<std::size_t> stack{goal};
    while (!stack.empty()) {
      std::size_t id = stack.back();
      stack.pop_back();
      if (needed[id]) continue;
      needed[id] = true;
      for (auto f : nodes_[id].justification.from) stack.push_back(f);
    }
    Derivation d;
    d.hypotheses = gamma_;
    std::vector<std::size_t> step_of(nodes_.size(), 0);
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      if (!needed[id]) continue;
      Step s{nodes_[id].formula, nodes_[id].justification};
      for (auto& f : s.justification.from) f = step_of[f];
      step_of[id] = d.steps.size();
      d.steps.push_back(std::move(s));
    }
    return d;
  }

  Calculus const& h_;
  std::vector<Term> gamma_;
  Term goal_;
  ProofLimits limits_;
  VarSet vars_;
  std::size_t cap_ = 0;
  std::vector<std::pair<Term, Term>> goal_subterms_;
  std::vector<Term> pool_;
  std::size_t new_from_ = 0;
  std::size_t pool_prev_size_ = 0;
  std::vector<Node> nodes_;
  std::unordered_map<Term, std::size_t, TermHash> index_;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_head_;
  std::optional<std::size_t> found_;
};

}  // namespace

ProofSearchResult bounded_prove(Calculus const& h, std::vector<Term> const& gamma,
                                Term const& phi, ProofLimits const& limits) {
  ProofSearchResult r = ProofSearch(h, gamma, phi, limits).run();
  if (r.derivation) {
    CheckResult c = check_derivation(h, *r.derivation);
    if (!c.ok) {
      throw std::logic_error("proof search produced an invalid derivation: " + c.message);
    }
  }
  return r;
}

Calculus transform_left(Calculus const& h, PartitionTerm const& t) {
  validate_calculus(h);
  Calculus out;
  out.name = h.name + "^l";
  out.signature = h.signature;
  for (auto const& r : h.rules) {
    if (r.is_axiom()) {
      out.rules.push_back(r);
      continue;
    }
    Term folded = r.premises.back();
    for (std::size_t i = r.premises.size() - 1; i-- > 0;) folded = t.apply(r.premises[i], folded);
    out.rules.push_back({r.name, r.premises, t.apply(r.conclusion, folded)});
  }
  Term x = Term::variable(t.x());
  Term y = Term::variable(t.y());
  std::string h3 = "H3";
  while (out.find_rule(h3)) h3 += "'";
  out.rules.push_back({h3, {x}, t.term()});
  for (auto const& s : h.schemes) {
    if (!s.is_regular()) {
      throw ValidationError("scheme '" + s.name +
                            "' is not regular and has no sound counterpart in the companion");
    }
    out.schemes.push_back(s);
  }
  for (auto const& e : partition_equations(h.signature, t)) {
    std::string name = e.name;
    while (out.find_scheme(name)) name += "'";
    out.schemes.push_back({name, e.lhs, e.rhs});
  }
  validate_calculus(out);
  return out;
}

Signature boolean_signature() { return Signature{{"and", 2}, {"or", 2}, {"not", 1}}; }
Signature lattice_signature() { return Signature{{"and", 2}, {"or", 2}}; }

Term implies(Term const& a, Term const& b) {
  return Term::apply("or", {Term::apply("not", {a}), b});
}

namespace {

Term v(char const* name) { return Term::variable(name); }
Term op_and(Term a, Term b) { return Term::apply("and", {std::move(a), std::move(b)}); }
Term op_or(Term a, Term b) { return Term::apply("or", {std::move(a), std::move(b)}); }
Term op_not(Term a) { return Term::apply("not", {std::move(a)}); }

std::vector<Rule> cl_axioms() {
  Term p = v("p"), q = v("q"), r = v("r");
  return {
      {"A1", {}, implies(op_or(p, p), p)},
      {"A2", {}, implies(p, op_or(p, q))},
      {"A3", {}, implies(op_or(p, q), op_or(q, p))},
      {"A4", {}, implies(implies(p, q), implies(op_or(r, p), op_or(r, q)))},
      {"A5", {}, implies(op_and(p, q), op_not(op_or(op_not(p), op_not(q))))},
      {"A6", {}, implies(op_not(op_or(op_not(p), op_not(q))), op_and(p, q))},
  };
}

std::vector<ContextScheme> regular_lattice_schemes() {
  Term x = v("x"), y = v("y"), z = v("z");
  return {
      {"idem.and", op_and(x, x), x},
      {"idem.or", op_or(x, x), x},
      {"comm.and", op_and(x, y), op_and(y, x)},
      {"comm.or", op_or(x, y), op_or(y, x)},
      {"assoc.and", op_and(x, op_and(y, z)), op_and(op_and(x, y), z)},
      {"assoc.or", op_or(x, op_or(y, z)), op_or(op_or(x, y), z)},
      {"dist.and", op_and(x, op_or(y, z)), op_or(op_and(x, y), op_and(x, z))},
      {"dist.or", op_or(x, op_and(y, z)), op_and(op_or(x, y), op_or(x, z))},
      {"absorb", op_and(x, op_or(x, y)), op_or(x, op_and(x, y))},
  };
}

std::vector<Rule> lattice_rules(bool adjunction) {
  Term p = v("p"), q = v("q");
  std::vector<Rule> rules{
      {"AE1", {op_and(p, q)}, p},
      {"AE2", {op_and(p, q)}, q},
      {"OI", {p}, op_or(p, q)},
      {"ABS", {p}, op_and(p, op_or(p, q))},
  };
  if (adjunction) rules.push_back({"ADJ", {p, q}, op_and(p, q)});
  return rules;
}

}  // namespace

Calculus cl_calculus() {
  Calculus h;
  h.name = "CL";
  h.signature = boolean_signature();
  h.rules = cl_axioms();
  h.rules.push_back({"MP", {v("p"), implies(v("p"), v("q"))}, v("q")});
  validate_calculus(h);
  return h;
}

Calculus pwk_calculus() {
  Term p = v("p"), q = v("q");
  Term x = v("x"), y = v("y"), z = v("z"), x1 = v("x1"), x2 = v("x2");
  auto dot = [](Term a, Term b) { return op_and(a, op_or(a, b)); };
  Calculus h;
  h.name = "PWK";
  h.signature = boolean_signature();
  h.rules = cl_axioms();
  h.rules.push_back({"R1", {p, implies(p, q)}, dot(q, dot(p, implies(p, q)))});
  h.rules.push_back({"R2", {p}, dot(p, q)});
  h.schemes = {
      {"P1", dot(x, x), x},
      {"P2", dot(x, dot(y, z)), dot(dot(x, y), z)},
      {"P3", dot(x, dot(y, z)), dot(x, dot(z, y))},
      {"P4.and", dot(op_and(x1, x2), y), op_and(dot(x1, y), dot(x2, y))},
      {"P4.or", dot(op_or(x1, x2), y), op_or(dot(x1, y), dot(x2, y))},
      {"P4.not", dot(op_not(x1), y), op_not(dot(x1, y))},
      {"P5.and", dot(y, op_and(x1, x2)), dot(dot(y, x1), x2)},
      {"P5.or", dot(y, op_or(x1, x2)), dot(dot(y, x1), x2)},
      {"P5.not", dot(y, op_not(x1)), dot(y, x1)},
  };
  validate_calculus(h);
  return h;
}

Calculus cl_lattice_calculus() {
  Calculus h;
  h.name = "CL-and-or";
  h.signature = lattice_signature();
  h.rules = lattice_rules(true);
  h.schemes = regular_lattice_schemes();
  validate_calculus(h);
  return h;
}

Calculus dl_upset_calculus() {
  Calculus h;
  h.name = "DL-upsets";
  h.signature = lattice_signature();
  h.rules = lattice_rules(false);
  h.schemes = regular_lattice_schemes();
  validate_calculus(h);
  return h;
}

namespace {

bool alpha_match(Term const& a, Term const& b, std::map<Symbol, Symbol>& fwd,
                 std::map<Symbol, Symbol>& bwd) {
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) {
    auto [i, ins1] = fwd.try_emplace(a.symbol(), b.symbol());
    auto [j, ins2] = bwd.try_emplace(b.symbol(), a.symbol());
    return i->second == b.symbol() && j->second == a.symbol();
  }
  if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) return false;
  for (std::size_t k = 0; k < a.args().size(); ++k) {
    if (!alpha_match(a.args()[k], b.args()[k], fwd, bwd)) return false;
  }
  return true;
}

bool alpha_lists(std::vector<Term> const& a, std::vector<Term> const& b) {
  if (a.size() != b.size()) return false;
  std::map<Symbol, Symbol> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!alpha_match(a[i], b[i], fwd, bwd)) return false;
  }
  return true;
}

template <class T, class Eq>
bool same_multiset(std::vector<T> const& a, std::vector<T> const& b, Eq eq) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (auto const& x : a) {
    bool hit = false;
    for (std::size_t i = 0; i < b.size() && !hit; ++i) {
      if (!used[i] && eq(x, b[i])) used[i] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool alpha_equivalent(Rule const& a, Rule const& b) {
  std::vector<Term> xs = a.premises, ys = b.premises;
  xs.push_back(a.conclusion);
  ys.push_back(b.conclusion);
  return alpha_lists(xs, ys);
}

bool alpha_equivalent(ContextScheme const& a, ContextScheme const& b) {
  return alpha_lists({a.lhs, a.rhs}, {b.lhs, b.rhs}) ||
         alpha_lists({a.lhs, a.rhs}, {b.rhs, b.lhs});
}

bool calculi_equivalent(Calculus const& a, Calculus const& b) {
  if (!(a.signature == b.signature)) return false;
  auto req = [](Rule const& x, Rule const& y) { return alpha_equivalent(x, y); };
  auto seq = [](ContextScheme const& x, ContextScheme const& y) { return alpha_equivalent(x, y); };
  return same_multiset(a.rules, b.rules, req) && same_multiset(a.schemes, b.schemes, seq);
}

namespace {

std::string const kHoleText = "\xE2\x88\x98";
std::string const kHoleIdent = "__hole__";

std::string print_with_hole(Term const& t) { return to_string(t); }

Term parse_with_hole(std::string text, Signature const& sig) {
  for (std::size_t p = text.find(kHoleText); p != std::string::npos; p = text.find(kHoleText)) {
    text.replace(p, kHoleText.size(), kHoleIdent);
  }
  Term t = parse_term(text, sig);
  return substitute(t, Substitution{{Symbol::intern(kHoleIdent), Term::variable(hole_symbol())}});
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits at commas outside parentheses.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::string last = trim(s.substr(start));
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

}  // namespace

std::string serialize_certificate(Calculus const& h, Derivation const& d) {
  std::ostringstream out;
  out << "calculus " << h.name << "\n";
  for (auto const& g : d.hypotheses) out << "hyp " << to_string(g) << "\n";
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    Step const& s = d.steps[k];
    Justification const& j = s.justification;
    out << "step " << k + 1 << ": " << to_string(s.formula) << " BY ";
    auto from = [&] {
      std::string r;
      for (std::size_t i = 0; i < j.from.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(j.from[i] + 1);
      }
      return r;
    };
    switch (j.kind) {
      case Justification::Kind::kHypothesis:
        out << "hyp";
        break;
      case Justification::Kind::kRule: {
        out << "rule " << j.name << " sub {";
        bool first = true;
        for (auto const& [var, term] : j.substitution) {
          if (!first) out << ", ";
          first = false;
          out << var.name() << "=" << to_string(term);
        }
        out << "}";
        if (!j.from.empty()) out << " from " << from();
        break;
      }
      case Justification::Kind::kScheme:
        out << "scheme " << j.name << " " << (j.forward ? "lr" : "rl") << " ctx "
            << print_with_hole(*j.context) << " from " << from();
        break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {
struct CertFailure {
  std::string message;
};
}  // namespace

Derivation parse_certificate(std::string_view text, Signature const& sig) {
  Derivation d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto from_list = [&](std::string const& s) {
    std::vector<std::size_t> out;
    for (auto const& part : split_top(s)) {
      std::size_t k = 0;
      try {
        k = std::stoul(part);
      } catch (std::exception const&) {
        throw CertFailure{"bad step reference '" + part + "'"};
      }
      if (k == 0) throw CertFailure{"step references are 1-based"};
      out.push_back(k - 1);
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    try {
      if (l.rfind("calculus ", 0) == 0) continue;
      if (l.rfind("hyp ", 0) == 0) {
        d.hypotheses.push_back(parse_term(l.substr(4), sig));
        continue;
      }
      if (l.rfind("step ", 0) != 0) throw CertFailure{"expected 'step', 'hyp' or 'calculus'"};
      std::size_t colon = l.find(':');
      std::size_t by = l.find(" BY ");
      if (colon == std::string::npos || by == std::string::npos || by < colon) {
        throw CertFailure{"expected 'step <k>: <term> BY <justification>'"};
      }
      std::size_t k = std::stoul(l.substr(5, colon - 5));
      if (k != d.steps.size() + 1) throw CertFailure{"steps must be numbered consecutively"};
      Step s{parse_term(l.substr(colon + 1, by - colon - 1), sig), Justification{}};
      std::string rest = trim(l.substr(by + 4));
      Justification& j = s.justification;
      if (rest == "hyp") {
        j.kind = Justification::Kind::kHypothesis;
      } else if (rest.rfind("rule ", 0) == 0) {
        j.kind = Justification::Kind::kRule;
        std::size_t sp = rest.find(' ', 5);
        j.name = rest.substr(5, sp == std::string::npos ? std::string::npos : sp - 5);
        std::size_t open = rest.find("sub {");
        std::size_t close = rest.find('}', open == std::string::npos ? 0 : open);
        if (open == std::string::npos || close == std::string::npos) {
          throw CertFailure{"rule step needs 'sub {...}'"};
        }
        for (auto const& binding : split_top(rest.substr(open + 5, close - open - 5))) {
          std::size_t eq = binding.find('=');
          if (eq == std::string::npos) throw CertFailure{"binding needs '='"};
          j.substitution.insert_or_assign(Symbol::intern(trim(binding.substr(0, eq))),
                                          parse_term(binding.substr(eq + 1), sig));
        }
        std::size_t fr = rest.find(" from ", close);
        if (fr != std::string::npos) j.from = from_list(rest.substr(fr + 6));
      } else if (rest.rfind("scheme ", 0) == 0) {
        j.kind = Justification::Kind::kScheme;
        std::istringstream words(rest.substr(7));
        std::string dir;
        words >> j.name >> dir;
        if (dir != "lr" && dir != "rl") throw CertFailure{"scheme direction must be lr or rl"};
        j.forward = dir == "lr";
        std::size_t ctx = rest.find(" ctx ");
        std::size_t fr = rest.rfind(" from ");
        if (ctx == std::string::npos || fr == std::string::npos || fr < ctx) {
          throw CertFailure{"scheme step needs 'ctx <term> from <k>'"};
        }
        j.context = parse_with_hole(rest.substr(ctx + 5, fr - ctx - 5), sig);
        j.from = from_list(rest.substr(fr + 6));
      } else {
        throw CertFailure{"unknown justification '" + rest + "'"};
      }
      d.steps.push_back(std::move(s));
    } catch (CertFailure const& e) {
      throw ParseError(e.message, lineno);
    } catch (ParseError const& e) {
      throw ParseError(e.message() + " (column " + std::to_string(e.position() + 1) + ")", lineno);
    } catch (std::invalid_argument const&) {
      throw ParseError("bad step number", lineno);
    }
  }
  return d;
}

}  // namespace plonka
