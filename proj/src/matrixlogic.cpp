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

#include "plonka/matrixlogic.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace plonka {

Subset make_subset(std::size_t n, std::initializer_list<Element> elements) {
  return make_subset(n, std::span<Element const>(elements.begin(), elements.size()));
}

Subset make_subset(std::size_t n, std::span<Element const> elements) {
  Subset s(n);
  for (Element e : elements) {
    if (e >= n) throw ValidationError("subset element outside the carrier");
    s.set(e);
  }
  return s;
}

std::vector<Element> elements_of(Subset const& s) {
  std::vector<Element> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

bool canonical_less(Subset const& a, Subset const& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return elements_of(a) < elements_of(b);
}

LogicalMatrix::LogicalMatrix(FiniteAlgebra a, Subset f) : algebra(std::move(a)), designated(std::move(f)) {
  if (designated.size() != algebra.size()) {
    throw ValidationError("designated set does not match the carrier size");
  }
}

void MatrixPresentation::validate() const {
  if (matrices.empty()) throw ValidationError("matrix presentation is empty");
  for (auto const& m : matrices) {
    if (!(m.algebra.signature() == signature())) {
      throw ValidationError("matrices of a presentation must share a signature");
    }
  }
}

LogicPresentation LogicPresentation::by_matrices(std::vector<LogicalMatrix> ms) {
  MatrixPresentation m{std::move(ms)};
  m.validate();
  return LogicPresentation{std::move(m)};
}

LogicPresentation LogicPresentation::by_calculus(Calculus h, std::size_t scheme_depth) {
  validate_calculus(h);
  return LogicPresentation{CalculusPresentation{std::move(h), scheme_depth}};
}

Signature const& LogicPresentation::signature() const {
  return is_matrices() ? matrices().signature() : calculus().calculus.signature;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

Valuation make_valuation(VarSet const& vars, std::span<Element const> values) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v.set(vars[i], values[i]);
  return v;
}

std::string describe(VarSet const& vars, std::span<Element const> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].name() + "=" + std::to_string(values[i]);
  }
  return out + "}";
}

void check_terms(Signature const& sig, std::vector<Term> const& gamma, Term const& phi) {
  for (auto const& g : gamma) check_well_formed(g, sig);
  check_well_formed(phi, sig);
}

}  // namespace

EntailmentResult entails(MatrixPresentation const& m, std::vector<Term> const& gamma,
                         Term const& phi) {
  m.validate();
  check_terms(m.signature(), gamma, phi);
  std::vector<Term> all = gamma;
  all.push_back(phi);
  VarSet vars = vars_of(all);
  for (std::size_t mi = 0; mi < m.matrices.size(); ++mi) {
    LogicalMatrix const& mat = m.matrices[mi];
    std::optional<CounterModel> found;
    for_each_assignment(mat.size(), vars.size(), [&](std::span<Element const> values) {
      for (auto const& g : gamma) {
        if (!mat.designates(evaluate(mat.algebra, g, vars, values))) return true;
      }
      if (mat.designates(evaluate(mat.algebra, phi, vars, values))) return true;
      found = CounterModel{mi, make_valuation(vars, values)};
      return false;
    });
    if (found) return EntailmentResult{false, found};
  }
  return EntailmentResult{};
}

ConsequenceResult consequence(LogicPresentation const& l, std::vector<Term> const& gamma,
                              Term const& phi, Limits const& limits) {
  ConsequenceResult out;
  if (l.is_matrices()) {
    EntailmentResult r = entails(l.matrices(), gamma, phi);
    out.verdict = r.holds ? Verdict::kTrue : Verdict::kFalse;
    out.witness = r.witness;
    return out;
  }
  auto const& cp = l.calculus();
  check_terms(cp.calculus.signature, gamma, phi);
  ProofLimits pl;
  pl.substitution_depth = cp.scheme_depth;
  pl.step_budget = limits.proof_steps;
  ProofSearchResult r = bounded_prove(cp.calculus, gamma, phi, pl);
  if (r.derivation) {
    out.verdict = Verdict::kTrue;
    out.derivation = std::move(r.derivation);
  }
  return out;
}

std::vector<Term> delta_max(std::vector<Term> const& gamma, Term const& phi) {
  std::vector<Term> out;
  for (auto const& g : gamma) {
    if (var_subset(g.vars(), phi.vars())) out.push_back(g);
  }
  return out;
}

CompanionResult companion_entails(LogicPresentation const& l, std::vector<Term> const& gamma,
                                  Term const& phi, Limits const& limits) {
  CompanionResult out;
  out.delta = delta_max(gamma, phi);
  out.result = consequence(l, out.delta, phi, limits);
  return out;
}

Tabulation::Tabulation(MatrixPresentation const& m, VarSet vars) : m_(&m), vars_(std::move(vars)) {
  m.validate();
  for (auto const& mat : m.matrices) {
    std::vector<std::vector<Element>> rows;
    for_each_assignment(mat.size(), vars_.size(), [&](std::span<Element const> values) {
      rows.emplace_back(values.begin(), values.end());
      return true;
    });
    if (rows.size() > 64) throw BoundExceeded("tabulation needs at most 64 valuations per matrix");
    full_.push_back(rows.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows.size()) - 1);
    assignments_.push_back(std::move(rows));
  }
}

std::vector<std::uint64_t> Tabulation::masks(Term const& t) const {
  std::vector<std::uint64_t> out(assignments_.size(), 0);
  for (std::size_t mi = 0; mi < assignments_.size(); ++mi) {
    LogicalMatrix const& mat = m_->matrices[mi];
    for (std::size_t k = 0; k < assignments_[mi].size(); ++k) {
      if (mat.designates(evaluate(mat.algebra, t, vars_, assignments_[mi][k]))) {
        out[mi] |= std::uint64_t{1} << k;
      }
    }
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(std::vector<Element> const& v) const noexcept {
    std::size_t h = v.size();
    for (Element e : v) h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// One coordinate of the big product: the algebra and its table index for
// every operation of the common signature.
struct Coordinate {
  FiniteAlgebra const* algebra;
  std::vector<int> op;
  Subset const* designated;  // null for the A coordinate
};

}  // namespace

FilterCheck is_filter_by_matrices(FiniteAlgebra const& a, Subset const& f,
                                  MatrixPresentation const& m, Limits const& limits) {
  m.validate();
  if (!(a.signature() == m.signature())) {
    throw ValidationError("algebra and presentation have different signatures");
  }
  if (f.size() != a.size()) throw ValidationError("subset does not match the carrier size");
  std::size_t n = a.size();
  auto const& sig = a.signature();

  // Compatible maps u : A -> B, per matrix.
  std::vector<Coordinate> coords;
  std::vector<std::vector<Element>> maps;
  coords.push_back({&a, {}, nullptr});
  for (auto const& op : sig.operations()) coords[0].op.push_back(a.op_index(op.name));
  for (std::size_t mi = 0; mi < m.matrices.size(); ++mi) {
    LogicalMatrix const& mat = m.matrices[mi];
    std::size_t nb = mat.size();
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(nb);
    if (total > static_cast<double>(limits.max_maps)) {
      throw BoundExceeded("filter check: " + std::to_string(nb) + "^" + std::to_string(n) +
                          " candidate maps into matrix " + std::to_string(mi) +
                          " exceed the bound " + std::to_string(limits.max_maps));
    }
    std::vector<FiniteAlgebra> pair{a, mat.algebra};
    FiniteAlgebra ab = direct_product(pair);
    Coordinate c{&mat.algebra, {}, &mat.designated};
    for (auto const& op : sig.operations()) c.op.push_back(mat.algebra.op_index(op.name));
    for_each_assignment(nb, n, [&](std::span<Element const> u) {
      for (std::size_t i = 0; i < n; ++i) {
        if (f.test(i) && !mat.designates(u[i])) return true;
      }
      std::vector<Element> seeds(n);
      for (std::size_t i = 0; i < n; ++i) seeds[i] = static_cast<Element>(i * nb + u[i]);
      for (Element e : generated_subalgebra(ab, seeds)) {
        if (f.test(e / nb) && !mat.designates(e % nb)) return true;
      }
      maps.emplace_back(u.begin(), u.end());
      coords.push_back(c);
      return true;
    });
  }

  // Subalgebra of A x prod B generated by the canonical tuples, with parents
  // kept for witness terms.
  std::size_t width = coords.size();
  std::vector<std::vector<Element>> items;
  struct Origin {
    int op = -1;  // -1: generator
    std::vector<std::size_t> args;
  };
  std::vector<Origin> origin;
  std::unordered_map<std::vector<Element>, std::size_t, VecHash> seen;

  auto term_of = [&](std::size_t id) {
    std::function<Term(std::size_t)> build = [&](std::size_t k) -> Term {
      if (origin[k].op < 0) return Term::variable("x" + std::to_string(items[k][0]));
      std::vector<Term> args;
      for (auto c : origin[k].args) args.push_back(build(c));
      return Term::apply(sig[origin[k].op].name, std::move(args));
    };
    return build(id);
  };

  std::optional<std::size_t> bad;
  auto insert = [&](std::vector<Element> tuple, Origin o) {
    auto [it, inserted] = seen.try_emplace(tuple, items.size());
    if (!inserted) return;
    if (items.size() >= limits.product_guard) {
      throw BoundExceeded("filter check: product subalgebra over " + std::to_string(width - 1) +
                          " compatible maps exceeds " + std::to_string(limits.product_guard) +
                          " elements");
    }
    bool all_designated = true;
    for (std::size_t c = 1; c < width && all_designated; ++c) {
      all_designated = coords[c].designated->test(tuple[c]);
    }
    items.push_back(std::move(tuple));
    origin.push_back(std::move(o));
    if (all_designated && !f.test(items.back()[0]) && !bad) bad = items.size() - 1;
  };

  for (Element e = 0; e < n; ++e) {
    std::vector<Element> t(width);
    t[0] = e;
    for (std::size_t c = 1; c < width; ++c) t[c] = maps[c - 1][e];
    insert(std::move(t), Origin{});
  }
  std::vector<Element> args_local;
  for (std::size_t i = 0; i < items.size() && !bad; ++i) {
    for (std::size_t op = 0; op < sig.size() && !bad; ++op) {
      std::size_t arity = sig[op].arity;
      // Tuples over [0, i] in which i occurs, the first occurrence at p.
      for (std::size_t p = 0; p < arity && !bad; ++p) {
        std::vector<std::size_t> idx(arity, 0);
        idx[p] = i;
        auto limit = [&](std::size_t q) { return q < p ? i : i + 1; };
        bool empty = false;
        for (std::size_t q = 0; q < arity; ++q) {
          if (q != p && limit(q) == 0) empty = true;
        }
        if (empty) continue;
        while (!bad) {
          std::vector<Element> out(width);
          args_local.resize(arity);
          for (std::size_t c = 0; c < width; ++c) {
            for (std::size_t q = 0; q < arity; ++q) args_local[q] = items[idx[q]][c];
            out[c] = coords[c].algebra->apply(coords[c].op[op], args_local);
          }
          insert(std::move(out), Origin{static_cast<int>(op), idx});
          std::size_t q = arity;
          bool done = true;
          while (q > 0) {
            --q;
            if (q == p) continue;
            if (++idx[q] < limit(q)) {
              done = false;
              break;
            }
            idx[q] = 0;
          }
          if (done) break;
        }
      }
    }
  }
  if (!bad) return FilterCheck{};
  std::ostringstream why;
  why << "every compatible valuation designates " << to_string(term_of(*bad))
      << " but its value " << items[*bad][0] << " under x_a = a is not in F";
  return FilterCheck{false, why.str()};
}

FilterCheck is_filter_by_calculus(FiniteAlgebra const& a, Subset const& f, Calculus const& h,
                                  Limits const& limits) {
  if (!(a.signature() == h.signature)) {
    throw ValidationError("algebra and calculus have different signatures");
  }
  if (f.size() != a.size()) throw ValidationError("subset does not match the carrier size");
  auto guard = [&](std::size_t k, std::string const& what) {
    double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(a.size());
    if (total > static_cast<double>(limits.max_maps)) {
      throw BoundExceeded("filter check: " + what + " has too many valuations");
    }
  };
  for (auto const& r : h.rules) {
    std::vector<Term> ts = r.premises;
    ts.push_back(r.conclusion);
    VarSet vars = vars_of(ts);
    guard(vars.size(), "rule " + r.name);
    std::string why;
    for_each_assignment(a.size(), vars.size(), [&](std::span<Element const> values) {
      for (auto const& p : r.premises) {
        if (!f.test(evaluate(a, p, vars, values))) return true;
      }
      if (f.test(evaluate(a, r.conclusion, vars, values))) return true;
      why = "rule " + r.name + " fails under " + describe(vars, values);
      return false;
    });
    if (!why.empty()) return FilterCheck{false, why};
  }
  if (h.schemes.empty()) return FilterCheck{};
  Congruence omega = leibniz(a, f);
  for (auto const& s : h.schemes) {
    VarSet vars = var_union(s.lhs.vars(), s.rhs.vars());
    guard(vars.size(), "scheme " + s.name);
    std::string why;
    for_each_assignment(a.size(), vars.size(), [&](std::span<Element const> values) {
      Element l = evaluate(a, s.lhs, vars, values);
      Element r = evaluate(a, s.rhs, vars, values);
      if (omega.related(l, r)) return true;
      why = "scheme " + s.name + " separates " + std::to_string(l) + " and " + std::to_string(r) +
            " under " + describe(vars, values);
      return false;
    });
    if (!why.empty()) return FilterCheck{false, why};
  }
  return FilterCheck{};
}

FilterCheck is_filter(FiniteAlgebra const& a, Subset const& f, LogicPresentation const& l,
                      Limits const& limits) {
  if (l.is_matrices()) return is_filter_by_matrices(a, f, l.matrices(), limits);
  return is_filter_by_calculus(a, f, l.calculus().calculus, limits);
}

std::vector<Subset> filters_above(FiniteAlgebra const& a, Subset const& below,
                                  LogicPresentation const& l, Limits const& limits) {
  std::size_t n = a.size();
  std::vector<Element> free;
  for (Element e = 0; e < n; ++e) {
    if (!below.test(e)) free.push_back(e);
  }
  if (free.size() > limits.max_subsets) {
    throw BoundExceeded("filter enumeration: " + std::to_string(free.size()) +
                        " free elements exceed the subset bound " +
                        std::to_string(limits.max_subsets));
  }
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    Subset s = below;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) s.set(free[i]);
    }
    if (is_filter(a, s, l, limits).is_filter) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FilterLattice enumerate_filters(FiniteAlgebra const& a, LogicPresentation const& l,
                                Limits const& limits) {
  if (a.size() > limits.max_subsets) {
    throw BoundExceeded("filter enumeration: carrier " + std::to_string(a.size()) +
                        " exceeds the subset bound " + std::to_string(limits.max_subsets));
  }
  FilterLattice out{a, filters_above(a, Subset(a.size()), l, limits)};
  for (auto const& x : out.filters) {
    for (auto const& y : out.filters) {
      if (std::find(out.filters.begin(), out.filters.end(), x & y) == out.filters.end()) {
        throw std::logic_error("filter family is not closed under intersection");
      }
    }
  }
  if (out.filters.empty() || out.filters.back().count() != a.size()) {
    throw std::logic_error("full carrier failed the filter check");
  }
  return out;
}

Subset filter_generated(FiniteAlgebra const& a, LogicPresentation const& l, Subset const& x,
                        Limits const& limits) {
  Subset out(a.size());
  out.set();
  for (auto const& g : filters_above(a, x, l, limits)) out &= g;
  return out;
}

namespace {

std::vector<std::vector<Element>> basic_translations(FiniteAlgebra const& a) {
  std::size_t n = a.size();
  std::vector<std::vector<Element>> out;
  auto const& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::size_t arity = sig[op].arity;
    std::vector<Element> args(arity);
    for (std::size_t slot = 0; slot < arity; ++slot) {
      for_each_assignment(n, arity - 1, [&](std::span<Element const> params) {
        std::vector<Element> fn(n);
        for (Element x = 0; x < n; ++x) {
          for (std::size_t i = 0, k = 0; i < arity; ++i) args[i] = i == slot ? x : params[k++];
          fn[x] = a.apply(op, args);
        }
        out.push_back(std::move(fn));
        return true;
      });
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Congruence from_relation(std::size_t n, std::function<bool(Element, Element)> const& related) {
  Congruence c;
  c.block_of.resize(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y <= x; ++y) {
      if (related(x, y)) {
        c.block_of[x] = y;
        break;
      }
    }
  }
  return c;
}

}  // namespace

Congruence leibniz(FiniteAlgebra const& a, Subset const& f) {
  std::size_t n = a.size();
  if (f.size() != n) throw ValidationError("subset does not match the carrier size");
  std::vector<char> sep(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) sep[x * n + y] = f.test(x) != f.test(y);
  }
  auto translations = basic_translations(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (sep[x * n + y]) continue;
        for (auto const& t : translations) {
          if (sep[t[x] * n + t[y]]) {
            sep[x * n + y] = sep[y * n + x] = 1;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return from_relation(n, [&](Element x, Element y) { return !sep[x * n + y]; });
}

Congruence leibniz_by_polynomials(FiniteAlgebra const& a, Subset const& f, Limits const& limits) {
  auto polys = unary_polynomial_functions(a, limits);
  return from_relation(a.size(), [&](Element x, Element y) {
    for (auto const& p : polys) {
      if (f.test(p[x]) != f.test(p[y])) return false;
    }
    return true;
  });
}

Congruence suszko(FiniteAlgebra const& a, Subset const& f, LogicPresentation const& l,
                  Limits const& limits) {
  FilterCheck c = is_filter(a, f, l, limits);
  if (!c.is_filter) throw ValidationError("not a filter: " + c.reason);
  Congruence theta = total_congruence(a.size());
  for (auto const& g : filters_above(a, f, l, limits)) theta = meet(theta, leibniz(a, g));
  return theta;
}

Congruence suszko_by_generation(FiniteAlgebra const& a, Subset const& f,
                                LogicPresentation const& l, Limits const& limits) {
  FilterCheck c = is_filter(a, f, l, limits);
  if (!c.is_filter) throw ValidationError("not a filter: " + c.reason);
  std::vector<Subset> gen;
  for (Element e = 0; e < a.size(); ++e) {
    Subset x = f;
    x.set(e);
    gen.push_back(filter_generated(a, l, x, limits));
  }
  auto polys = unary_polynomial_functions(a, limits);
  return from_relation(a.size(), [&](Element x, Element y) {
    for (auto const& p : polys) {
      if (gen[p[x]] != gen[p[y]]) return false;
    }
    return true;
  });
}

LogicalMatrix reduce(LogicalMatrix const& m, Congruence const& theta) {
  if (theta.size() != m.size()) throw ValidationError("congruence does not match the carrier");
  for (Element x = 0; x < m.size(); ++x) {
    if (m.designates(x) != m.designates(theta.block_of[x])) {
      throw ValidationError("congruence is not compatible with the designated set");
    }
  }
  Quotient q = quotient(m.algebra, theta);
  Subset g(q.algebra.size());
  for (Element x = 0; x < m.size(); ++x) {
    if (m.designates(x)) g.set(q.projection.map[x]);
  }
  return LogicalMatrix(std::move(q.algebra), std::move(g));
}

bool is_model(LogicalMatrix const& m, LogicPresentation const& l, Limits const& limits) {
  return is_filter(m.algebra, m.designated, l, limits).is_filter;
}

bool is_leibniz_reduced(LogicalMatrix const& m) {
  return leibniz(m.algebra, m.designated).is_identity();
}

bool is_suszko_reduced(LogicalMatrix const& m, LogicPresentation const& l, Limits const& limits) {
  if (!is_model(m, l, limits)) return false;
  return suszko(m.algebra, m.designated, l, limits).is_identity();
}

bool has_trivial_submatrix(LogicalMatrix const& m) {
  for (Element e : elements_of(m.designated)) {
    Element seed[] = {e};
    bool inside = true;
    for (Element s : generated_subalgebra(m.algebra, seed)) inside = inside && m.designates(s);
    if (inside) return true;
  }
  return false;
}

EquationCheck check_equation_in_K(MatrixPresentation const& m, Term const& eps,
                                  Term const& delta) {
  m.validate();
  check_terms(m.signature(), {eps}, delta);
  VarSet vars = var_union(eps.vars(), delta.vars());
  for (std::size_t mi = 0; mi < m.matrices.size(); ++mi) {
    FiniteAlgebra const& a = m.matrices[mi].algebra;
    std::optional<CounterModel> found;
    for_each_assignment(a.size(), vars.size(), [&](std::span<Element const> values) {
      if (evaluate(a, eps, vars, values) == evaluate(a, delta, vars, values)) return true;
      found = CounterModel{mi, make_valuation(vars, values)};
      return false;
    });
    if (found) return EquationCheck{false, found};
  }
  return EquationCheck{};
}

Verdict partition_term_check(LogicPresentation const& l, PartitionTerm const& t,
                             Limits const& limits) {
  Term x = Term::variable(t.x());
  auto equations = partition_equations(l.signature(), t);
  if (l.is_matrices()) {
    if (!entails(l.matrices(), {x}, t.term()).holds) return Verdict::kFalse;
    for (auto const& e : equations) {
      if (!check_equation_in_K(l.matrices(), e.lhs, e.rhs).holds) return Verdict::kFalse;
    }
    return Verdict::kTrue;
  }
  if (consequence(l, {x}, t.term(), limits).verdict != Verdict::kTrue) return Verdict::kUnknown;
  for (auto const& e : equations) {
    if (consequence(l, {e.lhs}, e.rhs, limits).verdict != Verdict::kTrue) return Verdict::kUnknown;
    if (consequence(l, {e.rhs}, e.lhs, limits).verdict != Verdict::kTrue) return Verdict::kUnknown;
  }
  return Verdict::kTrue;
}

}  // namespace plonka
