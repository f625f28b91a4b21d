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

#include "plonka/plonka.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace plonka {

JoinSemilattice::JoinSemilattice(std::size_t size, std::vector<std::size_t> join)
    : size_(size), join_(std::move(join)) {
  if (size_ == 0) throw ValidationError("semilattice must be nonempty");
  if (join_.size() != size_ * size_) throw ValidationError("join table is not total");
  for (auto v : join_) {
    if (v >= size_) throw ValidationError("join table leaves the index set");
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (this->join(i, i) != i) throw ValidationError("join is not idempotent");
    for (std::size_t j = 0; j < size_; ++j) {
      if (this->join(i, j) != this->join(j, i)) throw ValidationError("join is not commutative");
      for (std::size_t k = 0; k < size_; ++k) {
        if (this->join(i, this->join(j, k)) != this->join(this->join(i, j), k)) {
          throw ValidationError("join is not associative");
        }
      }
    }
  }
}

JoinSemilattice JoinSemilattice::chain(std::size_t n) {
  std::vector<std::size_t> join(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) join[i * n + j] = std::max(i, j);
  }
  return JoinSemilattice(n, std::move(join));
}

SystemReport validate_system(DirectedSystemOfMatrices const& x) {
  SystemReport rep;
  auto violation = [&](std::string s) {
    rep.ok = false;
    rep.violations.push_back(std::move(s));
  };
  std::size_t n = x.index.size();
  if (x.components.size() != n || x.homs.size() != n) {
    violation("system needs one component and one hom row per index");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x.homs[i].size() != n) {
      violation("hom row " + std::to_string(i) + " has the wrong length");
      return rep;
    }
    if (!(x.components[i].algebra.signature() == x.components[0].algebra.signature())) {
      violation("component " + std::to_string(i) + " has a different signature");
      return rep;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto const& f = x.homs[i][j];
      std::string name = "f_" + std::to_string(i) + std::to_string(j);
      if (!x.index.leq(i, j)) {
        if (!f.empty()) violation(name + " given for incomparable or reversed indices");
        continue;
      }
      LogicalMatrix const& src = x.components[i];
      LogicalMatrix const& dst = x.components[j];
      if (f.size() != src.size()) {
        violation(name + " is not total");
        continue;
      }
      bool in_range = std::all_of(f.begin(), f.end(), [&](Element e) { return e < dst.size(); });
      if (!in_range) {
        violation(name + " leaves the target carrier");
        continue;
      }
      if (!is_homomorphism(src.algebra, dst.algebra, f)) violation(name + " is not a homomorphism");
      if (i == j) {
        for (Element a = 0; a < f.size(); ++a) {
          if (f[a] != a) {
            violation(name + " is not the identity");
            break;
          }
        }
      }
      for (Element a = 0; a < f.size(); ++a) {
        if (src.designates(a) && !dst.designates(f[a])) {
          violation(name + " maps designated " + std::to_string(a) + " outside the target filter");
          break;
        }
      }
    }
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!x.index.leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!x.index.leq(j, k)) continue;
        for (Element a = 0; a < x.components[i].size(); ++a) {
          if (x.homs[j][k][x.homs[i][j][a]] != x.homs[i][k][a]) {
            violation("f_" + std::to_string(i) + std::to_string(k) + " differs from f_" +
                      std::to_string(j) + std::to_string(k) + " after f_" + std::to_string(i) +
                      std::to_string(j) + " at " + std::to_string(a));
            break;
          }
        }
      }
    }
  }
  return rep;
}

PlonkaSum plonka_sum(DirectedSystemOfMatrices const& x) {
  SystemReport rep = validate_system(x);
  if (!rep.ok) throw ValidationError("invalid directed system: " + rep.violations.front());
  std::size_t n = x.index.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + x.components[i].size();
  PlonkaSum out;
  for (std::size_t i = 0; i < n; ++i) {
    for (Element a = 0; a < x.components[i].size(); ++a) out.tag.emplace_back(i, a);
  }
  std::size_t total = offset[n];
  Signature const& sig = x.components[0].algebra.signature();
  std::vector<OperationTable> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Element> local(sig[op].arity);
    tables.push_back(make_table(total, sig[op].arity, [&](std::span<Element const> args) {
      std::size_t j = out.tag[args[0]].first;
      for (Element g : args) j = x.index.join(j, out.tag[g].first);
      for (std::size_t k = 0; k < args.size(); ++k) {
        auto [i, a] = out.tag[args[k]];
        local[k] = x.homs[i][j][a];
      }
      FiniteAlgebra const& aj = x.components[j].algebra;
      return static_cast<Element>(offset[j] + aj.apply(aj.op_index(sig[op].name), local));
    }));
  }
  Subset designated(total);
  for (std::size_t g = 0; g < total; ++g) {
    auto [i, a] = out.tag[g];
    if (x.components[i].designates(a)) designated.set(g);
  }
  out.matrix = LogicalMatrix(FiniteAlgebra(sig, total, std::move(tables)), std::move(designated));
  return out;
}

LogicalMatrix trivial_matrix(Signature const& sig) {
  std::vector<OperationTable> tables;
  for (auto const& op : sig.operations()) {
    tables.push_back(make_table(1, op.arity, [](std::span<Element const>) { return Element{0}; }));
  }
  Subset all(1);
  all.set();
  return LogicalMatrix(FiniteAlgebra(sig, 1, std::move(tables)), std::move(all));
}

DirectedSystemOfMatrices one_lift(LogicalMatrix const& m) {
  DirectedSystemOfMatrices x;
  x.index = JoinSemilattice::chain(2);
  x.components = {m, trivial_matrix(m.algebra.signature())};
  std::vector<Element> id(m.size());
  std::iota(id.begin(), id.end(), Element{0});
  x.homs = {{id, std::vector<Element>(m.size(), 0)}, {{}, {0}}};
  return x;
}

IdentityCheck verify_partition_identities(FiniteAlgebra const& a, PartitionTerm const& t) {
  for (auto const& e : partition_equations(a.signature(), t)) {
    VarSet vars = var_union(e.lhs.vars(), e.rhs.vars());
    std::optional<IdentityFailure> failure;
    for_each_assignment(a.size(), vars.size(), [&](std::span<Element const> values) {
      Element l = evaluate(a, e.lhs, vars, values);
      Element r = evaluate(a, e.rhs, vars, values);
      if (l == r) return true;
      failure = IdentityFailure{e.name, vars, {values.begin(), values.end()}, l, r};
      return false;
    });
    if (failure) return IdentityCheck{false, failure};
  }
  return IdentityCheck{};
}

namespace {

std::string render(IdentityFailure const& f) {
  std::ostringstream out;
  out << f.identity << " fails at {";
  for (std::size_t i = 0; i < f.variables.size(); ++i) {
    out << (i ? ", " : "") << f.variables[i].name() << "=" << f.tuple[i];
  }
  out << "}: " << f.lhs << " != " << f.rhs;
  return out.str();
}

}  // namespace

Decomposition decompose(LogicalMatrix const& m, PartitionTerm const& t) {
  FiniteAlgebra const& a = m.algebra;
  IdentityCheck ic = verify_partition_identities(a, t);
  if (!ic.ok) throw DecompositionError("not a partition function: " + render(*ic.failure));
  std::size_t n = a.size();
  VarSet xy = t.x() < t.y() ? VarSet{t.x(), t.y()} : VarSet{t.y(), t.x()};
  bool x_first = xy[0] == t.x();
  std::vector<Element> dot(n * n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      Element vals[2] = {x_first ? p : q, x_first ? q : p};
      dot[p * n + q] = evaluate(a, t.term(), xy, vals);
    }
  }
  auto d = [&](Element p, Element q) { return dot[p * n + q]; };
  auto same = [&](Element p, Element q) { return d(p, q) == p && d(q, p) == q; };

  std::vector<std::size_t> fiber_of(n, n);
  std::vector<std::vector<Element>> fibers;
  for (Element p = 0; p < n; ++p) {
    if (fiber_of[p] != n) continue;
    std::vector<Element> block;
    for (Element q = p; q < n; ++q) {
      if (same(p, q)) {
        if (fiber_of[q] != n) {
          throw DecompositionError("fiber relation is not transitive at " + std::to_string(q));
        }
        fiber_of[q] = fibers.size();
        block.push_back(q);
      }
    }
    fibers.push_back(std::move(block));
  }
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (same(p, q) != (fiber_of[p] == fiber_of[q])) {
        throw DecompositionError("fiber relation is not an equivalence at (" + std::to_string(p) +
                                 ", " + std::to_string(q) + ")");
      }
    }
  }
  std::size_t k = fibers.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Element> sub = generated_subalgebra(a, fibers[i]);
    if (sub != fibers[i]) {
      throw DecompositionError("fiber " + std::to_string(i) + " is not a subuniverse");
    }
  }
  std::vector<char> le(k * k, 0);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (d(q, p) == q) le[fiber_of[p] * k + fiber_of[q]] = 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!le[i * k + i]) throw DecompositionError("fiber order is not reflexive");
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && le[i * k + j] && le[j * k + i]) {
        throw DecompositionError("fiber order is not antisymmetric");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (le[i * k + j] && le[j * k + l] && !le[i * k + l]) {
          throw DecompositionError("fiber order is not transitive");
        }
      }
    }
  }
  std::vector<std::size_t> join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::optional<std::size_t> least;
      for (std::size_t u = 0; u < k; ++u) {
        if (!le[i * k + u] || !le[j * k + u]) continue;
        bool below_all = true;
        for (std::size_t w = 0; w < k; ++w) {
          if (le[i * k + w] && le[j * k + w] && !le[u * k + w]) below_all = false;
        }
        if (below_all) least = u;
      }
      if (!least) {
        throw DecompositionError("fibers " + std::to_string(i) + " and " + std::to_string(j) +
                                 " have no join");
      }
      join[i * k + j] = *least;
    }
  }

  Decomposition out;
  out.system.index = JoinSemilattice(k, std::move(join));
  std::vector<std::vector<Element>> local_of(k);
  out.tag.resize(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < fibers[i].size(); ++l) {
      out.tag[fibers[i][l]] = {i, static_cast<Element>(l)};
    }
    Subset f(fibers[i].size());
    for (std::size_t l = 0; l < fibers[i].size(); ++l) {
      if (m.designates(fibers[i][l])) f.set(l);
    }
    out.system.components.emplace_back(subalgebra(a, fibers[i]), std::move(f));
  }
  out.system.homs.assign(k, std::vector<std::vector<Element>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!out.system.index.leq(i, j)) continue;
      std::vector<Element> f(fibers[i].size());
      for (std::size_t l = 0; l < fibers[i].size(); ++l) {
        Element p = fibers[i][l];
        Element image = d(p, fibers[j][0]);
        for (Element b : fibers[j]) {
          if (d(p, b) != image) {
            throw DecompositionError("f_" + std::to_string(i) + std::to_string(j) +
                                     " depends on the choice of b at " + std::to_string(p));
          }
        }
        if (fiber_of[image] != j) {
          throw DecompositionError("f_" + std::to_string(i) + std::to_string(j) + " leaves fiber " +
                                   std::to_string(j));
        }
        f[l] = out.tag[image].second;
      }
      out.system.homs[i][j] = std::move(f);
    }
  }
  SystemReport rep = validate_system(out.system);
  if (!rep.ok) throw DecompositionError("recovered system is invalid: " + rep.violations.front());

  PlonkaSum sum = plonka_sum(out.system);
  std::vector<Element> to_sum(n);
  for (Element p = 0; p < n; ++p) {
    auto it = std::find(sum.tag.begin(), sum.tag.end(), out.tag[p]);
    to_sum[p] = static_cast<Element>(it - sum.tag.begin());
  }
  if (!is_homomorphism(a, sum.matrix.algebra, to_sum)) {
    throw DecompositionError("the sum of the fibers is not the input algebra");
  }
  for (Element p = 0; p < n; ++p) {
    if (m.designates(p) != sum.matrix.designates(to_sum[p])) {
      throw DecompositionError("the sum of the fibers changes the designated set");
    }
  }
  return out;
}

Subset upset_filter(DirectedSystemOfMatrices const& x, std::vector<std::size_t> const& upset) {
  std::size_t n = x.index.size();
  std::vector<bool> in(n, false);
  for (auto i : upset) {
    if (i >= n) throw ValidationError("index outside the semilattice");
    in[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (in[i] && x.index.leq(i, j) && !in[j]) throw ValidationError("index set is not an upset");
    }
  }
  std::size_t total = 0;
  for (auto const& c : x.components) total += c.size();
  Subset g(total);
  std::size_t base = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (Element a = 0; a < x.components[i].size(); ++a) {
      if (in[i] || x.components[i].designates(a)) g.set(base + a);
    }
    base += x.components[i].size();
  }
  return g;
}

ConditionReport suszko_reduced_condition(DirectedSystemOfMatrices const& x) {
  std::size_t n = x.index.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    if (!x.components[lo].is_trivial()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lo || !x.index.leq(lo, i)) continue;
      bool witnessed = false;
      for (std::size_t j = 0; j < n && !witnessed; ++j) {
        witnessed = x.index.leq(lo, j) && !x.index.leq(i, j) && !x.components[j].is_trivial();
      }
      if (!witnessed) return ConditionReport{false, std::make_pair(lo, i)};
    }
  }
  return ConditionReport{};
}

std::size_t trivial_component_count(DirectedSystemOfMatrices const& x) {
  return std::count_if(x.components.begin(), x.components.end(),
                       [](LogicalMatrix const& m) { return m.is_trivial(); });
}

namespace {

std::vector<std::vector<Element>> matrix_isomorphisms(LogicalMatrix const& a,
                                                      LogicalMatrix const& b) {
  std::vector<std::vector<Element>> out;
  if (a.designated.count() != b.designated.count()) return out;
  return isomorphisms(a.algebra, b.algebra,
                      [&](Element x, Element y) { return a.designates(x) == b.designates(y); });
}

}  // namespace

bool isomorphic(LogicalMatrix const& a, LogicalMatrix const& b) {
  if (a.size() != b.size() || a.designated.count() != b.designated.count()) return false;
  return !isomorphisms(a.algebra, b.algebra,
                       [&](Element x, Element y) { return a.designates(x) == b.designates(y); }, 1)
              .empty();
}

bool isomorphic(DirectedSystemOfMatrices const& x, DirectedSystemOfMatrices const& y) {
  std::size_t n = x.index.size();
  if (n != y.index.size()) return false;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool order_ok = true;
    for (std::size_t i = 0; i < n && order_ok; ++i) {
      for (std::size_t j = 0; j < n && order_ok; ++j) {
        order_ok = pi[x.index.join(i, j)] == y.index.join(pi[i], pi[j]);
      }
    }
    if (!order_ok) continue;
    std::vector<std::vector<std::vector<Element>>> candidates(n);
    bool possible = true;
    for (std::size_t i = 0; i < n && possible; ++i) {
      candidates[i] = matrix_isomorphisms(x.components[i], y.components[pi[i]]);
      possible = !candidates[i].empty();
    }
    if (!possible) continue;
    std::vector<std::size_t> choice(n, 0);
    // Backtrack, checking phi_j . f_ij = g_ij . phi_i against chosen indices.
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
      if (i == n) return true;
      for (std::size_t c = 0; c < candidates[i].size(); ++c) {
        choice[i] = c;
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) {
          for (auto [lo, hi] : {std::pair{j, i}, std::pair{i, j}}) {
            if (!ok || !x.index.leq(lo, hi)) continue;
            auto const& f = x.homs[lo][hi];
            auto const& g = y.homs[pi[lo]][pi[hi]];
            auto const& phi_lo = candidates[lo][choice[lo]];
            auto const& phi_hi = candidates[hi][choice[hi]];
            for (Element e = 0; e < f.size() && ok; ++e) ok = phi_hi[f[e]] == g[phi_lo[e]];
          }
        }
        if (ok && assign(i + 1)) return true;
      }
      return false;
    };
    if (assign(0)) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

LogicPresentation companion_of(LogicPresentation const& l, PartitionTerm const& t) {
  if (l.is_matrices()) {
    std::vector<LogicalMatrix> lifted;
    for (auto const& m : l.matrices().matrices) lifted.push_back(plonka_sum(one_lift(m)).matrix);
    return LogicPresentation::by_matrices(std::move(lifted));
  }
  return LogicPresentation::by_calculus(transform_left(l.calculus().calculus, t),
                                        l.calculus().scheme_depth);
}

}  // namespace plonka
