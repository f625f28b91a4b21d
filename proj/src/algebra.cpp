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

#include "plonka/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plonka {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Decodes a mixed-radix index into `out` (first argument most significant).
void decode(std::size_t idx, std::size_t n, std::span<Element> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(idx % n);
    idx /= n;
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t size, std::vector<OperationTable> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
  if (size_ == 0) throw ValidationError("algebra carrier must be nonempty");
  if (tables_.size() != sig_.size()) {
    throw ValidationError("expected " + std::to_string(sig_.size()) + " tables, got " +
                          std::to_string(tables_.size()));
  }
  std::uint32_t max_id = 0;
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    auto const& op = sig_[i];
    auto& tab = tables_[i];
    if (tab.arity != op.arity) {
      throw ValidationError("table arity mismatch for '" + op.name.name() + "'");
    }
    if (tab.values.size() != power(size_, op.arity)) {
      throw ValidationError("table for '" + op.name.name() + "' is not total");
    }
    for (Element v : tab.values) {
      if (v >= size_) {
        throw ValidationError("table for '" + op.name.name() + "' leaves the carrier");
      }
    }
    max_id = std::max(max_id, op.name.id());
  }
  by_symbol_.assign(max_id + 1, -1);
  for (std::size_t i = 0; i < sig_.size(); ++i) by_symbol_[sig_[i].name.id()] = static_cast<int>(i);
}

int FiniteAlgebra::op_index(Symbol name) const {
  return name.id() < by_symbol_.size() ? by_symbol_[name.id()] : -1;
}

bool operator==(FiniteAlgebra const& a, FiniteAlgebra const& b) {
  if (a.size_ != b.size_ || !(a.sig_ == b.sig_)) return false;
  for (std::size_t i = 0; i < a.sig_.size(); ++i) {
    int j = b.op_index(a.sig_[i].name);
    if (a.tables_[i].values != b.tables_[j].values) return false;
  }
  return true;
}

OperationTable make_table(std::size_t size, int arity,
                          std::function<Element(std::span<Element const>)> const& f) {
  OperationTable tab;
  tab.arity = arity;
  std::size_t total = power(size, arity);
  tab.values.resize(total);
  std::vector<Element> args(arity);
  for (std::size_t idx = 0; idx < total; ++idx) {
    decode(idx, size, args);
    tab.values[idx] = f(args);
  }
  return tab;
}

Valuation::Valuation(std::initializer_list<std::pair<Symbol, Element>> entries) {
  for (auto const& [v, a] : entries) set(v, a);
}

void Valuation::set(Symbol v, Element a) {
  for (auto& e : entries_) {
    if (e.first == v) {
      e.second = a;
      return;
    }
  }
  entries_.emplace_back(v, a);
}

std::optional<Element> Valuation::get(Symbol v) const {
  for (auto const& e : entries_) {
    if (e.first == v) return e.second;
  }
  return std::nullopt;
}

namespace {

Element eval_fast(FiniteAlgebra const& a, Term const& t, std::span<Symbol const> vars,
                  std::span<Element const> values) {
  if (t.is_variable()) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == t.symbol()) return values[i];
    }
    throw UnboundVariable("unbound variable '" + t.symbol().name() + "'");
  }
  int op = a.op_index(t.symbol());
  if (op < 0) throw ValidationError("algebra has no operation '" + t.symbol().name() + "'");
  auto const& args = t.args();
  std::size_t n = a.size();
  std::size_t idx = 0;
  for (auto const& arg : args) idx = idx * n + eval_fast(a, arg, vars, values);
  return a.table(op).values[idx];
}

}  // namespace

Element evaluate(FiniteAlgebra const& a, Term const& t, std::span<Symbol const> vars,
                 std::span<Element const> values) {
  return eval_fast(a, t, vars, values);
}

Element evaluate(FiniteAlgebra const& a, Term const& t, Valuation const& v) {
  std::vector<Symbol> vars;
  std::vector<Element> values;
  for (auto const& [s, e] : v.entries()) {
    if (e >= a.size()) throw ValidationError("valuation leaves the carrier");
    vars.push_back(s);
    values.push_back(e);
  }
  return eval_fast(a, t, vars, values);
}

bool for_each_assignment(std::size_t carrier, std::size_t count,
                         std::function<bool(std::span<Element const>)> const& f) {
  std::vector<Element> values(count, 0);
  while (true) {
    if (!f(values)) return false;
    std::size_t i = count;
    while (i > 0) {
      --i;
      if (++values[i] < carrier) break;
      values[i] = 0;
      if (i == 0) return true;
    }
    if (count == 0) return true;
  }
}

bool is_homomorphism(FiniteAlgebra const& source, FiniteAlgebra const& target,
                     std::span<Element const> map) {
  if (!(source.signature() == target.signature())) {
    throw ValidationError("homomorphism between algebras of different signatures");
  }
  if (map.size() != source.size()) throw ValidationError("homomorphism map is not total");
  for (Element v : map) {
    if (v >= target.size()) throw ValidationError("homomorphism map leaves the target");
  }
  auto const& sig = source.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int top = target.op_index(sig[op].name);
    int arity = sig[op].arity;
    std::vector<Element> image(arity);
    bool ok = for_each_assignment(source.size(), arity, [&](std::span<Element const> args) {
      for (int i = 0; i < arity; ++i) image[i] = map[args[i]];
      return map[source.apply(op, args)] == target.apply(top, image);
    });
    if (!ok) return false;
  }
  return true;
}

bool is_homomorphism(Homomorphism const& h) { return is_homomorphism(h.source, h.target, h.map); }

std::vector<Element> generated_subalgebra(FiniteAlgebra const& a, std::span<Element const> seeds) {
  if (seeds.empty()) throw ValidationError("empty seed set generates nothing without constants");
  std::vector<bool> in(a.size(), false);
  std::vector<Element> members;
  for (Element s : seeds) {
    if (s >= a.size()) throw ValidationError("seed outside the carrier");
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto const& sig = a.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t arity = sig[op].arity;
      std::vector<Element> snapshot = members;
      std::vector<Element> args(arity);
      for_each_assignment(snapshot.size(), arity, [&](std::span<Element const> idx) {
        for (std::size_t i = 0; i < arity; ++i) args[i] = snapshot[idx[i]];
        Element r = a.apply(op, args);
        if (!in[r]) {
          in[r] = true;
          members.push_back(r);
          changed = true;
        }
        return true;
      });
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteAlgebra subalgebra(FiniteAlgebra const& a, std::span<Element const> universe) {
  std::vector<Element> sorted(universe.begin(), universe.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(a.size(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  std::vector<OperationTable> tables;
  auto const& sig = a.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Element> args(sig[op].arity);
    tables.push_back(make_table(sorted.size(), sig[op].arity, [&](std::span<Element const> loc) {
      for (std::size_t i = 0; i < loc.size(); ++i) args[i] = sorted[loc[i]];
      int r = pos[a.apply(op, args)];
      if (r < 0) throw ValidationError("subset is not closed under '" + sig[op].name.name() + "'");
      return static_cast<Element>(r);
    }));
  }
  return FiniteAlgebra(sig, sorted.size(), std::move(tables));
}

std::vector<Element> product_coordinates(std::span<FiniteAlgebra const> factors, Element e) {
  std::vector<Element> coords(factors.size());
  std::size_t rest = e;
  for (std::size_t i = factors.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(rest % factors[i].size());
    rest /= factors[i].size();
  }
  return coords;
}

FiniteAlgebra direct_product(std::span<FiniteAlgebra const> factors) {
  if (factors.empty()) throw ValidationError("direct product of an empty list");
  Signature const& sig = factors[0].signature();
  for (auto const& f : factors) {
    if (!(f.signature() == sig)) throw ValidationError("direct product across signatures");
  }
  std::size_t total = 1;
  for (auto const& f : factors) total *= f.size();
  auto encode = [&](std::span<Element const> coords) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i].size() + coords[i];
    return static_cast<Element>(e);
  };
  std::vector<OperationTable> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    int arity = sig[op].arity;
    std::vector<std::vector<Element>> arg_coords(arity);
    std::vector<Element> local(arity);
    std::vector<Element> result(factors.size());
    tables.push_back(make_table(total, arity, [&](std::span<Element const> args) {
      for (int k = 0; k < arity; ++k) arg_coords[k] = product_coordinates(factors, args[k]);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        for (int k = 0; k < arity; ++k) local[k] = arg_coords[k][i];
        result[i] = factors[i].apply(factors[i].op_index(sig[op].name), local);
      }
      return encode(result);
    }));
  }
  return FiniteAlgebra(sig, total, std::move(tables));
}

bool Congruence::is_identity() const {
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    if (block_of[i] != i) return false;
  }
  return true;
}

bool Congruence::is_total() const {
  for (Element b : block_of) {
    if (b != 0) return false;
  }
  return true;
}

std::size_t Congruence::block_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < block_of.size(); ++i) c += block_of[i] == i;
  return c;
}

Congruence identity_congruence(std::size_t n) {
  Congruence c;
  c.block_of.resize(n);
  std::iota(c.block_of.begin(), c.block_of.end(), Element{0});
  return c;
}

Congruence total_congruence(std::size_t n) { return Congruence{std::vector<Element>(n, 0)}; }

Congruence congruence_from_labels(std::span<std::size_t const> labels) {
  Congruence c;
  c.block_of.resize(labels.size());
  std::map<std::size_t, Element> first;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = first.try_emplace(labels[i], static_cast<Element>(i));
    c.block_of[i] = it->second;
  }
  return c;
}

bool is_congruence(FiniteAlgebra const& a, Congruence const& theta) {
  if (theta.size() != a.size()) return false;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    Element r = theta.block_of[i];
    if (r > i || theta.block_of[r] != r) return false;
  }
  // Compatibility: changing one argument within its block keeps the result
  // within a block; one-slot changes suffice by transitivity.
  auto const& sig = a.signature();
  std::size_t n = a.size();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::size_t arity = sig[op].arity;
    std::vector<Element> args(arity);
    bool ok = for_each_assignment(n, arity, [&](std::span<Element const> base) {
      std::copy(base.begin(), base.end(), args.begin());
      Element r0 = theta.block_of[a.apply(op, args)];
      for (std::size_t slot = 0; slot < arity; ++slot) {
        Element orig = args[slot];
        for (Element b = 0; b < n; ++b) {
          if (b == orig || !theta.related(b, orig)) continue;
          args[slot] = b;
          if (theta.block_of[a.apply(op, args)] != r0) return false;
        }
        args[slot] = orig;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

Congruence meet(Congruence const& a, Congruence const& b) {
  std::vector<std::size_t> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) labels[i] = a.block_of[i] * a.size() + b.block_of[i];
  return congruence_from_labels(labels);
}

bool refines(Congruence const& theta, Congruence const& phi) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!phi.related(i, theta.block_of[i])) return false;
  }
  return true;
}

Quotient quotient(FiniteAlgebra const& a, Congruence const& theta) {
  if (!is_congruence(a, theta)) throw ValidationError("partition is not a congruence");
  std::vector<Element> reps;
  std::vector<Element> block_index(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (theta.block_of[i] == i) reps.push_back(static_cast<Element>(i));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    block_index[i] = static_cast<Element>(
        std::lower_bound(reps.begin(), reps.end(), theta.block_of[i]) - reps.begin());
  }
  auto const& sig = a.signature();
  std::vector<OperationTable> tables;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Element> args(sig[op].arity);
    tables.push_back(make_table(reps.size(), sig[op].arity, [&](std::span<Element const> blocks) {
      for (std::size_t i = 0; i < blocks.size(); ++i) args[i] = reps[blocks[i]];
      return block_index[a.apply(op, args)];
    }));
  }
  FiniteAlgebra q(sig, reps.size(), std::move(tables));
  Homomorphism proj{a, q, block_index};
  return Quotient{std::move(q), std::move(proj)};
}

std::vector<Congruence> enumerate_congruences(FiniteAlgebra const& a, Limits const& limits) {
  std::size_t n = a.size();
  if (n > limits.max_carrier) {
    throw BoundExceeded("congruence enumeration: carrier " + std::to_string(n) +
                        " exceeds bound " + std::to_string(limits.max_carrier));
  }
  std::vector<Congruence> out;
  // Restricted growth strings enumerate each set partition once.
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
    if (i == n) {
      Congruence c = congruence_from_labels(rgs);
      if (is_congruence(a, c)) out.push_back(std::move(c));
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 0);
  }
  std::sort(out.begin(), out.end(),
            [](auto const& x, auto const& y) { return x.block_of < y.block_of; });
  return out;
}

std::vector<UnaryFunction> unary_polynomial_functions(FiniteAlgebra const& a,
                                                      Limits const& limits) {
  std::size_t n = a.size();
  if (n > limits.max_carrier) {
    throw BoundExceeded("unary polynomial enumeration: carrier " + std::to_string(n) +
                        " exceeds bound " + std::to_string(limits.max_carrier));
  }
  // Subuniverse of A^A generated by the identity and the constants. The
  // function at `head` is combined with earlier ones only, so every argument
  // tuple is visited once.
  std::set<UnaryFunction> seen;
  std::vector<UnaryFunction> queue;
  auto add = [&](UnaryFunction f) {
    if (seen.insert(f).second) queue.push_back(std::move(f));
  };
  UnaryFunction id(n);
  std::iota(id.begin(), id.end(), Element{0});
  add(id);
  for (Element c = 0; c < n; ++c) add(UnaryFunction(n, c));
  auto const& sig = a.signature();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t arity = sig[op].arity;
      if (arity == 0) continue;
      for_each_assignment(head + 1, arity, [&](std::span<Element const> pick) {
        if (std::find(pick.begin(), pick.end(), head) == pick.end()) return true;
        std::vector<Element> args(arity);
        UnaryFunction q(n);
        for (Element x = 0; x < n; ++x) {
          for (std::size_t i = 0; i < arity; ++i) args[i] = queue[pick[i]][x];
          q[x] = a.apply(op, args);
        }
        add(std::move(q));
        return true;
      });
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Element>> isomorphisms(FiniteAlgebra const& a, FiniteAlgebra const& b,
                                               std::function<bool(Element, Element)> const& allowed,
                                               std::size_t max_count) {
  std::vector<std::vector<Element>> out;
  if (a.size() != b.size() || !(a.signature() == b.signature())) return out;
  std::size_t const n = a.size();
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> perm(n, kUnset);
  std::vector<char> used(n, 0);
  std::vector<int> b_op;
  for (auto const& op : a.signature().operations()) b_op.push_back(b.op_index(op.name));

  // Every table entry whose arguments lie in [0, k] and include k.
  auto consistent = [&](Element k) {
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      std::size_t const ar = static_cast<std::size_t>(a.signature()[op].arity);
      std::vector<Element> args(ar, 0), images(ar);
      while (true) {
        if (std::find(args.begin(), args.end(), k) != args.end()) {
          for (std::size_t i = 0; i < ar; ++i) images[i] = perm[args[i]];
          Element r = a.apply(op, args);
          Element img = b.apply(static_cast<std::size_t>(b_op[op]), images);
          if (perm[r] != kUnset ? perm[r] != img : used[img] != 0) return false;
        }
        std::size_t i = ar;
        while (i > 0 && ++args[i - 1] > k) args[--i] = 0;
        if (i == 0) break;
      }
    }
    return true;
  };

  std::function<void(Element)> extend = [&](Element k) {
    if (out.size() >= max_count) return;
    if (k == n) {
      out.push_back(perm);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v] || (allowed && !allowed(k, v))) continue;
      perm[k] = v;
      used[v] = 1;
      if (consistent(k)) extend(k + 1);
      used[v] = 0;
      perm[k] = kUnset;
    }
  };
  extend(0);
  return out;
}

}  // namespace plonka
