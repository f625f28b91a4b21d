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

#include "plonka/generators.hpp"

#include <algorithm>
#include <numeric>

#include "plonka/fixtures.hpp"

namespace plonka {

FiniteAlgebra random_algebra(Signature const& sig, std::size_t size, Rng& rng) {
  std::vector<OperationTable> tables;
  for (auto const& op : sig.operations()) {
    tables.push_back(make_table(size, op.arity, [&](std::span<Element const>) {
      return static_cast<Element>(rng.below(size));
    }));
  }
  return FiniteAlgebra(sig, size, std::move(tables));
}

namespace {

bool is_semilattice(std::size_t n, std::vector<std::size_t> const& t) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) return false;
      }
    }
  }
  return true;
}

bool isomorphic_tables(std::size_t n, std::vector<std::size_t> const& a,
                       std::vector<std::size_t> const& b) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; ok && j < n; ++j) {
        if (p[a[i * n + j]] != b[p[i] * n + p[j]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

std::vector<JoinSemilattice> semilattices_up_to_iso(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> choice(cells.size(), 0);
  while (true) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i) t[i * n + i] = i;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto [i, j] = cells[c];
      t[i * n + j] = t[j * n + i] = choice[c];
    }
    if (is_semilattice(n, t) &&
        std::none_of(found.begin(), found.end(),
                     [&](auto const& f) { return isomorphic_tables(n, f, t); })) {
      found.push_back(t);
    }
    std::size_t k = cells.size();
    while (k > 0 && ++choice[k - 1] == n) choice[--k] = 0;
    if (k == 0) break;
  }
  std::vector<JoinSemilattice> out;
  for (auto& t : found) out.emplace_back(n, std::move(t));
  return out;
}

std::vector<std::vector<Element>> filter_homomorphisms(LogicalMatrix const& a,
                                                       LogicalMatrix const& b) {
  std::vector<std::vector<Element>> out;
  for_each_assignment(b.size(), a.size(), [&](std::span<Element const> map) {
    for (Element x = 0; x < a.size(); ++x) {
      if (a.designates(x) && !b.designates(map[x])) return true;
    }
    if (is_homomorphism(a.algebra, b.algebra, map)) out.emplace_back(map.begin(), map.end());
    return true;
  });
  return out;
}

namespace {

struct SystemSearch {
  JoinSemilattice const& index;
  std::vector<LogicalMatrix> const& components;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // strict i < j in the order
  std::vector<std::vector<std::vector<Element>>> candidates;
  DirectedSystemOfMatrices x;
  std::vector<std::vector<char>> assigned;

  SystemSearch(JoinSemilattice const& idx, std::vector<LogicalMatrix> const& comps)
      : index(idx), components(comps) {
    std::size_t const n = idx.size();
    x.index = idx;
    x.components = comps;
    x.homs.assign(n, std::vector<std::vector<Element>>(n));
    assigned.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      x.homs[i][i].resize(comps[i].size());
      std::iota(x.homs[i][i].begin(), x.homs[i][i].end(), 0);
      assigned[i][i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && idx.leq(i, j)) {
          pairs.emplace_back(i, j);
          candidates.push_back(filter_homomorphisms(comps[i], comps[j]));
        }
      }
    }
  }

  // f_jk ∘ f_ij = f_ik for every triple whose maps are all assigned.
  bool consistent() const {
    std::size_t const n = index.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!assigned[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!assigned[j][k] || !assigned[i][k]) continue;
          for (Element a = 0; a < components[i].size(); ++a) {
            if (x.homs[j][k][x.homs[i][j][a]] != x.homs[i][k][a]) return false;
          }
        }
      }
    }
    return true;
  }

  template <typename Order, typename Visit>
  bool run(std::size_t p, Order&& order, Visit&& visit) {
    if (p == pairs.size()) return visit(x);
    auto [i, j] = pairs[p];
    for (std::size_t c : order(candidates[p].size())) {
      x.homs[i][j] = candidates[p][c];
      assigned[i][j] = 1;
      if (consistent() && !run(p + 1, order, visit)) return false;
      assigned[i][j] = 0;
    }
    x.homs[i][j].clear();
    return true;
  }
};

std::vector<std::size_t> iota_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

void for_each_system(JoinSemilattice const& index, std::vector<LogicalMatrix> const& components,
                     std::function<bool(DirectedSystemOfMatrices const&)> const& f) {
  SystemSearch s(index, components);
  s.run(0, iota_order, [&](DirectedSystemOfMatrices const& x) { return f(x); });
}

DirectedSystemOfMatrices random_chain_system(Rng& rng, std::size_t max_fibers,
                                             std::size_t max_size) {
  std::size_t const n = 1 + rng.below(max_fibers);
  std::vector<JoinSemilattice> shapes = semilattices_up_to_iso(n);
  JoinSemilattice const& index = shapes[rng.below(shapes.size())];
  std::vector<LogicalMatrix> comps;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t size = 1 + rng.below(max_size);
    Subset f(size);
    for (std::size_t e = rng.below(size); e < size; ++e) f.set(e);
    comps.emplace_back(fixtures::chain_lattice(size), f);
  }
  SystemSearch s(index, comps);
  auto shuffled = [&](std::size_t k) {
    std::vector<std::size_t> v = iota_order(k);
    for (std::size_t i = k; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    return v;
  };
  std::optional<DirectedSystemOfMatrices> found;
  s.run(0, shuffled, [&](DirectedSystemOfMatrices const& x) {
    found = x;
    return false;
  });
  // Maps onto the top elements always commute, so a system exists.
  if (!found) throw std::logic_error("no directed system over the chosen components");
  return *found;
}

}  // namespace plonka
