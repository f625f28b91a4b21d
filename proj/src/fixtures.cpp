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

#include "plonka/fixtures.hpp"

#include <numeric>

namespace plonka::fixtures {

namespace {

OperationTable lattice_table(std::string const& name, std::size_t n,
                             std::function<Element(Element, Element)> const& meet,
                             std::function<Element(Element, Element)> const& joinf) {
  if (name == "and") {
    return make_table(n, 2, [&](std::span<Element const> a) { return meet(a[0], a[1]); });
  }
  if (name == "or") {
    return make_table(n, 2, [&](std::span<Element const> a) { return joinf(a[0], a[1]); });
  }
  throw ValidationError("no lattice interpretation for '" + name + "'");
}

FiniteAlgebra lattice(std::size_t n, std::function<Element(Element, Element)> const& meet,
                      std::function<Element(Element, Element)> const& joinf) {
  Signature sig = lattice_signature();
  std::vector<OperationTable> tables;
  for (auto const& op : sig.operations()) tables.push_back(lattice_table(op.name.name(), n, meet, joinf));
  return FiniteAlgebra(sig, n, std::move(tables));
}

}  // namespace

FiniteAlgebra b2(Signature const& sig) {
  std::vector<OperationTable> tables;
  for (auto const& op : sig.operations()) {
    std::string const& name = op.name.name();
    if (name == "not" && op.arity == 1) {
      tables.push_back(make_table(2, 1, [](std::span<Element const> a) { return 1 - a[0]; }));
    } else if (op.arity == 2 && (name == "and" || name == "or")) {
      tables.push_back(lattice_table(
          name, 2, [](Element a, Element b) { return std::min(a, b); },
          [](Element a, Element b) { return std::max(a, b); }));
    } else {
      throw ValidationError("no Boolean interpretation for '" + name + "'");
    }
  }
  return FiniteAlgebra(sig, 2, std::move(tables));
}

LogicalMatrix b2_matrix(Signature const& sig) { return LogicalMatrix(b2(sig), make_subset(2, {1})); }

LogicalMatrix b2xb2_matrix(Signature const& sig) {
  std::vector<FiniteAlgebra> factors{b2(sig), b2(sig)};
  return LogicalMatrix(direct_product(factors), make_subset(4, {3}));
}

LogicalMatrix wk3_matrix(Signature const& sig) { return plonka_sum(one_lift(b2_matrix(sig))).matrix; }

FiniteAlgebra chain_lattice(std::size_t n) {
  return lattice(
      n, [](Element a, Element b) { return std::min(a, b); },
      [](Element a, Element b) { return std::max(a, b); });
}

FiniteAlgebra boolean_lattice4() {
  return lattice(
      4, [](Element a, Element b) { return a & b; }, [](Element a, Element b) { return a | b; });
}

LogicPresentation cl_matrices() { return LogicPresentation::by_matrices({b2_matrix()}); }

LogicPresentation cl_lattice_matrices() {
  return LogicPresentation::by_matrices({b2_matrix(lattice_signature())});
}

LogicPresentation pwk_matrices() { return LogicPresentation::by_matrices({wk3_matrix()}); }

JoinSemilattice semilattice_from_order(std::size_t n,
                                       std::vector<std::pair<std::size_t, std::size_t>> covers) {
  std::vector<char> le(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
  for (auto [lo, hi] : covers) le[lo * n + hi] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (le[i * n + k] && le[k * n + j]) le[i * n + j] = 1;
      }
    }
  }
  std::vector<std::size_t> join(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::size_t> least;
      for (std::size_t u = 0; u < n; ++u) {
        if (!le[i * n + u] || !le[j * n + u]) continue;
        bool below_all = true;
        for (std::size_t w = 0; w < n; ++w) {
          if (le[i * n + w] && le[j * n + w] && !le[u * n + w]) below_all = false;
        }
        if (below_all) least = u;
      }
      if (!least) throw ValidationError("order has no join for a pair of indices");
      join[i * n + j] = *least;
    }
  }
  return JoinSemilattice(n, std::move(join));
}

DirectedSystemOfMatrices chain_bool4_system() {
  DirectedSystemOfMatrices x;
  x.index = JoinSemilattice::chain(2);
  x.components = {LogicalMatrix(chain_lattice(3), make_subset(3, {1, 2})),
                  LogicalMatrix(boolean_lattice4(), make_subset(4, {1, 2, 3}))};
  x.homs = {{{0, 1, 2}, {0, 1, 3}}, {{}, {0, 1, 2, 3}}};
  return x;
}

DirectedSystemOfMatrices two_trivials_system() {
  DirectedSystemOfMatrices x;
  x.index = semilattice_from_order(
      8, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 7}});
  LogicalMatrix one = trivial_matrix(lattice_signature());
  LogicalMatrix l2(chain_lattice(2), make_subset(2, {1}));
  x.components = {one, one, l2, l2, l2, l2, l2, l2};
  x.homs.assign(8, std::vector<std::vector<Element>>(8));
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (!x.index.leq(i, j)) continue;
      if (i < 2) {
        x.homs[i][j] = {j < 2 ? Element{0} : Element{1}};
      } else {
        x.homs[i][j] = {0, 1};
      }
    }
  }
  return x;
}

}  // namespace plonka::fixtures
