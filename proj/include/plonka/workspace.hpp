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

// Named structures loaded from the line-oriented structure file format
// described in docs/FORMATS.md, and the printer producing that format.

#ifndef PLONKA_WORKSPACE_HPP_
#define PLONKA_WORKSPACE_HPP_

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "plonka/plonka.hpp"

namespace plonka {

// Parse or reference error with a 1-based source location.
class WorkspaceError : public std::runtime_error {
 public:
  WorkspaceError(std::string source, std::size_t line, std::size_t column, std::string message);

  std::string const& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct NamedAlgebra {
  std::string signature;
  FiniteAlgebra algebra;
  std::vector<std::string> elements;
};

struct NamedMatrix {
  std::string algebra;
  LogicalMatrix matrix;
};

struct NamedSystem {
  DirectedSystemOfMatrices system;
  std::vector<std::string> indices;
  std::vector<std::string> components;  // matrix names, one per index
};

struct NamedCalculus {
  std::string signature;
  Calculus calculus;
};

struct NamedLogic {
  LogicPresentation presentation;
  std::vector<std::string> sources;  // matrix names or the calculus name
};

// A term abbreviation: name(params) expands to body. The body is kept as
// text and parsed at each use over the signature of the use site.
struct Definition {
  std::vector<Symbol> params;
  std::string body;
};

class Workspace {
 public:
  Workspace() = default;
  // Lookups fall back to `parent`; definitions here may shadow it.
  explicit Workspace(std::shared_ptr<Workspace const> parent) : parent_(std::move(parent)) {}

  // Throws WorkspaceError; on error the workspace is left unchanged.
  void load(std::string_view text, std::string const& source);
  void load_file(std::string const& path);

  Signature const& signature(std::string const& name) const;
  NamedAlgebra const& algebra(std::string const& name) const;
  NamedMatrix const& matrix(std::string const& name) const;
  NamedSystem const& system(std::string const& name) const;
  NamedCalculus const& calculus(std::string const& name) const;
  // A logic, a calculus (scheme depth 1) or a single matrix.
  LogicPresentation logic(std::string const& name) const;

  bool has_signature(std::string const& name) const;
  bool has_algebra(std::string const& name) const;
  bool has_matrix(std::string const& name) const;
  bool has_calculus(std::string const& name) const;
  bool has_logic(std::string const& name) const;

  // Parses a term over `sig`, expanding definitions. Throws ParseError.
  Term parse_term(std::string_view text, Signature const& sig) const;
  std::vector<Term> parse_term_list(std::string_view text, Signature const& sig) const;

  // Element name lookup for matrices in this workspace; falls back to the
  // decimal index for anonymous matrices.
  std::vector<std::string> element_names(std::string const& matrix_name) const;

  // Element names for each matrix of a logic reference; empty when the
  // reference is a calculus.
  std::vector<std::vector<std::string>> logic_element_names(std::string const& name) const;

  std::vector<std::string> names() const;  // every item, sorted

 private:
  friend class WorkspaceParser;

  Definition const* definition(std::string const& name) const;

  std::shared_ptr<Workspace const> parent_;
  std::map<std::string, Signature> signatures_;
  std::map<std::string, NamedAlgebra> algebras_;
  std::map<std::string, NamedMatrix> matrices_;
  std::map<std::string, NamedSystem> systems_;
  std::map<std::string, NamedCalculus> calculi_;
  std::map<std::string, NamedLogic> logics_;
  std::map<std::string, Definition> definitions_;
};

// The shipped fixture corpus, parsed once.
std::shared_ptr<Workspace const> builtin_workspace();

// Printers for the structure format. Element names default to indices.
std::string print_signature(std::string const& name, Signature const& sig);
std::string print_algebra(std::string const& name, std::string const& signature,
                          FiniteAlgebra const& a, std::vector<std::string> const& elements = {});
std::string print_matrix(std::string const& name, std::string const& algebra,
                         LogicalMatrix const& m, std::vector<std::string> const& elements = {});
std::string print_calculus(std::string const& name, std::string const& signature,
                           Calculus const& h);
// Components and their algebras are printed as `<name>.<index>` items.
std::string print_system(std::string const& name, std::string const& signature,
                         DirectedSystemOfMatrices const& x,
                         std::vector<std::string> const& indices = {},
                         std::vector<std::vector<std::string>> const& elements = {});

// Default element names: "0", "1", ...
std::vector<std::string> index_names(std::size_t n);

}  // namespace plonka

#endif  // PLONKA_WORKSPACE_HPP_
