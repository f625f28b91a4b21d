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

// Syntactic substrate: interned symbols, signatures, terms and substitutions.

#ifndef PLONKA_KERNEL_HPP_
#define PLONKA_KERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plonka {

// Interned identifier. Equality and hashing are by id; `name()` recovers the
// spelling. Ids are assigned in first-seen order, so they are stable for a
// given sequence of interning calls.
class Symbol {
 public:
  Symbol() = default;
  static Symbol intern(std::string_view name);

  std::string const& name() const;
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) noexcept { return a.id_ <=> b.id_; }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Sorted by id, duplicate free.
using VarSet = std::vector<Symbol>;

VarSet var_union(VarSet const& a, VarSet const& b);
bool var_subset(VarSet const& a, VarSet const& b);

struct Operation {
  Symbol name;
  int arity = 0;
};

// Algebraic language. Constants are not allowed: every arity is at least one.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<std::pair<std::string_view, int>> ops);

  void add(std::string_view name, int arity);
  std::optional<std::size_t> find(Symbol name) const;
  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(Symbol name) const { return find(name).has_value(); }

  std::vector<Operation> const& operations() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  Operation const& operator[](std::size_t i) const { return ops_[i]; }

  friend bool operator==(Signature const& a, Signature const& b);

 private:
  std::vector<Operation> ops_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  // The message without the position suffix.
  std::string const& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Immutable term with structural equality. Copies share the node.
class Term {
 public:
  static Term variable(Symbol name);
  static Term variable(std::string_view name) { return variable(Symbol::intern(name)); }
  static Term apply(Symbol op, std::vector<Term> args);
  static Term apply(std::string_view op, std::vector<Term> args) {
    return apply(Symbol::intern(op), std::move(args));
  }

  bool is_variable() const noexcept { return node_->is_variable; }
  Symbol symbol() const noexcept { return node_->symbol; }
  std::vector<Term> const& args() const noexcept { return node_->args; }
  VarSet const& vars() const noexcept { return node_->vars; }
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  bool same_node(Term const& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(Term const& a, Term const& b);
  // Total order: depth, then structure. Used for canonical output ordering.
  friend bool operator<(Term const& a, Term const& b);

 private:
  struct Node {
    bool is_variable = false;
    Symbol symbol;
    std::vector<Term> args;
    VarSet vars;
    std::size_t depth = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
  std::shared_ptr<Node const> node_;
};

struct TermHash {
  std::size_t operator()(Term const& t) const noexcept { return t.hash(); }
};

using Substitution = std::map<Symbol, Term>;

// Grammar: term := IDENT | IDENT '(' term (',' term)* ')'. An IDENT is a
// variable iff it is not an operation of `sig`.
Term parse_term(std::string_view text, Signature const& sig);
// Comma separated list of terms; empty or all-blank text gives an empty list.
std::vector<Term> parse_term_list(std::string_view text, Signature const& sig);

std::string to_string(Term const& t);
std::string to_string(std::span<Term const> ts);

// Throws ValidationError when an operation is unknown or misapplied.
void check_well_formed(Term const& t, Signature const& sig);

VarSet vars_of(Term const& t);
VarSet vars_of(std::span<Term const> ts);

Term substitute(Term const& t, Substitution const& s);
// (second ∘ first): apply `first`, then `second`.
Substitution compose(Substitution const& first, Substitution const& second);

std::size_t term_depth(Term const& t);

// First-order matching: extends `s` so that substitute(pattern, s) == target.
bool match(Term const& pattern, Term const& target, Substitution& s);

// A variable named `base`, `base1`, `base2`, ... not in `avoid`.
Symbol fresh_variable(VarSet const& avoid, std::string_view base = "z");

// Replaces every occurrence of `hole` in `context` by `filler`.
Term plug(Term const& context, Symbol hole, Term const& filler);

}  // namespace plonka

template <>
struct std::hash<plonka::Symbol> {
  std::size_t operator()(plonka::Symbol s) const noexcept { return s.id(); }
};

#endif  // PLONKA_KERNEL_HPP_
