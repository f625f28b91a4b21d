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

#include "plonka/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace plonka {

namespace {

class Interner {
 public:
  Interner() { lookup(""); }

  std::uint32_t lookup(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      auto it = ids_.find(std::string(name));
      if (it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), names_.size());
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  std::string const& name(std::uint32_t id) const {
    std::shared_lock lock(mutex_);
    return names_[id];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  // deque: references stay valid while other threads intern.
  std::deque<std::string> names_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class TermParser {
 public:
  TermParser(std::string_view text, Signature const& sig) : text_(text), sig_(sig) {}

  Term parse_single() {
    Term t = parse();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

  std::vector<Term> parse_list() {
    std::vector<Term> out;
    skip_ws();
    if (pos_ == text_.size()) return out;
    out.push_back(parse());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(parse());
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError("expected ',' or end of input", pos_);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term parse() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) {
      throw ParseError("expected identifier", pos_);
    }
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string_view ident = text_.substr(start, pos_ - start);
    auto op = sig_.find(ident);
    skip_ws();
    if (!op) {
      if (pos_ < text_.size() && text_[pos_] == '(') {
        throw ParseError("unknown operation '" + std::string(ident) + "'", start);
      }
      return Term::variable(ident);
    }
    Operation const& o = sig_[*op];
    if (pos_ >= text_.size() || text_[pos_] != '(') {
      throw ParseError("operation '" + std::string(ident) + "' needs " +
                           std::to_string(o.arity) + " argument(s)",
                       start);
    }
    ++pos_;
    std::vector<Term> args;
    args.push_back(parse());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      args.push_back(parse());
      skip_ws();
    }
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    if (static_cast<int>(args.size()) != o.arity) {
      throw ParseError("arity mismatch for '" + std::string(ident) + "': expected " +
                           std::to_string(o.arity) + ", got " + std::to_string(args.size()),
                       start);
    }
    return Term::apply(o.name, std::move(args));
  }

  std::string_view text_;
  Signature const& sig_;
  std::size_t pos_ = 0;
};

void print(Term const& t, std::string& out) {
  out += t.symbol().name();
  if (t.is_variable()) return;
  out += '(';
  bool first = true;
  for (auto const& a : t.args()) {
    if (!first) out += ", ";
    first = false;
    print(a, out);
  }
  out += ')';
}

int compare(Term const& a, Term const& b) {
  if (a.same_node(b)) return 0;
  if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
  if (a.is_variable() != b.is_variable()) return a.is_variable() ? -1 : 1;
  if (a.symbol() != b.symbol()) {
    return a.symbol().name() < b.symbol().name() ? -1 : 1;
  }
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    int c = compare(a.args()[i], b.args()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) { return Symbol(interner().lookup(name)); }

std::string const& Symbol::name() const { return interner().name(id_); }

VarSet var_union(VarSet const& a, VarSet const& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool var_subset(VarSet const& a, VarSet const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Signature::Signature(std::initializer_list<std::pair<std::string_view, int>> ops) {
  for (auto const& [name, arity] : ops) add(name, arity);
}

void Signature::add(std::string_view name, int arity) {
  if (arity < 1) {
    throw ValidationError("operation '" + std::string(name) +
                          "' has arity " + std::to_string(arity) +
                          "; constants are not allowed");
  }
  if (find(name)) throw ValidationError("duplicate operation '" + std::string(name) + "'");
  ops_.push_back({Symbol::intern(name), arity});
}

std::optional<std::size_t> Signature::find(Symbol name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name.name() == name) return i;
  }
  return std::nullopt;
}

bool operator==(Signature const& a, Signature const& b) {
  if (a.ops_.size() != b.ops_.size()) return false;
  for (auto const& op : a.ops_) {
    auto j = b.find(op.name);
    if (!j || b.ops_[*j].arity != op.arity) return false;
  }
  return true;
}

Term Term::variable(Symbol name) {
  auto node = std::make_shared<Node>();
  node->is_variable = true;
  node->symbol = name;
  node->vars = {name};
  node->hash = mix(0x51ed27, name.id());
  return Term(std::move(node));
}

Term Term::apply(Symbol op, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->symbol = op;
  std::size_t h = mix(0xa11ce, op.id());
  std::size_t depth = 0;
  std::size_t size = 1;
  VarSet vars;
  for (auto const& a : args) {
    h = mix(h, a.hash());
    depth = std::max(depth, a.depth());
    size += a.size();
    vars = vars.empty() ? a.vars() : var_union(vars, a.vars());
  }
  node->args = std::move(args);
  node->vars = std::move(vars);
  node->depth = depth + 1;
  node->size = size;
  node->hash = h;
  return Term(std::move(node));
}

bool operator==(Term const& a, Term const& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (a.node_->is_variable != b.node_->is_variable || a.node_->symbol != b.node_->symbol) {
    return false;
  }
  auto const& xs = a.node_->args;
  auto const& ys = b.node_->args;
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] == ys[i])) return false;
  }
  return true;
}

bool operator<(Term const& a, Term const& b) { return compare(a, b) < 0; }

Term parse_term(std::string_view text, Signature const& sig) {
  return TermParser(text, sig).parse_single();
}

std::vector<Term> parse_term_list(std::string_view text, Signature const& sig) {
  return TermParser(text, sig).parse_list();
}

std::string to_string(Term const& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(std::span<Term const> ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    print(ts[i], out);
  }
  return out;
}

void check_well_formed(Term const& t, Signature const& sig) {
  if (t.is_variable()) {
    if (sig.contains(t.symbol())) {
      throw ValidationError("operation '" + t.symbol().name() + "' used as a variable");
    }
    return;
  }
  auto op = sig.find(t.symbol());
  if (!op) throw ValidationError("unknown operation '" + t.symbol().name() + "'");
  if (static_cast<std::size_t>(sig[*op].arity) != t.args().size()) {
    throw ValidationError("arity mismatch for '" + t.symbol().name() + "'");
  }
  for (auto const& a : t.args()) check_well_formed(a, sig);
}

VarSet vars_of(Term const& t) { return t.vars(); }

VarSet vars_of(std::span<Term const> ts) {
  VarSet out;
  for (auto const& t : ts) out = var_union(out, t.vars());
  return out;
}

Term substitute(Term const& t, Substitution const& s) {
  if (s.empty()) return t;
  if (t.is_variable()) {
    auto it = s.find(t.symbol());
    return it == s.end() ? t : it->second;
  }
  bool touched = false;
  for (auto const& v : t.vars()) {
    if (s.count(v)) {
      touched = true;
      break;
    }
  }
  if (!touched) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (auto const& a : t.args()) args.push_back(substitute(a, s));
  return Term::apply(t.symbol(), std::move(args));
}

Substitution compose(Substitution const& first, Substitution const& second) {
  Substitution out;
  for (auto const& [v, t] : first) out.emplace(v, substitute(t, second));
  for (auto const& [v, t] : second) out.emplace(v, t);  // no-op when v already bound
  return out;
}

std::size_t term_depth(Term const& t) { return t.depth(); }

bool match(Term const& pattern, Term const& target, Substitution& s) {
  if (pattern.is_variable()) {
    auto [it, inserted] = s.try_emplace(pattern.symbol(), target);
    return inserted || it->second == target;
  }
  if (target.is_variable() || pattern.symbol() != target.symbol() ||
      pattern.args().size() != target.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match(pattern.args()[i], target.args()[i], s)) return false;
  }
  return true;
}

Symbol fresh_variable(VarSet const& avoid, std::string_view base) {
  for (std::size_t k = 0;; ++k) {
    std::string name(base);
    if (k) name += std::to_string(k);
    Symbol s = Symbol::intern(name);
    if (!std::binary_search(avoid.begin(), avoid.end(), s)) return s;
  }
}

Term plug(Term const& context, Symbol hole, Term const& filler) {
  return substitute(context, Substitution{{hole, filler}});
}

}  // namespace plonka
