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

#include "plonka/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace plonka {

namespace {

enum class Tok { kWord, kPunct, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  std::size_t end;
  std::size_t line;
  std::size_t column;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' ||
         static_cast<unsigned char>(c) >= 0x80;
}

std::string join(std::vector<std::string> const& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

WorkspaceError::WorkspaceError(std::string source, std::size_t line, std::size_t column,
                               std::string message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

class WorkspaceParser {
 public:
  WorkspaceParser(Workspace& ws, std::string_view text, std::string source)
      : ws_(ws), text_(text), source_(std::move(source)) {
    lex();
  }

  void run() {
    while (true) {
      skip_separators();
      Token const& t = peek();
      if (t.kind == Tok::kEnd) return;
      if (t.kind != Tok::kWord) fail(t, "expected a declaration");
      if (t.text == "signature") {
        parse_signature();
      } else if (t.text == "algebra") {
        parse_algebra();
      } else if (t.text == "matrix") {
        parse_matrix();
      } else if (t.text == "system") {
        parse_system();
      } else if (t.text == "calculus") {
        parse_calculus();
      } else if (t.text == "logic") {
        parse_logic();
      } else if (t.text == "define") {
        parse_define();
      } else {
        fail(t, "unknown declaration '" + t.text + "'");
      }
    }
  }

 private:
  // ---- lexing -------------------------------------------------------------

  void lex() {
    std::size_t i = 0, line = 1, col = 1;
    auto push = [&](Tok k, std::size_t start, std::size_t len, std::size_t l, std::size_t c) {
      tokens_.push_back({k, std::string(text_.substr(start, len)), start, start + len, l, c});
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '\n') {
        push(Tok::kNewline, i, 1, line, col);
        ++i;
        ++line;
        col = 1;
      } else if (c == '#') {
        while (i < text_.size() && text_[i] != '\n') ++i, ++col;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        ++col;
      } else if (is_word_char(c)) {
        std::size_t start = i, c0 = col;
        while (i < text_.size() && is_word_char(text_[i])) {
          // count UTF-8 continuation bytes as part of one column
          if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++col;
          ++i;
        }
        push(Tok::kWord, start, i - start, line, c0);
      } else if ((c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') ||
                 (c == '|' && i + 1 < text_.size() && text_[i + 1] == '-')) {
        push(Tok::kPunct, i, 2, line, col);
        i += 2;
        col += 2;
      } else if (std::string_view("{};:,()=").find(c) != std::string_view::npos) {
        push(Tok::kPunct, i, 1, line, col);
        ++i;
        ++col;
      } else {
        throw WorkspaceError(source_, line, col, std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Tok::kEnd, "", text_.size(), text_.size(), line, col});
  }

  // ---- token helpers ------------------------------------------------------

  Token const& peek() const { return tokens_[pos_]; }
  Token const& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(Token const& t, std::string const& message) const {
    throw WorkspaceError(source_, t.line, t.column, message);
  }

  bool at_punct(std::string_view p) const {
    return peek().kind == Tok::kPunct && peek().text == p;
  }
  bool at_word(std::string_view w) const { return peek().kind == Tok::kWord && peek().text == w; }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
    next();
  }
  Token const& word(std::string_view what) {
    if (peek().kind != Tok::kWord) fail(peek(), "expected " + std::string(what));
    return next();
  }
  std::size_t integer(std::string_view what) {
    Token const& t = word(what);
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), ::isdigit)) {
      fail(t, "expected " + std::string(what));
    }
    return std::stoul(t.text);
  }

  void skip_separators() {
    while (peek().kind == Tok::kNewline || at_punct(";")) next();
  }
  void skip_newlines() {
    while (peek().kind == Tok::kNewline) next();
  }
  // A statement ends at ';', a newline or a closing brace.
  void end_statement() {
    if (at_punct(";") || peek().kind == Tok::kNewline) {
      next();
      return;
    }
    if (at_punct("}") || peek().kind == Tok::kEnd) return;
    fail(peek(), "expected end of statement");
  }
  // Iterates statements of a { ... } block.
  template <typename F>
  void block(F&& statement) {
    skip_newlines();
    expect_punct("{");
    while (true) {
      skip_separators();
      if (at_punct("}")) {
        next();
        return;
      }
      if (peek().kind == Tok::kEnd) fail(peek(), "unterminated block");
      statement();
      end_statement();
    }
  }

  // Name followed by a check that no item of the kind exists here.
  template <typename Map>
  Token const& new_name(Map const& existing, std::string_view kind) {
    Token const& t = word(std::string(kind) + " name");
    if (existing.count(t.text)) fail(t, "redefinition of " + std::string(kind) + " '" + t.text + "'");
    return t;
  }

  template <typename F>
  auto resolve(Token const& t, F&& lookup) -> decltype(lookup()) {
    try {
      return lookup();
    } catch (ValidationError const& e) {
      fail(t, e.what());
    }
  }

  // Raw text of a term starting here, ending before a stop token at
  // parenthesis depth 0.
  Term term(Signature const& sig, std::initializer_list<std::string_view> stops) {
    Token const& first = peek();
    int depth = 0;
    std::size_t last_end = first.offset;
    while (true) {
      Token const& t = peek();
      if (t.kind == Tok::kEnd) break;
      if (depth == 0) {
        if (t.kind == Tok::kNewline) break;
        if (t.kind == Tok::kPunct && (t.text == ";" || t.text == "}")) break;
        if (t.kind == Tok::kPunct &&
            std::find(stops.begin(), stops.end(), t.text) != stops.end()) {
          break;
        }
      }
      if (t.kind == Tok::kPunct && t.text == "(") ++depth;
      if (t.kind == Tok::kPunct && t.text == ")") {
        if (depth == 0) break;
        --depth;
      }
      if (t.kind != Tok::kNewline) last_end = t.end;
      next();
    }
    if (last_end == first.offset) fail(first, "expected a term");
    std::string_view slice = text_.substr(first.offset, last_end - first.offset);
    try {
      return ws_.parse_term(slice, sig);
    } catch (ParseError const& e) {
      throw at_offset(first.offset + std::min(e.position(), slice.size()), e.what());
    } catch (ValidationError const& e) {
      fail(first, e.what());
    }
  }

  WorkspaceError at_offset(std::size_t offset, std::string const& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    return WorkspaceError(source_, line, col, message);
  }

  // ---- declarations -------------------------------------------------------

  void parse_signature() {
    Token const& kw = next();
    Token const& name = new_name(ws_.signatures_, "signature");
    Signature sig;
    block([&] {
      expect_word("op");
      Token const& op = word("operation name");
      std::size_t arity = integer("arity");
      try {
        sig.add(op.text, static_cast<int>(arity));
      } catch (ValidationError const& e) {
        fail(op, e.what());
      }
    });
    if (sig.size() == 0) fail(kw, "signature '" + name.text + "' has no operations");
    ws_.signatures_.emplace(name.text, sig);
  }

  void parse_algebra() {
    Token const& kw = next();
    Token const& name = new_name(ws_.algebras_, "algebra");
    expect_word("over");
    Token const& sig_tok = word("signature name");
    Signature const sig = resolve(sig_tok, [&] { return ws_.signature(sig_tok.text); });
    std::vector<std::string> elements;
    std::map<std::string, Element> index;
    std::vector<std::vector<std::optional<Element>>> values(sig.size());
    block([&] {
      Token const& head = word("'elements' or 'op'");
      if (head.text == "elements") {
        if (!elements.empty()) fail(head, "elements declared twice");
        while (peek().kind == Tok::kWord) {
          Token const& e = next();
          if (index.count(e.text)) fail(e, "duplicate element '" + e.text + "'");
          index.emplace(e.text, static_cast<Element>(elements.size()));
          elements.push_back(e.text);
        }
        if (elements.empty()) fail(head, "an algebra needs at least one element");
        for (std::size_t k = 0; k < sig.size(); ++k) {
          std::size_t cells = 1;
          for (int a = 0; a < sig[k].arity; ++a) {
            cells *= elements.size();
            if (cells > 10000000) fail(head, "operation table too large");
          }
          values[k].assign(cells, std::nullopt);
        }
        return;
      }
      if (head.text != "op") fail(head, "expected 'elements' or 'op'");
      if (elements.empty()) fail(head, "elements must be declared before operations");
      Token const& op = word("operation name");
      auto k = sig.find(op.text);
      if (!k) fail(op, "operation '" + op.text + "' is not in signature '" + sig_tok.text + "'");
      expect_punct(":");
      auto element = [&](Token const& t) {
        auto it = index.find(t.text);
        if (it == index.end()) fail(t, "unknown element '" + t.text + "'");
        return it->second;
      };
      std::size_t cell = 0;
      for (int a = 0; a < sig[*k].arity; ++a) {
        cell = cell * elements.size() + element(word("element"));
      }
      expect_punct("->");
      Token const& out = word("element");
      Element v = element(out);
      auto& slot = values[*k][cell];
      if (slot && *slot != v) fail(out, "conflicting table entry for '" + op.text + "'");
      slot = v;
    });
    if (elements.empty()) fail(kw, "algebra '" + name.text + "' declares no elements");
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      OperationTable t{sig[k].arity, {}};
      for (std::size_t cell = 0; cell < values[k].size(); ++cell) {
        if (!values[k][cell]) {
          std::vector<std::string> args(static_cast<std::size_t>(sig[k].arity));
          std::size_t rest = cell;
          for (std::size_t a = args.size(); a-- > 0;) {
            args[a] = elements[rest % elements.size()];
            rest /= elements.size();
          }
          fail(kw, "table of '" + sig[k].name.name() + "' is missing " + join(args, " "));
        }
        t.values.push_back(*values[k][cell]);
      }
      tables.push_back(std::move(t));
    }
    ws_.algebras_.emplace(name.text,
                          NamedAlgebra{sig_tok.text, FiniteAlgebra(sig, elements.size(), tables),
                                       elements});
  }

  void parse_matrix() {
    Token const& kw = next();
    Token const& name = new_name(ws_.matrices_, "matrix");
    std::optional<std::string> alg_name;
    NamedAlgebra const* alg = nullptr;
    std::optional<Subset> designated;
    block([&] {
      Token const& head = word("'algebra' or 'designated'");
      if (head.text == "algebra") {
        Token const& a = word("algebra name");
        alg = resolve(a, [&] { return &ws_.algebra(a.text); });
        alg_name = a.text;
      } else if (head.text == "designated") {
        if (!alg) fail(head, "the algebra must be given before the designated set");
        Subset f(alg->elements.size());
        while (peek().kind == Tok::kWord) {
          Token const& e = next();
          auto it = std::find(alg->elements.begin(), alg->elements.end(), e.text);
          if (it == alg->elements.end()) fail(e, "unknown element '" + e.text + "'");
          f.set(static_cast<std::size_t>(it - alg->elements.begin()));
        }
        designated = f;
      } else {
        fail(head, "expected 'algebra' or 'designated'");
      }
    });
    if (!alg) fail(kw, "matrix '" + name.text + "' has no algebra");
    if (!designated) designated = Subset(alg->elements.size());
    ws_.matrices_.emplace(name.text, NamedMatrix{*alg_name, LogicalMatrix(alg->algebra, *designated)});
  }

  void parse_system() {
    Token const& kw = next();
    Token const& name = new_name(ws_.systems_, "system");
    std::vector<std::string> indices;
    std::map<std::string, std::size_t> index_of;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> joins;
    std::vector<std::optional<std::string>> comp_names;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<Token, Token>>> hom_entries;
    std::map<std::pair<std::size_t, std::size_t>, Token> hom_at;
    bool have_semilattice = false;

    auto index = [&](Token const& t) {
      auto it = index_of.find(t.text);
      if (it == index_of.end()) fail(t, "unknown index '" + t.text + "'");
      return it->second;
    };

    block([&] {
      Token const& head = word("'semilattice', 'component' or 'hom'");
      if (head.text == "semilattice") {
        if (have_semilattice) fail(head, "semilattice declared twice");
        have_semilattice = true;
        block([&] {
          Token const& h = word("'elements' or 'join'");
          if (h.text == "elements") {
            while (peek().kind == Tok::kWord) {
              Token const& e = next();
              if (index_of.count(e.text)) fail(e, "duplicate index '" + e.text + "'");
              index_of.emplace(e.text, indices.size());
              indices.push_back(e.text);
            }
          } else if (h.text == "join") {
            std::size_t i = index(word("index"));
            std::size_t j = index(word("index"));
            expect_punct("->");
            Token const& kt = word("index");
            std::size_t k = index(kt);
            for (auto key : {std::pair{i, j}, std::pair{j, i}}) {
              auto [it, fresh] = joins.emplace(key, k);
              if (!fresh && it->second != k) fail(kt, "conflicting join");
            }
          } else {
            fail(h, "expected 'elements' or 'join'");
          }
        });
        if (indices.empty()) fail(head, "the semilattice has no elements");
        comp_names.assign(indices.size(), std::nullopt);
      } else if (head.text == "component") {
        if (!have_semilattice) fail(head, "the semilattice must come first");
        Token const& it = word("index");
        std::size_t i = index(it);
        expect_punct(":");
        Token const& m = word("matrix name");
        resolve(m, [&] { return &ws_.matrix(m.text); });
        if (comp_names[i]) fail(it, "component '" + it.text + "' given twice");
        comp_names[i] = m.text;
      } else if (head.text == "hom") {
        if (!have_semilattice) fail(head, "the semilattice must come first");
        Token const& it = word("index");
        std::size_t i = index(it);
        expect_punct("->");
        std::size_t j = index(word("index"));
        expect_punct(":");
        if (hom_at.count({i, j})) fail(it, "homomorphism given twice");
        hom_at.emplace(std::pair{i, j}, it);
        auto& entries = hom_entries[{i, j}];
        while (true) {
          Token const& a = word("element");
          expect_punct("->");
          Token const& b = word("element");
          entries.emplace_back(a, b);
          if (!at_punct(",")) break;
          next();
          skip_newlines();
        }
      } else {
        fail(head, "expected 'semilattice', 'component' or 'hom'");
      }
    });
    if (!have_semilattice) fail(kw, "system '" + name.text + "' has no semilattice");

    std::size_t const n = indices.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          auto it = joins.find({i, i});
          if (it != joins.end() && it->second != i) fail(kw, "join is not idempotent");
          table[i * n + j] = i;
          continue;
        }
        auto it = joins.find({i, j});
        if (it == joins.end()) fail(kw, "missing join of " + indices[i] + " and " + indices[j]);
        table[i * n + j] = it->second;
      }
    }
    NamedSystem out;
    out.indices = indices;
    try {
      out.system.index = JoinSemilattice(n, table);
    } catch (ValidationError const& e) {
      fail(kw, e.what());
    }
    std::vector<NamedAlgebra const*> algs(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!comp_names[i]) fail(kw, "missing component for index '" + indices[i] + "'");
      NamedMatrix const& m = ws_.matrix(*comp_names[i]);
      out.system.components.push_back(m.matrix);
      out.components.push_back(*comp_names[i]);
      algs[i] = &ws_.algebra(m.algebra);
    }
    out.system.homs.assign(n, std::vector<std::vector<Element>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!out.system.index.leq(i, j)) {
          if (hom_at.count({i, j})) {
            fail(hom_at.at({i, j}), "homomorphism between incomparable indices");
          }
          continue;
        }
        auto entries = hom_entries.find({i, j});
        auto& map = out.system.homs[i][j];
        if (entries == hom_entries.end()) {
          if (i != j) fail(kw, "missing homomorphism " + indices[i] + " -> " + indices[j]);
          for (Element a = 0; a < algs[i]->elements.size(); ++a) map.push_back(a);
          continue;
        }
        std::vector<std::optional<Element>> partial(algs[i]->elements.size());
        for (auto const& [a, b] : entries->second) {
          auto const& src = algs[i]->elements;
          auto const& dst = algs[j]->elements;
          auto ai = std::find(src.begin(), src.end(), a.text);
          if (ai == src.end()) fail(a, "unknown element '" + a.text + "'");
          auto bi = std::find(dst.begin(), dst.end(), b.text);
          if (bi == dst.end()) fail(b, "unknown element '" + b.text + "'");
          auto& slot = partial[static_cast<std::size_t>(ai - src.begin())];
          Element v = static_cast<Element>(bi - dst.begin());
          if (slot && *slot != v) fail(b, "conflicting homomorphism entry");
          slot = v;
        }
        for (std::size_t a = 0; a < partial.size(); ++a) {
          if (!partial[a]) {
            fail(hom_at.at({i, j}), "homomorphism does not map '" + algs[i]->elements[a] + "'");
          }
          map.push_back(*partial[a]);
        }
      }
    }
    SystemReport r = validate_system(out.system);
    if (!r.ok) fail(kw, "invalid system '" + name.text + "': " + r.violations.front());
    ws_.systems_.emplace(name.text, std::move(out));
  }

  std::string label() {
    expect_punct("(");
    Token const& first = peek();
    std::size_t end = first.offset;
    while (!at_punct(")")) {
      if (peek().kind == Tok::kNewline || peek().kind == Tok::kEnd) fail(first, "unterminated label");
      end = next().end;
    }
    if (end == first.offset) fail(first, "empty label");
    next();
    return std::string(text_.substr(first.offset, end - first.offset));
  }

  void parse_calculus() {
    Token const& kw = next();
    Token const& name = new_name(ws_.calculi_, "calculus");
    expect_word("over");
    Token const& sig_tok = word("signature name");
    Signature const sig = resolve(sig_tok, [&] { return ws_.signature(sig_tok.text); });
    Calculus h;
    h.name = name.text;
    h.signature = sig;
    block([&] {
      Token const& head = word("'axiom', 'rule' or 'scheme'");
      if (head.text == "axiom") {
        std::string l = label();
        expect_punct(":");
        h.rules.push_back({l, {}, term(sig, {})});
      } else if (head.text == "rule") {
        std::string l = label();
        expect_punct(":");
        std::vector<Term> premises;
        while (!at_punct("|-")) {
          premises.push_back(term(sig, {",", "|-"}));
          if (at_punct(",")) {
            next();
          } else if (!at_punct("|-")) {
            fail(peek(), "expected ',' or '|-'");
          }
        }
        next();
        h.rules.push_back({l, premises, term(sig, {})});
      } else if (head.text == "scheme") {
        std::string l = label();
        expect_punct(":");
        Term lhs = term(sig, {"="});
        expect_punct("=");
        h.schemes.push_back({l, lhs, term(sig, {})});
      } else {
        fail(head, "expected 'axiom', 'rule' or 'scheme'");
      }
    });
    try {
      validate_calculus(h);
    } catch (ValidationError const& e) {
      fail(kw, e.what());
    }
    ws_.calculi_.emplace(name.text, NamedCalculus{sig_tok.text, std::move(h)});
  }

  void parse_logic() {
    Token const& kw = next();
    Token const& name = new_name(ws_.logics_, "logic");
    std::vector<std::string> matrices;
    std::optional<std::string> calculus;
    std::size_t depth = 1;
    block([&] {
      Token const& head = word("'matrices', 'calculus' or 'scheme_depth'");
      if (head.text == "matrices") {
        while (peek().kind == Tok::kWord) {
          Token const& m = next();
          resolve(m, [&] { return &ws_.matrix(m.text); });
          matrices.push_back(m.text);
          if (at_punct(",")) next();
        }
      } else if (head.text == "calculus") {
        Token const& c = word("calculus name");
        resolve(c, [&] { return &ws_.calculus(c.text); });
        calculus = c.text;
      } else if (head.text == "scheme_depth") {
        depth = integer("scheme depth");
      } else {
        fail(head, "expected 'matrices', 'calculus' or 'scheme_depth'");
      }
    });
    if (matrices.empty() == !calculus) {
      fail(kw, "a logic is given either by matrices or by one calculus");
    }
    NamedLogic out;
    if (calculus) {
      out.presentation = LogicPresentation::by_calculus(ws_.calculus(*calculus).calculus, depth);
      out.sources = {*calculus};
    } else {
      std::vector<LogicalMatrix> ms;
      for (auto const& m : matrices) ms.push_back(ws_.matrix(m).matrix);
      try {
        out.presentation = LogicPresentation::by_matrices(ms);
      } catch (ValidationError const& e) {
        fail(kw, e.what());
      }
      out.sources = matrices;
    }
    ws_.logics_.emplace(name.text, std::move(out));
  }

  void parse_define() {
    next();
    Token const& name = new_name(ws_.definitions_, "definition");
    Definition d;
    expect_punct("(");
    std::set<std::string> seen;
    while (true) {
      Token const& p = word("parameter");
      if (!seen.insert(p.text).second) fail(p, "duplicate parameter '" + p.text + "'");
      d.params.push_back(Symbol::intern(p.text));
      if (at_punct(")")) break;
      expect_punct(",");
    }
    next();
    expect_punct("=");
    Token const& first = peek();
    std::size_t end = first.offset;
    int depth = 0;
    while (peek().kind != Tok::kEnd && !(depth == 0 && (peek().kind == Tok::kNewline ||
                                                         at_punct(";") || at_punct("}")))) {
      if (at_punct("(")) ++depth;
      if (at_punct(")")) --depth;
      end = next().end;
    }
    if (end == first.offset) fail(first, "expected a term");
    d.body = std::string(text_.substr(first.offset, end - first.offset));
    ws_.definitions_.emplace(name.text, std::move(d));
  }

  Workspace& ws_;
  std::string_view text_;
  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- Workspace ------------------------------------------------------------

void Workspace::load(std::string_view text, std::string const& source) {
  Workspace staged = *this;
  WorkspaceParser(staged, text, source).run();
  *this = std::move(staged);
}

void Workspace::load_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError(path, 0, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  load(os.str(), path);
}

namespace {

template <typename Map>
auto const* find_in(Map const& m, std::string const& name) {
  auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

#define PLONKA_LOOKUP(Type, method, member, kind)                          \
  Type const& Workspace::method(std::string const& name) const {            \
    for (Workspace const* w = this; w; w = w->parent_.get()) {              \
      if (auto const* p = find_in(w->member, name)) return *p;              \
    }                                                                        \
    throw ValidationError("unknown " kind " '" + name + "'");              \
  }                                                                          \
  bool Workspace::has_##method(std::string const& name) const {             \
    for (Workspace const* w = this; w; w = w->parent_.get()) {              \
      if (find_in(w->member, name)) return true;                            \
    }                                                                        \
    return false;                                                            \
  }

PLONKA_LOOKUP(Signature, signature, signatures_, "signature")
PLONKA_LOOKUP(NamedAlgebra, algebra, algebras_, "algebra")
PLONKA_LOOKUP(NamedMatrix, matrix, matrices_, "matrix")
PLONKA_LOOKUP(NamedCalculus, calculus, calculi_, "calculus")

#undef PLONKA_LOOKUP

NamedSystem const& Workspace::system(std::string const& name) const {
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    if (auto const* p = find_in(w->systems_, name)) return *p;
  }
  throw ValidationError("unknown system '" + name + "'");
}

bool Workspace::has_logic(std::string const& name) const {
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    if (find_in(w->logics_, name)) return true;
  }
  return false;
}

LogicPresentation Workspace::logic(std::string const& name) const {
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    if (auto const* p = find_in(w->logics_, name)) return p->presentation;
  }
  if (has_calculus(name)) return LogicPresentation::by_calculus(calculus(name).calculus);
  if (has_matrix(name)) return LogicPresentation::by_matrices({matrix(name).matrix});
  throw ValidationError("unknown logic '" + name + "'");
}

Definition const* Workspace::definition(std::string const& name) const {
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    if (auto const* p = find_in(w->definitions_, name)) return p;
  }
  return nullptr;
}

namespace {

constexpr int kMaxExpansion = 64;

}  // namespace

Term Workspace::parse_term(std::string_view text, Signature const& sig) const {
  // Definitions become extra operation symbols, expanded after parsing.
  Signature ext = sig;
  std::map<Symbol, Definition const*> defs;
  std::set<std::string> names;
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    for (auto const& [n, d] : w->definitions_) {
      if (sig.find(n) || !names.insert(n).second) continue;
      ext.add(n, static_cast<int>(d.params.size()));
      defs.emplace(Symbol::intern(n), &d);
    }
  }
  Term t = ::plonka::parse_term(text, ext);
  if (defs.empty()) return t;

  std::function<Term(Term const&, int)> expand = [&](Term const& u, int budget) -> Term {
    if (u.is_variable()) return u;
    std::vector<Term> args;
    for (auto const& a : u.args()) args.push_back(expand(a, budget));
    auto it = defs.find(u.symbol());
    if (it == defs.end()) return Term::apply(u.symbol(), std::move(args));
    if (budget == 0) throw ValidationError("definition '" + u.symbol().name() + "' is cyclic");
    Definition const& d = *it->second;
    Term body = expand(::plonka::parse_term(d.body, ext), budget - 1);
    for (Symbol v : body.vars()) {
      if (std::find(d.params.begin(), d.params.end(), v) == d.params.end()) {
        throw ValidationError("definition '" + u.symbol().name() + "' uses unbound variable '" +
                              v.name() + "'");
      }
    }
    Substitution s;
    for (std::size_t i = 0; i < d.params.size(); ++i) s.insert_or_assign(d.params[i], args[i]);
    return substitute(body, s);
  };
  return expand(t, kMaxExpansion);
}

std::vector<Term> Workspace::parse_term_list(std::string_view text, Signature const& sig) const {
  std::vector<Term> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view part = text.substr(start, i - start);
      bool blank = std::all_of(part.begin(), part.end(),
                               [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      if (blank) {
        if (i == text.size() && out.empty()) return out;
        throw ParseError("empty term in list", start);
      }
      try {
        out.push_back(parse_term(part, sig));
      } catch (ParseError const& e) {
        throw ParseError(e.message(), start + e.position());
      }
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> Workspace::element_names(std::string const& matrix_name) const {
  if (has_matrix(matrix_name)) return algebra(matrix(matrix_name).algebra).elements;
  return {};
}

std::vector<std::vector<std::string>> Workspace::logic_element_names(
    std::string const& name) const {
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    if (auto const* p = find_in(w->logics_, name)) {
      std::vector<std::vector<std::string>> out;
      if (!p->presentation.is_matrices()) return out;
      for (auto const& m : p->sources) out.push_back(element_names(m));
      return out;
    }
  }
  if (has_calculus(name)) return {};
  if (has_matrix(name)) return {element_names(name)};
  throw ValidationError("unknown logic '" + name + "'");
}

std::vector<std::string> Workspace::names() const {
  std::set<std::string> out;
  for (Workspace const* w = this; w; w = w->parent_.get()) {
    for (auto const& [n, _] : w->signatures_) out.insert("signature " + n);
    for (auto const& [n, _] : w->algebras_) out.insert("algebra " + n);
    for (auto const& [n, _] : w->matrices_) out.insert("matrix " + n);
    for (auto const& [n, _] : w->systems_) out.insert("system " + n);
    for (auto const& [n, _] : w->calculi_) out.insert("calculus " + n);
    for (auto const& [n, _] : w->logics_) out.insert("logic " + n);
    for (auto const& [n, _] : w->definitions_) out.insert("define " + n);
  }
  return {out.begin(), out.end()};
}

// ---- printing -------------------------------------------------------------

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string print_signature(std::string const& name, Signature const& sig) {
  std::ostringstream os;
  os << "signature " << name << " {\n";
  for (auto const& op : sig.operations()) os << "  op " << op.name.name() << " " << op.arity << "\n";
  os << "}\n";
  return os.str();
}

std::string print_algebra(std::string const& name, std::string const& signature,
                          FiniteAlgebra const& a, std::vector<std::string> const& elements) {
  std::vector<std::string> el = elements.empty() ? index_names(a.size()) : elements;
  std::ostringstream os;
  os << "algebra " << name << " over " << signature << " {\n  elements";
  for (auto const& e : el) os << " " << e;
  os << "\n";
  for (std::size_t k = 0; k < a.signature().size(); ++k) {
    auto const& op = a.signature()[k];
    for_each_assignment(a.size(), static_cast<std::size_t>(op.arity),
                        [&](std::span<Element const> args) {
                          os << "  op " << op.name.name() << ":";
                          for (Element e : args) os << " " << el[e];
                          os << " -> " << el[a.apply(k, args)] << "\n";
                          return true;
                        });
  }
  os << "}\n";
  return os.str();
}

std::string print_matrix(std::string const& name, std::string const& algebra,
                         LogicalMatrix const& m, std::vector<std::string> const& elements) {
  std::vector<std::string> el = elements.empty() ? index_names(m.size()) : elements;
  std::ostringstream os;
  os << "matrix " << name << " {\n  algebra " << algebra << "\n  designated";
  for (Element e : elements_of(m.designated)) os << " " << el[e];
  os << "\n}\n";
  return os.str();
}

std::string print_calculus(std::string const& name, std::string const& signature,
                           Calculus const& h) {
  std::ostringstream os;
  os << "calculus " << name << " over " << signature << " {\n";
  for (auto const& r : h.rules) {
    if (r.is_axiom()) {
      os << "  axiom (" << r.name << "): " << to_string(r.conclusion) << "\n";
    } else {
      os << "  rule (" << r.name << "): " << to_string(std::span<Term const>(r.premises)) << " |- "
         << to_string(r.conclusion) << "\n";
    }
  }
  for (auto const& s : h.schemes) {
    os << "  scheme (" << s.name << "): " << to_string(s.lhs) << " = " << to_string(s.rhs) << "\n";
  }
  os << "}\n";
  return os.str();
}

std::string print_system(std::string const& name, std::string const& signature,
                         DirectedSystemOfMatrices const& x, std::vector<std::string> const& indices,
                         std::vector<std::vector<std::string>> const& elements) {
  std::size_t const n = x.index.size();
  std::vector<std::string> idx = indices.empty() ? index_names(n) : indices;
  auto el = [&](std::size_t i) {
    return i < elements.size() && !elements[i].empty() ? elements[i]
                                                       : index_names(x.components[i].size());
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    std::string item = name + "." + idx[i];
    os << print_algebra(item, signature, x.components[i].algebra, el(i)) << "\n";
    os << print_matrix(item, item, x.components[i], el(i)) << "\n";
  }
  os << "system " << name << " {\n  semilattice {\n    elements";
  for (auto const& i : idx) os << " " << i;
  os << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      os << "    join " << idx[i] << " " << idx[j] << " -> " << idx[x.index.join(i, j)] << "\n";
    }
  }
  os << "  }\n";
  for (std::size_t i = 0; i < n; ++i) os << "  component " << idx[i] << ": " << name << "." << idx[i] << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !x.index.leq(i, j)) continue;
      auto src = el(i), dst = el(j);
      os << "  hom " << idx[i] << " -> " << idx[j] << ":";
      for (std::size_t a = 0; a < x.homs[i][j].size(); ++a) {
        os << (a ? ", " : " ") << src[a] << " -> " << dst[x.homs[i][j][a]];
      }
      os << "\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace plonka
