// Copyright 2026 The cground Authors.
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

/// \file
/// Restricted logical forms: ground atoms, conjunction, negation and the
/// attitude operators (bel, intend, say, propose), plus the s-expression
/// reader and canonical printer.

#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cground {

using Symbol = std::string;

enum class Kind { atom, conj, neg, bel, intend, say, propose };

class Proposition;

/// A position inside a proposition. Each step selects a child: the member
/// index of a conjunction, 0 for the body of a negation or attitude, and for
/// an atom 0 = predicate symbol, k = k-th argument.
using Path = std::vector<int>;

class Proposition {
 public:
  static Proposition atom(Symbol predicate, std::vector<Symbol> args = {});
  static Proposition conj(std::vector<Proposition> members);
  static Proposition negate(const Proposition& p);
  static Proposition bel(Symbol agent, const Proposition& p,
                         std::optional<int> time = std::nullopt);
  static Proposition intend(Symbol agent, const Proposition& action,
                            std::optional<Symbol> degree = std::nullopt,
                            std::optional<int> time = std::nullopt);
  static Proposition say(Symbol speaker, Symbol addressee, const Proposition& p,
                         int time);
  static Proposition propose(Symbol speaker, Symbol addressee,
                             const Proposition& action, int time);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  const Symbol& predicate() const { return node_->predicate; }
  const std::vector<Symbol>& args() const { return node_->args; }
  const std::vector<Proposition>& members() const { return node_->members; }
  /// Body of neg/bel/intend/say/propose.
  const Proposition& body() const { return node_->members.front(); }
  const Symbol& agent() const { return node_->agent; }
  const Symbol& addressee() const { return node_->addressee; }
  const std::optional<Symbol>& degree() const { return node_->degree; }
  const std::optional<int>& time() const { return node_->time; }

  /// Canonical normalized s-expression. Stable across runs.
  const std::string& str() const { return node_->text; }

  friend bool operator==(const Proposition& a, const Proposition& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend bool operator<(const Proposition& a, const Proposition& b) {
    return a.node_->text < b.node_->text;
  }

 private:
  struct Node {
    Kind kind = Kind::atom;
    Symbol predicate;
    std::vector<Symbol> args;
    std::vector<Proposition> members;
    Symbol agent;
    Symbol addressee;
    std::optional<Symbol> degree;
    std::optional<int> time;
    std::string text;
  };

  explicit Proposition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Proposition make(Node n);
  static std::string render(const Node& n);

  std::shared_ptr<const Node> node_;
};

/// Conjuncts of p: its members when p is a conjunction, else {p}.
inline std::vector<Proposition> conjuncts(const Proposition& p) {
  if (p.is(Kind::conj)) return p.members();
  return {p};
}

// ---------------------------------------------------------------------------

inline std::string Proposition::render(const Node& n) {
  auto time_suffix = [&](std::string& out) {
    if (n.time) out += " " + std::to_string(*n.time);
  };
  std::string out;
  switch (n.kind) {
    case Kind::atom:
      if (n.args.empty()) return n.predicate;
      out = "(" + n.predicate;
      for (const auto& a : n.args) out += " " + a;
      return out + ")";
    case Kind::conj:
      out = "(and";
      for (const auto& m : n.members) out += " " + m.str();
      return out + ")";
    case Kind::neg:
      return "(not " + n.members[0].str() + ")";
    case Kind::bel:
      out = "(bel " + n.agent + " " + n.members[0].str();
      time_suffix(out);
      return out + ")";
    case Kind::intend:
      out = "(intend " + n.agent + " " + n.members[0].str();
      if (n.degree) out += " " + *n.degree;
      time_suffix(out);
      return out + ")";
    case Kind::say:
      out = "(say " + n.agent + " " + n.addressee + " " + n.members[0].str();
      time_suffix(out);
      return out + ")";
    case Kind::propose:
      out = "(propose " + n.agent + " " + n.addressee + " " +
            n.members[0].str();
      time_suffix(out);
      return out + ")";
  }
  return out;
}

inline Proposition Proposition::make(Node n) {
  n.text = render(n);
  return Proposition(std::make_shared<const Node>(std::move(n)));
}

inline Proposition Proposition::atom(Symbol predicate, std::vector<Symbol> args) {
  if (predicate.empty()) throw std::invalid_argument("atom: empty predicate");
  Node n;
  n.kind = Kind::atom;
  n.predicate = std::move(predicate);
  n.args = std::move(args);
  return make(std::move(n));
}

inline Proposition Proposition::conj(std::vector<Proposition> members) {
  std::vector<Proposition> flat;
  for (auto& m : members) {
    if (m.is(Kind::conj)) {
      flat.insert(flat.end(), m.members().begin(), m.members().end());
    } else {
      flat.push_back(std::move(m));
    }
  }
  if (flat.empty()) throw std::invalid_argument("conj: no members");
  if (flat.size() == 1) return flat.front();
  Node n;
  n.kind = Kind::conj;
  n.members = std::move(flat);
  return make(std::move(n));
}

inline Proposition Proposition::negate(const Proposition& p) {
  if (p.is(Kind::neg)) return p.body();
  Node n;
  n.kind = Kind::neg;
  n.members = {p};
  return make(std::move(n));
}

inline Proposition Proposition::bel(Symbol agent, const Proposition& p,
                                    std::optional<int> time) {
  if (time && *time < 0) throw std::invalid_argument("bel: negative time index");
  Node n;
  n.kind = Kind::bel;
  n.agent = std::move(agent);
  n.members = {p};
  n.time = time;
  return make(std::move(n));
}

inline Proposition Proposition::intend(Symbol agent, const Proposition& action,
                                       std::optional<Symbol> degree,
                                       std::optional<int> time) {
  if (time && *time < 0) throw std::invalid_argument("intend: negative time index");
  Node n;
  n.kind = Kind::intend;
  n.agent = std::move(agent);
  n.members = {action};
  n.degree = std::move(degree);
  n.time = time;
  return make(std::move(n));
}

inline Proposition Proposition::say(Symbol speaker, Symbol addressee,
                                    const Proposition& p, int time) {
  if (time < 0) throw std::invalid_argument("say: negative time index");
  Node n;
  n.kind = Kind::say;
  n.agent = std::move(speaker);
  n.addressee = std::move(addressee);
  n.members = {p};
  n.time = time;
  return make(std::move(n));
}

inline Proposition Proposition::propose(Symbol speaker, Symbol addressee,
                                        const Proposition& action, int time) {
  if (time < 0) throw std::invalid_argument("propose: negative time index");
  Node n;
  n.kind = Kind::propose;
  n.agent = std::move(speaker);
  n.addressee = std::move(addressee);
  n.members = {action};
  n.time = time;
  return make(std::move(n));
}

// ---------------------------------------------------------------------------
// Reader

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class LfReader {
 public:
  explicit LfReader(std::string_view text) : text_(text) {}

  Proposition read_all() {
    Proposition p = read_formula();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  struct Token {
    enum Type { open, close, symbol, end } type;
    std::string text;
    std::size_t pos;
  };

  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '.' || c == '\'' || c == '*' || c == '+' ||
           c == '?' || c == '$';
  }

  static bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Token next() {
    skip_ws();
    if (pos_ >= text_.size()) return {Token::end, "", pos_};
    char c = text_[pos_];
    if (c == '(') return {Token::open, "(", pos_++};
    if (c == ')') return {Token::close, ")", pos_++};
    if (!symbol_char(c))
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && symbol_char(text_[pos_])) ++pos_;
    return {Token::symbol, std::string(text_.substr(start, pos_ - start)), start};
  }

  Token peek() {
    std::size_t save = pos_;
    Token t = next();
    pos_ = save;
    return t;
  }

  Token expect_symbol(const char* what) {
    Token t = next();
    if (t.type != Token::symbol)
      throw ParseError(std::string("expected ") + what, t.pos);
    return t;
  }

  void expect_close() {
    Token t = next();
    if (t.type != Token::close) throw ParseError("expected ')'", t.pos);
  }

  int read_time() {
    Token t = expect_symbol("time index");
    if (!is_integer(t.text)) throw ParseError("time index must be an integer", t.pos);
    return std::stoi(t.text);
  }

  Proposition read_formula() {
    Token t = next();
    if (t.type == Token::symbol) {
      if (is_integer(t.text)) throw ParseError("integer is not a formula", t.pos);
      return Proposition::atom(t.text);
    }
    if (t.type != Token::open) throw ParseError("expected formula", t.pos);

    Token head = next();
    if (head.type != Token::symbol || is_integer(head.text))
      throw ParseError("unknown operator", head.pos);
    const std::string& op = head.text;

    if (op == "or" || op == "implies" || op == "forall" || op == "exists" ||
        op == "iff")
      throw ParseError("unknown operator '" + op + "'", head.pos);

    if (op == "and") {
      std::vector<Proposition> members;
      while (peek().type != Token::close) {
        if (peek().type == Token::end) throw ParseError("unterminated 'and'", pos_);
        members.push_back(read_formula());
      }
      expect_close();
      if (members.size() < 2) throw ParseError("'and' needs two or more members", head.pos);
      return Proposition::conj(std::move(members));
    }
    if (op == "not") {
      Proposition body = read_formula();
      expect_close();
      return Proposition::negate(body);
    }
    if (op == "bel") {
      Symbol agent = expect_symbol("agent").text;
      Proposition body = read_formula();
      std::optional<int> time;
      if (peek().type == Token::symbol) time = read_time();
      expect_close();
      return Proposition::bel(agent, body, time);
    }
    if (op == "intend") {
      Symbol agent = expect_symbol("agent").text;
      Proposition action = read_formula();
      std::optional<Symbol> degree;
      std::optional<int> time;
      if (peek().type == Token::symbol) {
        Token t = next();
        if (is_integer(t.text)) {
          time = std::stoi(t.text);
        } else {
          degree = t.text;
          if (peek().type == Token::symbol) time = read_time();
        }
      }
      expect_close();
      return Proposition::intend(agent, action, degree, time);
    }
    if (op == "say" || op == "propose") {
      Symbol speaker = expect_symbol("speaker").text;
      Symbol addressee = expect_symbol("addressee").text;
      Proposition body = read_formula();
      int time = read_time();
      expect_close();
      return op == "say" ? Proposition::say(speaker, addressee, body, time)
                         : Proposition::propose(speaker, addressee, body, time);
    }

    std::vector<Symbol> args;
    while (true) {
      Token a = next();
      if (a.type == Token::close) break;
      if (a.type != Token::symbol)
        throw ParseError("atom arguments must be symbols", a.pos);
      args.push_back(a.text);
    }
    return Proposition::atom(op, std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an s-expression logical form into its normalized Proposition.
inline Proposition parse_lf(std::string_view text) {
  return detail::LfReader(text).read_all();
}

// ---------------------------------------------------------------------------
// Paths and sub-expressions

/// A focusable expression: either a whole subformula or a symbol inside an
/// atom (a scalar expression such as `some` or `a-man`).
using Expression = std::variant<Symbol, Proposition>;

inline std::string expression_text(const Expression& e) {
  if (const auto* s = std::get_if<Symbol>(&e)) return *s;
  return std::get<Proposition>(e).str();
}

/// Resolves a path. Throws std::out_of_range when it does not resolve.
inline Expression resolve_path(const Proposition& p, const Path& path,
                               std::size_t from = 0) {
  if (from == path.size()) return p;
  int step = path[from];
  if (p.is(Kind::atom)) {
    if (from + 1 != path.size())
      throw std::out_of_range("path descends below an atom symbol");
    if (step == 0) return p.predicate();
    if (step < 0 || static_cast<std::size_t>(step) > p.args().size())
      throw std::out_of_range("atom argument index out of range");
    return p.args()[static_cast<std::size_t>(step - 1)];
  }
  if (p.is(Kind::conj)) {
    if (step < 0 || static_cast<std::size_t>(step) >= p.members().size())
      throw std::out_of_range("conjunct index out of range");
    return resolve_path(p.members()[static_cast<std::size_t>(step)], path, from + 1);
  }
  if (step != 0) throw std::out_of_range("unary operator has only child 0");
  return resolve_path(p.body(), path, from + 1);
}

inline bool path_resolves(const Proposition& p, const Path& path) {
  try {
    resolve_path(p, path);
    return true;
  } catch (const std::out_of_range&) {
    return false;
  }
}

/// Returns p with the node at `path` replaced. A Symbol replacement is only
/// valid at an atom-symbol position; a Proposition replacement only at a
/// formula position.
inline Proposition replace_at(const Proposition& p, const Path& path,
                              const Expression& with, std::size_t from = 0) {
  if (from == path.size()) {
    if (const auto* q = std::get_if<Proposition>(&with)) return *q;
    throw std::invalid_argument("symbol cannot replace a formula");
  }
  int step = path[from];
  switch (p.kind()) {
    case Kind::atom: {
      const auto* s = std::get_if<Symbol>(&with);
      if (!s || from + 1 != path.size())
        throw std::invalid_argument("atom positions take symbols");
      if (step == 0) return Proposition::atom(*s, p.args());
      auto args = p.args();
      args.at(static_cast<std::size_t>(step - 1)) = *s;
      return Proposition::atom(p.predicate(), std::move(args));
    }
    case Kind::conj: {
      auto members = p.members();
      auto& m = members.at(static_cast<std::size_t>(step));
      m = replace_at(m, path, with, from + 1);
      // Built directly so the member count (and thus paths) is preserved.
      return Proposition::conj(std::move(members));
    }
    case Kind::neg:
      return Proposition::negate(replace_at(p.body(), path, with, from + 1));
    case Kind::bel:
      return Proposition::bel(p.agent(), replace_at(p.body(), path, with, from + 1),
                              p.time());
    case Kind::intend:
      return Proposition::intend(p.agent(),
                                 replace_at(p.body(), path, with, from + 1),
                                 p.degree(), p.time());
    case Kind::say:
      return Proposition::say(p.agent(), p.addressee(),
                              replace_at(p.body(), path, with, from + 1), *p.time());
    case Kind::propose:
      return Proposition::propose(p.agent(), p.addressee(),
                                  replace_at(p.body(), path, with, from + 1),
                                  *p.time());
  }
  return p;
}

}  // namespace cground
