/* Copyright 2026 The ilsat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ilsat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_set>

namespace ilsat {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula left;
  Formula right;
  std::size_t size;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  std::size_t h = mix(1, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}, 1, h}));
}

Formula Formula::bottom() {
  static const Formula kBottom(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}, 1, 2}));
  return kBottom;
}

Formula Formula::implies(Formula left, Formula right) {
  const std::size_t h = mix(mix(3, left.hash()), right.hash());
  const std::size_t n = 1 + left.size() + right.size();
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, std::move(left), std::move(right), n, h}));
}

Formula Formula::rhd(Formula left, Formula right) {
  std::size_t h = mix(mix(4, left.hash()), right.hash());
  std::size_t n = 1 + left.size() + right.size();
  return Formula(std::make_shared<const Node>(
      Node{Kind::Rhd, {}, std::move(left), std::move(right), n, h}));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Kind::Atom:
      return a.name() == b.name();
    case Kind::Bottom:
      return true;
    case Kind::Implies:
    case Kind::Rhd:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Formula negation(Formula a) { return Formula::implies(std::move(a), Formula::bottom()); }

Formula conjunction(Formula a, Formula b) {
  return negation(Formula::implies(std::move(a), negation(std::move(b))));
}

Formula disjunction(Formula a, Formula b) {
  return Formula::implies(negation(std::move(a)), std::move(b));
}

Formula equivalence(Formula a, Formula b) {
  return conjunction(Formula::implies(a, b), Formula::implies(b, a));
}

Formula verum() { return negation(Formula::bottom()); }

Formula box(Formula a) { return Formula::rhd(negation(std::move(a)), Formula::bottom()); }

Formula diamond(Formula a) { return negation(Formula::rhd(std::move(a), Formula::bottom())); }

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

bool is_reserved_word(std::string_view word) {
  return word == "box" || word == "dia" || word == "true" || word == "false";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, Box, Dia, True, False, Not, And, Or, Iff, Imp, Rhd, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Box: return "'box'";
    case Tok::Dia: return "'dia'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Iff: return "'<->'";
    case Tok::Imp: return "'->'";
    case Tok::Rhd: return "'|>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < text.size() && ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9') ||
                                 text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "box") kind = Tok::Box;
      else if (word == "dia") kind = Tok::Dia;
      else if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    if (starts("<->")) {
      out.push_back({Tok::Iff, "<->", start});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Imp, "->", start});
      i += 2;
    } else if (starts("|>")) {
      out.push_back({Tok::Rhd, "|>", start});
      i += 2;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", start});
      ++i;
    } else {
      throw ParseError(start, "unknown token '" + std::string(1, text[i]) + "'");
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = imp();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) throw ParseError(peek().pos, "unbalanced ')'");
      throw ParseError(peek().pos, std::string("unexpected ") + describe(peek().kind));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Formula imp() {
    Formula left = rhd();
    if (accept(Tok::Imp)) return Formula::implies(std::move(left), imp());
    return left;
  }

  Formula rhd() {
    Formula left = disj();
    while (accept(Tok::Rhd)) left = Formula::rhd(std::move(left), disj());
    return left;
  }

  Formula disj() {
    Formula left = conj();
    while (accept(Tok::Or)) left = disjunction(std::move(left), conj());
    return left;
  }

  Formula conj() {
    Formula left = iff();
    while (accept(Tok::And)) left = conjunction(std::move(left), iff());
    return left;
  }

  Formula iff() {
    Formula left = unary();
    if (accept(Tok::Iff)) return equivalence(std::move(left), unary());
    return left;
  }

  Formula unary() {
    if (accept(Tok::Not)) return negation(unary());
    if (accept(Tok::Box)) return box(unary());
    if (accept(Tok::Dia)) return diamond(unary());
    return atomexpr();
  }

  Formula atomexpr() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Ident:
        return Formula::atom(t.text);
      case Tok::True:
        return verum();
      case Tok::False:
        return Formula::bottom();
      case Tok::LParen: {
        Formula inner = imp();
        if (!accept(Tok::RParen)) {
          if (peek().kind == Tok::End) throw ParseError(peek().pos, "unbalanced '(': missing ')'");
          throw ParseError(peek().pos, std::string("expected ')' but found ") + describe(peek().kind));
        }
        return inner;
      }
      case Tok::End:
        throw ParseError(t.pos, "dangling operator: expected operand before end of input");
      case Tok::RParen:
        throw ParseError(t.pos, "unbalanced ')' or missing operand");
      default:
        throw ParseError(t.pos, std::string("dangling operator: expected operand but found ") + describe(t.kind));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

enum Level { kImp = 0, kRhd = 1, kUnary = 2 };

bool is_negation(const Formula& f) { return f.is_implies() && f.right().is_bottom(); }

void print(const Formula& f, Level context, std::string& out);

void print_wrapped(Level own, Level context, std::string& out, const std::function<void()>& body) {
  const bool parens = own < context;
  if (parens) out += '(';
  body();
  if (parens) out += ')';
}

void print(const Formula& f, Level context, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Bottom:
      out += "false";
      return;
    case Kind::Implies:
      if (f.right().is_bottom()) {
        const Formula& body = f.left();
        if (body.is_rhd() && body.right().is_bottom() && !is_negation(body.left())) {
          out += "dia ";
          print(body.left(), kUnary, out);
        } else {
          out += '~';
          print(body, kUnary, out);
        }
        return;
      }
      print_wrapped(kImp, context, out, [&] {
        print(f.left(), kRhd, out);
        out += " -> ";
        print(f.right(), kImp, out);
      });
      return;
    case Kind::Rhd:
      if (f.right().is_bottom() && is_negation(f.left())) {
        out += "box ";
        print(f.left().left(), kUnary, out);
        return;
      }
      print_wrapped(kRhd, context, out, [&] {
        print(f.left(), kRhd, out);
        out += " |> ";
        print(f.right(), kUnary, out);
      });
      return;
  }
}

void collect(const Formula& f, std::unordered_set<Formula, FormulaHash>& seen, std::vector<Formula>& out) {
  if (!seen.insert(f).second) return;
  out.push_back(f);
  if (f.is_implies() || f.is_rhd()) {
    collect(f.left(), seen, out);
    collect(f.right(), seen, out);
  }
}

void collect_vars(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.push_back(f.name());
      return;
    case Kind::Bottom:
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, kImp, out);
  return out;
}

bool canonical_less(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  return to_string(a) < to_string(b);
}

std::vector<Formula> subformulas(const Formula& f) {
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> out;
  collect(f, seen, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  collect_vars(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ilsat
