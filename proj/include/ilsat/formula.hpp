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

// Core formula language of interpretability logic:
//
//   A ::= p | false | A -> A | A |> A
//
// Negation, conjunction, disjunction, equivalence, `true`, `box` and `dia`
// exist only as surface syntax.  The parser eliminates them and the core
// tree never contains anything but the four constructors above.

#ifndef ILSAT_FORMULA_HPP
#define ILSAT_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ilsat {

enum class Kind : std::uint8_t { Atom, Bottom, Implies, Rhd };

// Immutable formula tree with shared subtrees.  Copies are cheap; equality
// is structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bottom();
  static Formula implies(Formula left, Formula right);
  static Formula rhd(Formula left, Formula right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_bottom() const { return kind() == Kind::Bottom; }
  bool is_implies() const { return kind() == Kind::Implies; }
  bool is_rhd() const { return kind() == Kind::Rhd; }

  // Only meaningful for atoms.
  const std::string& name() const;
  // Only meaningful for binary nodes.
  const Formula& left() const;
  const Formula& right() const;

  // Number of nodes in the tree.
  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Desugaring helpers.  Each returns a core tree.
Formula negation(Formula a);                 // a -> false
Formula conjunction(Formula a, Formula b);   // (a -> (b -> false)) -> false
Formula disjunction(Formula a, Formula b);   // (a -> false) -> b
Formula equivalence(Formula a, Formula b);   // (a -> b) & (b -> a)
Formula verum();                             // false -> false
Formula box(Formula a);                      // ~a |> false
Formula diamond(Formula a);                  // ~(a |> false)

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses the surface grammar into a core tree.  Throws ParseError.
Formula parse(std::string_view text);

// Prints with minimal parentheses.  `A -> false` is shown as `~A`,
// `~A |> false` as `box A` and `~(A |> false)` as `dia A`; parse(to_string(f))
// always reproduces f.
std::string to_string(const Formula& f);

// Canonical total order: by size, then by printed form.
bool canonical_less(const Formula& a, const Formula& b);

// All subtrees of `f` including `f`, deduplicated, in canonical order.
std::vector<Formula> subformulas(const Formula& f);

// Propositional variables of `f`, sorted by name.
std::vector<std::string> variables(const Formula& f);

bool is_reserved_word(std::string_view word);

}  // namespace ilsat

#endif  // ILSAT_FORMULA_HPP
