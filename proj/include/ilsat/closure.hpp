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

// Closure sets of an input formula.
//
//   gamma_rhd   : every formula occurring as an argument of a |> subformula
//   gamma_pure  : Sub(delta) + false + { phi |> false : phi in gamma_rhd }
//   gamma_rhd_i : the |> formulas of gamma_pure
//
// The signed closure (gamma_pure plus negations) is never materialized; the
// mcs module works with sign maps over gamma_pure indices instead.  All three
// lists are in canonical order (size, then printed form), so indices are
// deterministic for a given input.

#ifndef ILSAT_CLOSURE_HPP
#define ILSAT_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ilsat/formula.hpp"

namespace ilsat {

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Structural view of one gamma_pure member in terms of other members.
struct PureShape {
  Kind kind;
  std::size_t left = kNoIndex;   // gamma_pure index of the left child
  std::size_t right = kNoIndex;  // gamma_pure index of the right child
  std::size_t box = kNoIndex;    // gamma_pure index of (this |> false), if present
};

struct ClosureSets {
  explicit ClosureSets(Formula delta) : root(std::move(delta)) {}

  Formula root;
  std::vector<Formula> gamma_rhd;
  std::vector<Formula> gamma_pure;
  std::vector<Formula> gamma_rhd_i;

  // gamma_pure indices of the members of gamma_rhd / gamma_rhd_i.
  std::vector<std::size_t> rhd_pure;
  std::vector<std::size_t> rhd_i_pure;
  std::vector<PureShape> shape;  // parallel to gamma_pure
  std::size_t bottom = kNoIndex;
  std::size_t root_index = kNoIndex;

  std::optional<std::size_t> pure_index(const Formula& f) const;
  bool in_gamma_rhd(std::size_t pure) const { return is_rhd_argument_[pure]; }

  // |gamma_rhd_i| + 2: the recursion depth bound of the decision procedure.
  std::size_t depth_budget() const { return gamma_rhd_i.size() + 2; }

 private:
  friend ClosureSets compute_closure(const Formula& delta);
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<bool> is_rhd_argument_;
};

ClosureSets compute_closure(const Formula& delta);

}  // namespace ilsat

#endif  // ILSAT_CLOSURE_HPP
