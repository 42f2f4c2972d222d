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

// Finite Veltman models.
//
// A frame is (W, R, {S_x}) with R transitive and irreflexive (on a finite
// carrier this is transitive plus converse well-founded) and, for every x:
//   a) u S_x v implies x R u and x R v;
//   b) S_x is reflexive and transitive on R[x];
//   c) x R u R v implies u S_x v.
// x forces A |> B iff every R-successor of x forcing A has an
// S_x-successor forcing B.

#ifndef ILSAT_SEMANTICS_HPP
#define ILSAT_SEMANTICS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ilsat/formula.hpp"

namespace ilsat {

using World = std::size_t;

class VeltmanModel {
 public:
  World add_world(std::string name, std::vector<std::string> true_atoms = {});
  void add_r(World x, World y);
  void add_s(World x, World u, World v);
  // Sorts and deduplicates all relations; call after the last add_*.
  void normalize();

  std::size_t size() const { return names_.size(); }
  const std::string& name(World w) const { return names_[w]; }
  std::optional<World> find(std::string_view name) const;

  std::optional<World> root;

  const std::vector<World>& successors(World x) const { return r_[x]; }
  const std::vector<std::pair<World, World>>& s_pairs(World x) const { return s_[x]; }
  const std::vector<std::string>& valuation(World w) const { return valuation_[w]; }

  bool r(World x, World y) const;
  bool s(World x, World u, World v) const;
  bool holds_atom(World w, const std::string& atom) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<World>> r_;
  std::vector<std::vector<std::pair<World, World>>> s_;
  std::vector<std::vector<std::string>> valuation_;
};

struct FrameViolation {
  enum class Kind { Reflexive, Transitive, ConditionA, ConditionBReflexive, ConditionBTransitive, ConditionC, Root };
  Kind kind;
  World x = 0;
  World u = 0;
  World v = 0;
};

std::string describe(const FrameViolation& violation, const VeltmanModel& model);

// Empty iff every frame condition (and rootedness, when a root is set) holds.
std::vector<FrameViolation> frame_check(const VeltmanModel& model);

class UnknownWorld : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

bool model_check(const VeltmanModel& model, World x, const Formula& phi);

// Truth value of `phi` at every world.
std::vector<bool> truth_set(const VeltmanModel& model, const Formula& phi);

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxOracleWorlds = 4;

// Visits every rooted Veltman model with 1..max_worlds worlds over `atoms`
// (world 0 is the root; no isomorphism reduction).  Stops early when the
// visitor returns false.
void for_each_model(std::size_t max_worlds, std::span<const std::string> atoms,
                    const std::function<bool(const VeltmanModel&)>& visit);

// First enumerated model whose root forces `phi`.  Absence only means no
// model exists up to the bound.
std::optional<VeltmanModel> oracle_sat(const Formula& phi, std::size_t max_worlds);

nlohmann::ordered_json to_json(const VeltmanModel& model);
VeltmanModel model_from_json(const nlohmann::json& j);

}  // namespace ilsat

#endif  // ILSAT_SEMANTICS_HPP
