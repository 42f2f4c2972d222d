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

// Propositional layer: |> formulas are treated as opaque atoms and signed
// subsets of the closure are checked / extended to maximal Boolean
// consistent sets.

#ifndef ILSAT_MCS_HPP
#define ILSAT_MCS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ilsat/closure.hpp"

namespace ilsat {

enum class Sign : std::int8_t { Neg = -1, Unset = 0, Pos = 1 };

inline Sign flip(Sign s) { return static_cast<Sign>(-static_cast<std::int8_t>(s)); }

// Partial sign map over gamma_pure indices.  The pair (phi, Pos) stands for
// phi, the pair (phi, Neg) for ~phi.
class SignedSet {
 public:
  explicit SignedSet(std::size_t universe) : signs_(universe, Sign::Unset) {}

  // Returns false (and leaves the set unchanged) if `index` already carries
  // the opposite sign.
  [[nodiscard]] bool assign(std::size_t index, Sign sign);
  Sign at(std::size_t index) const { return signs_[index]; }
  std::size_t universe() const { return signs_.size(); }
  std::vector<std::pair<std::size_t, Sign>> entries() const;
  std::size_t hash() const;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;

 private:
  std::vector<Sign> signs_;
};

struct SignedSetHash {
  std::size_t operator()(const SignedSet& s) const { return s.hash(); }
};

// Total sign map over gamma_pure.
class MaxConsistentSet {
 public:
  explicit MaxConsistentSet(std::vector<bool> positive) : positive_(std::move(positive)) {}

  bool positive(std::size_t index) const { return positive_[index]; }
  Sign at(std::size_t index) const { return positive_[index] ? Sign::Pos : Sign::Neg; }
  std::size_t size() const { return positive_.size(); }

  friend bool operator==(const MaxConsistentSet&, const MaxConsistentSet&) = default;
  friend auto operator<=>(const MaxConsistentSet& a, const MaxConsistentSet& b) {
    return a.positive_ <=> b.positive_;
  }

 private:
  std::vector<bool> positive_;
};

// Abstraction alphabet as gamma_pure indices: the propositional variables
// first, then the members of gamma_rhd_i, each in closure order.
std::vector<std::size_t> abstract_atoms(const ClosureSets& closure);

enum class McsOrder {
  // Every maximal consistent extension; atoms branch in abstract_atoms order.
  All,
  // Branch on the |> atoms first and emit only the first consistent
  // completion of the variables for each |> assignment.  Yields one
  // representative per distinct |> part.
  RhdProjection,
};

// Lazy backtracking enumeration of maximal consistent extensions of a
// signed set, "+" before "-" at every atom.  Only the current partial
// assignment is kept.
class McsStream {
 public:
  McsStream(const SignedSet& constraints, const ClosureSets& closure, McsOrder order = McsOrder::All);

  std::optional<MaxConsistentSet> next();

 private:
  bool feasible();
  bool backtrack();
  MaxConsistentSet emit() const;

  const ClosureSets& closure_;
  std::vector<Sign> constraint_;     // per gamma_pure index
  std::vector<std::size_t> atoms_;   // gamma_pure indices
  std::vector<std::size_t> atom_of_;  // gamma_pure index -> atom position or kNoIndex
  std::vector<std::int8_t> value_;   // per atom: -1, 0 (open), 1
  std::vector<std::uint8_t> tried_;  // per atom: 0 none, 1 "+" tried, 2 both tried
  std::vector<std::int8_t> eval_;    // scratch: three-valued value per gamma_pure index
  std::size_t depth_ = 0;
  std::size_t collapse_from_;  // levels at or beyond this are not re-branched after an emission
  bool started_ = false;
  bool done_ = false;
};

bool is_prop_consistent(const SignedSet& s, const ClosureSets& closure);

// Checks the MaxConsistentSet type invariants: bottom negative and Boolean
// coherence of every implication.
bool is_coherent(const MaxConsistentSet& m, const ClosureSets& closure);

}  // namespace ilsat

#endif  // ILSAT_MCS_HPP
