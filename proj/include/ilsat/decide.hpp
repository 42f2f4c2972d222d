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

// The three mutually recursive satisfiability procedures for IL:
//
//   sat_set    (1)  a signed subset of the closure has a rooted model iff
//                   one of its maximal consistent extensions does;
//   check_mcs  (2)  a maximal consistent set has a rooted model iff every
//                   negated |> formula in it can be refuted by a rooted model
//                   of its positive |> formulas;
//   refute_rhd (3)  chi |> eta fails in a rooted model of delta_plus iff some
//                   (Sigma, Theta) pair passes the check-(a)/(b) recursive
//                   satisfiability tests.
//
// (1) calls only (2), (2) only (3), and (3) only (1).  The recursion depth is
// bounded by |gamma_rhd_i| + 2; exceeding it raises BudgetExceeded, which is
// an internal invariant failure rather than a user-facing outcome.

#ifndef ILSAT_DECIDE_HPP
#define ILSAT_DECIDE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ilsat/closure.hpp"
#include "ilsat/formula.hpp"
#include "ilsat/mcs.hpp"

namespace ilsat {

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class MalformedClosure : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Positive / negative |> members of a maximal consistent set, as indices
// into gamma_rhd_i.
struct DeltaSplit {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

DeltaSplit split_delta(const MaxConsistentSet& mcs, const ClosureSets& closure);

// Sigma and Theta as gamma_pure indices.  Sigma is the complement of Theta
// in gamma_rhd plus eta, which is `false` even when `false` is not itself an
// argument of any |> subformula.
struct SigmaThetaPair {
  std::vector<std::size_t> sigma;
  std::vector<std::size_t> theta;
};

struct SatSetNode;
using SatTrace = std::shared_ptr<const SatSetNode>;

struct RefuteNode {
  std::size_t zeta;  // index into gamma_rhd_i
  SigmaThetaPair pair;
  SatTrace check_a;
  std::vector<std::pair<std::size_t, SatTrace>> check_b;  // (theta, trace) in Theta order
};

struct CheckMcsNode {
  MaxConsistentSet mcs;
  DeltaSplit split;
  std::vector<RefuteNode> refutations;  // one per member of split.minus, same order
};

struct SatSetNode {
  SignedSet input;
  CheckMcsNode chosen;
};

struct DecideOptions {
  // Caches sat_set answers by signed set.  Faster, but gives up the
  // polynomial space bound.
  bool memoize = false;
};

struct DecideStats {
  std::size_t max_sat_depth = 0;     // deepest (1)-activation, top level = 1
  std::size_t max_mcs_nesting = 0;   // deepest chain of nested (2)-activations
  std::size_t sat_calls = 0;
  std::size_t mcs_checks = 0;
  std::size_t refute_calls = 0;
  std::size_t pairs_tried = 0;
};

class Decider {
 public:
  explicit Decider(const ClosureSets& closure, DecideOptions options = {});

  // Procedure (1) at top level.
  SatTrace sat_set(const SignedSet& delta);

  // Procedures with explicit recursion depth, exposed for tests.  `depth`
  // counts (1)-activations; `parent_boxes` is the sorted set of positive
  // phi |> false formulas (gamma_pure indices) of the enclosing (2), or null
  // at top level.
  SatTrace sat_set(const SignedSet& delta, std::size_t depth, const std::vector<std::size_t>* parent_boxes);
  std::optional<CheckMcsNode> check_mcs(const MaxConsistentSet& mcs, std::size_t depth,
                                        const std::vector<std::size_t>* parent_boxes);
  std::optional<RefuteNode> refute_rhd(const std::vector<std::size_t>& delta_plus, std::size_t zeta,
                                       std::size_t depth, const std::vector<std::size_t>& boxes);

  // Signed set of check (a) (witness = chi) or check (b) (witness = theta);
  // nullopt if the requested signs clash.
  std::optional<SignedSet> pair_constraints(const SigmaThetaPair& pair, std::size_t witness) const;

  const DecideStats& stats() const { return stats_; }
  const ClosureSets& closure() const { return closure_; }

 private:
  void enter_sat(std::size_t depth);

  const ClosureSets& closure_;
  DecideOptions options_;
  DecideStats stats_;
  std::unordered_map<SignedSet, SatTrace, SignedSetHash> memo_;
};

struct SatResult {
  bool sat = false;
  SatTrace trace;  // present iff sat
  std::shared_ptr<const ClosureSets> closure;
  DecideStats stats;
};

SatResult decide_sat(const Formula& delta, DecideOptions options = {});

struct ValidResult {
  bool valid = false;
  SatResult negation;  // satisfiable negation carries the countermodel trace
};

ValidResult decide_valid(const Formula& delta, DecideOptions options = {});

}  // namespace ilsat

#endif  // ILSAT_DECIDE_HPP
