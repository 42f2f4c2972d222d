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

#include "ilsat/decide.hpp"

#include <algorithm>

namespace ilsat {

DeltaSplit split_delta(const MaxConsistentSet& mcs, const ClosureSets& closure) {
  DeltaSplit split;
  for (std::size_t j = 0; j < closure.rhd_i_pure.size(); ++j)
    (mcs.positive(closure.rhd_i_pure[j]) ? split.plus : split.minus).push_back(j);
  return split;
}

namespace {

// Positive phi |> false members of a maximal consistent set.
std::vector<std::size_t> positive_boxes(const MaxConsistentSet& mcs, const ClosureSets& closure) {
  std::vector<std::size_t> out;
  for (std::size_t i : closure.rhd_i_pure)
    if (closure.shape[i].right == closure.bottom && mcs.positive(i)) out.push_back(i);
  return out;
}

// Advances `combo` (strictly increasing positions into a pool of size n) to
// the next combination of the same size; false when exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Decider::Decider(const ClosureSets& closure, DecideOptions options) : closure_(closure), options_(options) {}

void Decider::enter_sat(std::size_t depth) {
  ++stats_.sat_calls;
  stats_.max_sat_depth = std::max(stats_.max_sat_depth, depth);
  if (depth > closure_.depth_budget())
    throw BudgetExceeded("procedure (1) reached depth " + std::to_string(depth) + " beyond budget " +
                         std::to_string(closure_.depth_budget()));
}

SatTrace Decider::sat_set(const SignedSet& delta) { return sat_set(delta, 1, nullptr); }

SatTrace Decider::sat_set(const SignedSet& delta, std::size_t depth, const std::vector<std::size_t>* parent_boxes) {
  enter_sat(depth);
  if (options_.memoize) {
    if (auto it = memo_.find(delta); it != memo_.end()) return it->second;
  }
  SatTrace result;
  McsStream stream(delta, closure_, McsOrder::RhdProjection);
  while (auto mcs = stream.next()) {
    if (auto node = check_mcs(*mcs, depth, parent_boxes)) {
      result = std::make_shared<const SatSetNode>(SatSetNode{delta, std::move(*node)});
      break;
    }
  }
  if (options_.memoize) memo_.emplace(delta, result);
  return result;
}

std::optional<CheckMcsNode> Decider::check_mcs(const MaxConsistentSet& mcs, std::size_t depth,
                                               const std::vector<std::size_t>* parent_boxes) {
  ++stats_.mcs_checks;
  stats_.max_mcs_nesting = std::max(stats_.max_mcs_nesting, depth);
  if (depth + 1 > closure_.depth_budget())
    throw BudgetExceeded("procedure (2) nesting " + std::to_string(depth) + " beyond bound " +
                         std::to_string(closure_.depth_budget() - 1));

  std::vector<std::size_t> boxes = positive_boxes(mcs, closure_);
  if (parent_boxes != nullptr &&
      (boxes.size() <= parent_boxes->size() ||
       !std::includes(boxes.begin(), boxes.end(), parent_boxes->begin(), parent_boxes->end())))
    throw InvariantViolation("nested procedure (2) did not gain a new positive phi |> false formula");

  CheckMcsNode node{mcs, split_delta(mcs, closure_), {}};
  for (std::size_t zeta : node.split.minus) {
    auto refutation = refute_rhd(node.split.plus, zeta, depth, boxes);
    if (!refutation) return std::nullopt;
    node.refutations.push_back(std::move(*refutation));
  }
  return node;
}

std::optional<SignedSet> Decider::pair_constraints(const SigmaThetaPair& pair, std::size_t witness) const {
  SignedSet s(closure_.gamma_pure.size());
  for (std::size_t sigma : pair.sigma) {
    if (!s.assign(sigma, Sign::Neg)) return std::nullopt;
    const std::size_t box = closure_.shape[sigma].box;
    if (box != kNoIndex) {
      if (!s.assign(box, Sign::Pos)) return std::nullopt;
    } else if (sigma != closure_.bottom) {
      throw MalformedClosure("missing box form of " + to_string(closure_.gamma_pure[sigma]));
    }
  }
  const std::size_t box = closure_.shape[witness].box;
  if (box == kNoIndex) throw MalformedClosure("missing box form of " + to_string(closure_.gamma_pure[witness]));
  if (!s.assign(witness, Sign::Pos) || !s.assign(box, Sign::Pos)) return std::nullopt;
  return s;
}

std::optional<RefuteNode> Decider::refute_rhd(const std::vector<std::size_t>& delta_plus, std::size_t zeta,
                                              std::size_t depth, const std::vector<std::size_t>& boxes) {
  ++stats_.refute_calls;
  const std::size_t n = closure_.gamma_pure.size();
  const PureShape& z = closure_.shape[closure_.rhd_i_pure[zeta]];
  const std::size_t chi = z.left;
  const std::size_t eta = z.right;

  std::vector<std::size_t> pool;
  for (std::size_t i : closure_.rhd_pure)
    if (i != eta && i != closure_.bottom) pool.push_back(i);

  // A check whose signed set clashes is a (1)-activation that fails at once.
  auto check = [&](std::optional<SignedSet> constraints) -> SatTrace {
    if (!constraints) {
      enter_sat(depth + 1);
      return nullptr;
    }
    return sat_set(*constraints, depth + 1, &boxes);
  };

  std::vector<char> in_theta(n, 0);
  std::vector<char> in_sigma(n, 0);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t j = 0; j < k; ++j) combo[j] = j;
    do {
      SigmaThetaPair pair;
      std::fill(in_theta.begin(), in_theta.end(), 0);
      std::fill(in_sigma.begin(), in_sigma.end(), 0);
      for (std::size_t c : combo) in_theta[pool[c]] = 1;
      for (std::size_t i : closure_.rhd_pure)
        if (!in_theta[i]) in_sigma[i] = 1;
      in_sigma[eta] = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (in_sigma[i]) pair.sigma.push_back(i);
        if (in_theta[i]) pair.theta.push_back(i);
      }

      const bool covered = std::all_of(delta_plus.begin(), delta_plus.end(), [&](std::size_t j) {
        const PureShape& s = closure_.shape[closure_.rhd_i_pure[j]];
        return in_sigma[s.left] || in_theta[s.right];
      });
      if (!covered) continue;
      ++stats_.pairs_tried;

      SatTrace a = check(pair_constraints(pair, chi));
      if (!a) continue;
      RefuteNode node{zeta, pair, std::move(a), {}};
      bool all = true;
      for (std::size_t theta : pair.theta) {
        SatTrace b = check(pair_constraints(pair, theta));
        if (!b) {
          all = false;
          break;
        }
        node.check_b.emplace_back(theta, std::move(b));
      }
      if (all) return node;
    } while (k > 0 && next_combination(combo, pool.size()));
  }
  return std::nullopt;
}

SatResult decide_sat(const Formula& delta, DecideOptions options) {
  auto closure = std::make_shared<const ClosureSets>(compute_closure(delta));
  Decider decider(*closure, options);
  SignedSet input(closure->gamma_pure.size());
  (void)input.assign(closure->root_index, Sign::Pos);
  SatResult result;
  result.trace = decider.sat_set(input);
  result.sat = result.trace != nullptr;
  result.closure = std::move(closure);
  result.stats = decider.stats();
  return result;
}

ValidResult decide_valid(const Formula& delta, DecideOptions options) {
  ValidResult result;
  result.negation = decide_sat(negation(delta), options);
  result.valid = !result.negation.sat;
  return result;
}

}  // namespace ilsat
