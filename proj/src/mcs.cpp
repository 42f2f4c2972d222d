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

#include "ilsat/mcs.hpp"

#include <algorithm>

namespace ilsat {

bool SignedSet::assign(std::size_t index, Sign sign) {
  Sign& slot = signs_[index];
  if (slot == flip(sign) && sign != Sign::Unset) return false;
  slot = sign;
  return true;
}

std::vector<std::pair<std::size_t, Sign>> SignedSet::entries() const {
  std::vector<std::pair<std::size_t, Sign>> out;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != Sign::Unset) out.emplace_back(i, signs_[i]);
  return out;
}

std::size_t SignedSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Sign s : signs_) {
    h ^= static_cast<std::size_t>(static_cast<std::int8_t>(s) + 1);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::size_t> abstract_atoms(const ClosureSets& closure) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < closure.gamma_pure.size(); ++i)
    if (closure.shape[i].kind == Kind::Atom) out.push_back(i);
  out.insert(out.end(), closure.rhd_i_pure.begin(), closure.rhd_i_pure.end());
  return out;
}

McsStream::McsStream(const SignedSet& constraints, const ClosureSets& closure, McsOrder order)
    : closure_(closure),
      constraint_(closure.gamma_pure.size(), Sign::Unset),
      atoms_(abstract_atoms(closure)),
      atom_of_(closure.gamma_pure.size(), kNoIndex),
      value_(atoms_.size(), 0),
      tried_(atoms_.size(), 0),
      eval_(closure.gamma_pure.size(), 0),
      collapse_from_(atoms_.size()) {
  if (order == McsOrder::RhdProjection) {
    const std::size_t vars = atoms_.size() - closure.rhd_i_pure.size();
    std::rotate(atoms_.begin(), atoms_.begin() + static_cast<std::ptrdiff_t>(vars), atoms_.end());
    collapse_from_ = closure.rhd_i_pure.size();
  }
  for (auto [index, sign] : constraints.entries()) constraint_[index] = sign;
  for (std::size_t a = 0; a < atoms_.size(); ++a) atom_of_[atoms_[a]] = a;
}

// Three-valued (Kleene) evaluation of every closure member under the current
// partial assignment; infeasible iff some constrained member is already
// decided against its sign.  Members are in size order, so children are
// evaluated before their parents.
bool McsStream::feasible() {
  const auto& shape = closure_.shape;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::int8_t v = 0;
    switch (shape[i].kind) {
      case Kind::Bottom:
        v = -1;
        break;
      case Kind::Atom:
      case Kind::Rhd:
        v = value_[atom_of_[i]];
        break;
      case Kind::Implies: {
        const std::int8_t a = eval_[shape[i].left];
        const std::int8_t b = eval_[shape[i].right];
        if (a == -1 || b == 1) v = 1;
        else if (a == 1 && b == -1) v = -1;
        break;
      }
    }
    eval_[i] = v;
    const Sign want = constraint_[i];
    if (want != Sign::Unset && v != 0 && v != static_cast<std::int8_t>(want)) return false;
  }
  return true;
}

bool McsStream::backtrack() {
  while (depth_ > 0) {
    const std::size_t k = depth_ - 1;
    if (tried_[k] == 1) {
      tried_[k] = 2;
      value_[k] = -1;
      if (feasible()) return true;
      continue;
    }
    tried_[k] = 0;
    value_[k] = 0;
    --depth_;
  }
  return false;
}

MaxConsistentSet McsStream::emit() const {
  std::vector<bool> positive(eval_.size());
  for (std::size_t i = 0; i < eval_.size(); ++i) positive[i] = eval_[i] == 1;
  return MaxConsistentSet(std::move(positive));
}

std::optional<MaxConsistentSet> McsStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!feasible()) {
      done_ = true;
      return std::nullopt;
    }
  } else {
    while (depth_ > collapse_from_) {
      --depth_;
      tried_[depth_] = 0;
      value_[depth_] = 0;
    }
    if (!backtrack()) {
      done_ = true;
      return std::nullopt;
    }
  }
  while (true) {
    if (depth_ == atoms_.size()) {
      // Every member is decided once all atoms are, and eval_ reflects the
      // last feasible() call on this assignment.
      return emit();
    }
    tried_[depth_] = 1;
    value_[depth_] = 1;
    ++depth_;
    if (feasible()) continue;
    if (!backtrack()) {
      done_ = true;
      return std::nullopt;
    }
  }
}

bool is_prop_consistent(const SignedSet& s, const ClosureSets& closure) {
  return McsStream(s, closure).next().has_value();
}

bool is_coherent(const MaxConsistentSet& m, const ClosureSets& closure) {
  if (m.size() != closure.gamma_pure.size()) return false;
  if (m.positive(closure.bottom)) return false;
  for (std::size_t i = 0; i < closure.shape.size(); ++i) {
    const PureShape& s = closure.shape[i];
    if (s.kind != Kind::Implies) continue;
    const bool expected = !m.positive(s.left) || m.positive(s.right);
    if (m.positive(i) != expected) return false;
  }
  return true;
}

}  // namespace ilsat
