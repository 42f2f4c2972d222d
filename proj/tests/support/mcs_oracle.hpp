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

// Brute-force reference for maximal consistent set enumeration.  Evaluates
// closure members directly on the formula trees, so it shares nothing with
// McsStream beyond the closure itself.

#ifndef ILSAT_TESTS_MCS_ORACLE_HPP
#define ILSAT_TESTS_MCS_ORACLE_HPP

#include <cstddef>
#include <set>
#include <unordered_map>
#include <vector>

#include "ilsat/closure.hpp"
#include "ilsat/formula.hpp"
#include "ilsat/mcs.hpp"

namespace ilsat::testing {

inline bool eval_abstracted(const Formula& f, const std::unordered_map<Formula, bool, FormulaHash>& atoms) {
  switch (f.kind()) {
    case Kind::Bottom:
      return false;
    case Kind::Atom:
    case Kind::Rhd:
      return atoms.at(f);
    case Kind::Implies:
      return !eval_abstracted(f.left(), atoms) || eval_abstracted(f.right(), atoms);
  }
  return false;
}

// Sign maps (positive flags over gamma_pure) of every assignment to the
// abstraction alphabet that satisfies `constraints`.
inline std::set<std::vector<bool>> brute_force_mcs(const SignedSet& constraints, const ClosureSets& c) {
  std::vector<Formula> alphabet;
  for (const Formula& f : c.gamma_pure)
    if (f.is_atom() || f.is_rhd()) alphabet.push_back(f);
  std::set<std::vector<bool>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << alphabet.size()); ++mask) {
    std::unordered_map<Formula, bool, FormulaHash> atoms;
    for (std::size_t i = 0; i < alphabet.size(); ++i) atoms.emplace(alphabet[i], (mask >> i & 1) != 0);
    std::vector<bool> signs(c.gamma_pure.size());
    bool ok = true;
    for (std::size_t i = 0; i < c.gamma_pure.size(); ++i) {
      signs[i] = eval_abstracted(c.gamma_pure[i], atoms);
      const Sign want = constraints.at(i);
      if (want != Sign::Unset && signs[i] != (want == Sign::Pos)) ok = false;
    }
    if (ok) out.insert(std::move(signs));
  }
  return out;
}

inline std::set<std::vector<bool>> stream_mcs(const SignedSet& constraints, const ClosureSets& c,
                                              std::size_t* emitted = nullptr) {
  std::set<std::vector<bool>> out;
  McsStream stream(constraints, c);
  std::size_t n = 0;
  while (auto m = stream.next()) {
    std::vector<bool> signs(m->size());
    for (std::size_t i = 0; i < m->size(); ++i) signs[i] = m->positive(i);
    out.insert(std::move(signs));
    ++n;
  }
  if (emitted) *emitted = n;
  return out;
}

inline SignedSet singleton(const ClosureSets& c, const Formula& f, Sign sign = Sign::Pos) {
  SignedSet s(c.gamma_pure.size());
  (void)s.assign(c.pure_index(f).value(), sign);
  return s;
}

}  // namespace ilsat::testing

#endif  // ILSAT_TESTS_MCS_ORACLE_HPP
