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

#include "ilsat/closure.hpp"

#include <algorithm>
#include <unordered_set>

namespace ilsat {

std::optional<std::size_t> ClosureSets::pure_index(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClosureSets compute_closure(const Formula& delta) {
  ClosureSets c(delta);
  const std::vector<Formula> sub = subformulas(delta);

  std::unordered_set<Formula, FormulaHash> rhd_args;
  for (const Formula& f : sub) {
    if (!f.is_rhd()) continue;
    if (rhd_args.insert(f.left()).second) c.gamma_rhd.push_back(f.left());
    if (rhd_args.insert(f.right()).second) c.gamma_rhd.push_back(f.right());
  }
  std::sort(c.gamma_rhd.begin(), c.gamma_rhd.end(), canonical_less);

  std::unordered_set<Formula, FormulaHash> pure(sub.begin(), sub.end());
  c.gamma_pure = sub;
  auto add = [&](const Formula& f) {
    if (pure.insert(f).second) c.gamma_pure.push_back(f);
  };
  add(Formula::bottom());
  for (const Formula& phi : c.gamma_rhd) add(Formula::rhd(phi, Formula::bottom()));
  std::sort(c.gamma_pure.begin(), c.gamma_pure.end(), canonical_less);

  for (std::size_t i = 0; i < c.gamma_pure.size(); ++i) c.index_.emplace(c.gamma_pure[i], i);

  c.shape.resize(c.gamma_pure.size());
  c.is_rhd_argument_.assign(c.gamma_pure.size(), false);
  for (std::size_t i = 0; i < c.gamma_pure.size(); ++i) {
    const Formula& f = c.gamma_pure[i];
    PureShape& s = c.shape[i];
    s.kind = f.kind();
    if (f.is_implies() || f.is_rhd()) {
      s.left = c.index_.at(f.left());
      s.right = c.index_.at(f.right());
    }
    if (auto b = c.pure_index(Formula::rhd(f, Formula::bottom()))) s.box = *b;
    if (f.is_rhd()) {
      c.gamma_rhd_i.push_back(f);
      c.rhd_i_pure.push_back(i);
    }
  }
  for (const Formula& phi : c.gamma_rhd) {
    const std::size_t i = c.index_.at(phi);
    c.rhd_pure.push_back(i);
    c.is_rhd_argument_[i] = true;
  }
  c.bottom = c.index_.at(Formula::bottom());
  c.root_index = c.index_.at(delta);
  return c;
}

}  // namespace ilsat
