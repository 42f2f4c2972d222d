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

#include "ilsat/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ilsat {

World VeltmanModel::add_world(std::string name, std::vector<std::string> true_atoms) {
  names_.push_back(std::move(name));
  r_.emplace_back();
  s_.emplace_back();
  std::sort(true_atoms.begin(), true_atoms.end());
  true_atoms.erase(std::unique(true_atoms.begin(), true_atoms.end()), true_atoms.end());
  valuation_.push_back(std::move(true_atoms));
  return names_.size() - 1;
}

void VeltmanModel::add_r(World x, World y) { r_.at(x).push_back(y); }

void VeltmanModel::add_s(World x, World u, World v) { s_.at(x).emplace_back(u, v); }

void VeltmanModel::normalize() {
  for (auto& succ : r_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  for (auto& pairs : s_) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }
}

std::optional<World> VeltmanModel::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<World>(it - names_.begin());
}

bool VeltmanModel::r(World x, World y) const { return std::binary_search(r_[x].begin(), r_[x].end(), y); }

bool VeltmanModel::s(World x, World u, World v) const {
  return std::binary_search(s_[x].begin(), s_[x].end(), std::pair{u, v});
}

bool VeltmanModel::holds_atom(World w, const std::string& atom) const {
  return std::binary_search(valuation_[w].begin(), valuation_[w].end(), atom);
}

std::string describe(const FrameViolation& v, const VeltmanModel& m) {
  auto n = [&](World w) { return w < m.size() ? m.name(w) : "#" + std::to_string(w); };
  switch (v.kind) {
    case FrameViolation::Kind::Reflexive:
      return "R is not irreflexive: " + n(v.x) + " R " + n(v.x);
    case FrameViolation::Kind::Transitive:
      return "R is not transitive: " + n(v.x) + " R " + n(v.u) + " R " + n(v.v);
    case FrameViolation::Kind::ConditionA:
      return "condition a: " + n(v.u) + " S_" + n(v.x) + " " + n(v.v) + " outside R[" + n(v.x) + "]";
    case FrameViolation::Kind::ConditionBReflexive:
      return "condition b: S_" + n(v.x) + " not reflexive at " + n(v.u);
    case FrameViolation::Kind::ConditionBTransitive:
      return "condition b: S_" + n(v.x) + " not transitive at " + n(v.u) + ", " + n(v.v);
    case FrameViolation::Kind::ConditionC:
      return "condition c: " + n(v.x) + " R " + n(v.u) + " R " + n(v.v) + " but not " + n(v.u) + " S_" + n(v.x) +
             " " + n(v.v);
    case FrameViolation::Kind::Root:
      return "root " + n(v.x) + " does not see " + n(v.u);
  }
  return "unknown violation";
}

std::vector<FrameViolation> frame_check(const VeltmanModel& m) {
  using K = FrameViolation::Kind;
  std::vector<FrameViolation> out;
  const std::size_t n = m.size();
  for (World x = 0; x < n; ++x) {
    for (World y : m.successors(x)) {
      if (y == x) out.push_back({K::Reflexive, x, x, x});
      for (World z : m.successors(y))
        if (!m.r(x, z)) out.push_back({K::Transitive, x, y, z});
    }
    const auto& pairs = m.s_pairs(x);
    for (auto [u, v] : pairs) {
      if (!m.r(x, u) || !m.r(x, v)) out.push_back({K::ConditionA, x, u, v});
      auto [lo, hi] = std::equal_range(pairs.begin(), pairs.end(), std::pair<World, World>{v, 0},
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto it = lo; it != hi; ++it)
        if (!m.s(x, u, it->second)) out.push_back({K::ConditionBTransitive, x, u, it->second});
    }
    for (World u : m.successors(x)) {
      if (!m.s(x, u, u)) out.push_back({K::ConditionBReflexive, x, u, u});
      for (World v : m.successors(u))
        if (!m.s(x, u, v)) out.push_back({K::ConditionC, x, u, v});
    }
  }
  if (m.root) {
    for (World w = 0; w < n; ++w)
      if (w != *m.root && !m.r(*m.root, w)) out.push_back({K::Root, *m.root, w, w});
  }
  return out;
}

std::vector<bool> truth_set(const VeltmanModel& m, const Formula& phi) {
  const std::size_t n = m.size();
  switch (phi.kind()) {
    case Kind::Bottom:
      return std::vector<bool>(n, false);
    case Kind::Atom: {
      std::vector<bool> out(n);
      for (World w = 0; w < n; ++w) out[w] = m.holds_atom(w, phi.name());
      return out;
    }
    case Kind::Implies: {
      std::vector<bool> a = truth_set(m, phi.left());
      std::vector<bool> b = truth_set(m, phi.right());
      for (World w = 0; w < n; ++w) a[w] = !a[w] || b[w];
      return a;
    }
    case Kind::Rhd: {
      const std::vector<bool> a = truth_set(m, phi.left());
      const std::vector<bool> b = truth_set(m, phi.right());
      std::vector<bool> out(n, true);
      for (World x = 0; x < n; ++x) {
        const auto& pairs = m.s_pairs(x);
        for (World u : m.successors(x)) {
          if (!a[u]) continue;
          auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<World, World>{u, 0});
          bool found = false;
          for (; it != pairs.end() && it->first == u; ++it) {
            if (b[it->second]) {
              found = true;
              break;
            }
          }
          if (!found) {
            out[x] = false;
            break;
          }
        }
      }
      return out;
    }
  }
  return std::vector<bool>(n, false);
}

bool model_check(const VeltmanModel& m, World x, const Formula& phi) {
  if (x >= m.size()) throw UnknownWorld("unknown world #" + std::to_string(x));
  return truth_set(m, phi)[x];
}

namespace {

using Pairs = std::vector<std::pair<World, World>>;

bool transitive_on(const std::vector<std::vector<char>>& rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (rel[j][k] && !rel[i][k]) return false;
  return true;
}

// All admissible S_x: supersets of the forced core inside R[x] x R[x] that
// are transitive.
std::vector<Pairs> s_options(const std::vector<std::vector<char>>& r, std::size_t n, World x) {
  std::vector<World> succ;
  for (World u = 0; u < n; ++u)
    if (r[x][u]) succ.push_back(u);
  std::vector<std::vector<char>> forced(n, std::vector<char>(n, 0));
  for (World u : succ) {
    forced[u][u] = 1;
    for (World v = 0; v < n; ++v)
      if (r[u][v]) forced[u][v] = 1;
  }
  Pairs optional;
  for (World u : succ)
    for (World v : succ)
      if (!forced[u][v]) optional.emplace_back(u, v);

  std::vector<Pairs> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask) {
    auto rel = forced;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (mask >> b & 1) rel[optional[b].first][optional[b].second] = 1;
    if (!transitive_on(rel, n)) continue;
    Pairs pairs;
    for (World u = 0; u < n; ++u)
      for (World v = 0; v < n; ++v)
        if (rel[u][v]) pairs.emplace_back(u, v);
    out.push_back(std::move(pairs));
  }
  return out;
}

}  // namespace

void for_each_model(std::size_t max_worlds, std::span<const std::string> atoms,
                    const std::function<bool(const VeltmanModel&)>& visit) {
  if (max_worlds < 1) throw CapExceeded("max_worlds must be at least 1");
  if (max_worlds > kMaxOracleWorlds)
    throw CapExceeded("max_worlds " + std::to_string(max_worlds) + " exceeds cap " +
                      std::to_string(kMaxOracleWorlds));
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    Pairs optional;
    for (World i = 1; i < n; ++i)
      for (World j = 1; j < n; ++j)
        if (i != j) optional.emplace_back(i, j);
    for (std::size_t rmask = 0; rmask < (std::size_t{1} << optional.size()); ++rmask) {
      std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
      for (World i = 1; i < n; ++i) r[0][i] = 1;
      for (std::size_t b = 0; b < optional.size(); ++b)
        if (rmask >> b & 1) r[optional[b].first][optional[b].second] = 1;
      if (!transitive_on(r, n)) continue;

      std::vector<std::vector<Pairs>> options(n);
      for (World x = 0; x < n; ++x) options[x] = s_options(r, n, x);

      std::vector<std::size_t> pick(n, 0);
      while (true) {
        const std::size_t bits = n * atoms.size();
        for (std::size_t val = 0; val < (std::size_t{1} << bits); ++val) {
          VeltmanModel m;
          for (World w = 0; w < n; ++w) {
            std::vector<std::string> true_atoms;
            for (std::size_t a = 0; a < atoms.size(); ++a)
              if (val >> (w * atoms.size() + a) & 1) true_atoms.push_back(atoms[a]);
            m.add_world("w" + std::to_string(w), std::move(true_atoms));
          }
          for (World x = 0; x < n; ++x) {
            for (World y = 0; y < n; ++y)
              if (r[x][y]) m.add_r(x, y);
            for (auto [u, v] : options[x][pick[x]]) m.add_s(x, u, v);
          }
          m.root = 0;
          m.normalize();
          if (!visit(m)) return;
        }
        std::size_t x = 0;
        while (x < n && ++pick[x] == options[x].size()) pick[x++] = 0;
        if (x == n) break;
      }
    }
  }
}

std::optional<VeltmanModel> oracle_sat(const Formula& phi, std::size_t max_worlds) {
  const std::vector<std::string> atoms = variables(phi);
  std::optional<VeltmanModel> found;
  for_each_model(max_worlds, atoms, [&](const VeltmanModel& m) {
    if (!model_check(m, 0, phi)) return true;
    found = m;
    return false;
  });
  return found;
}

nlohmann::ordered_json to_json(const VeltmanModel& m) {
  nlohmann::ordered_json j;
  j["worlds"] = nlohmann::ordered_json::array();
  for (World w = 0; w < m.size(); ++w) j["worlds"].push_back(m.name(w));
  j["root"] = m.root ? nlohmann::ordered_json(m.name(*m.root)) : nlohmann::ordered_json(nullptr);
  j["R"] = nlohmann::ordered_json::array();
  for (World x = 0; x < m.size(); ++x)
    for (World y : m.successors(x)) j["R"].push_back({m.name(x), m.name(y)});
  j["S"] = nlohmann::ordered_json::object();
  for (World x = 0; x < m.size(); ++x) {
    auto pairs = nlohmann::ordered_json::array();
    for (auto [u, v] : m.s_pairs(x)) pairs.push_back({m.name(u), m.name(v)});
    j["S"][m.name(x)] = std::move(pairs);
  }
  j["valuation"] = nlohmann::ordered_json::object();
  for (World w = 0; w < m.size(); ++w) j["valuation"][m.name(w)] = m.valuation(w);
  return j;
}

VeltmanModel model_from_json(const nlohmann::json& j) {
  VeltmanModel m;
  const auto& worlds = j.at("worlds");
  for (const auto& w : worlds) {
    const std::string name = w.get<std::string>();
    if (m.find(name)) throw std::invalid_argument("duplicate world '" + name + "'");
    m.add_world(name);
  }
  auto world = [&](const nlohmann::json& name) {
    auto w = m.find(name.get<std::string>());
    if (!w) throw std::invalid_argument("unknown world '" + name.get<std::string>() + "'");
    return *w;
  };
  // Rebuild with valuations in place; add_world is the only way to set them.
  VeltmanModel out;
  for (World w = 0; w < m.size(); ++w) {
    std::vector<std::string> atoms;
    if (j.contains("valuation") && j["valuation"].contains(m.name(w)))
      atoms = j["valuation"][m.name(w)].get<std::vector<std::string>>();
    out.add_world(m.name(w), std::move(atoms));
  }
  if (j.contains("valuation"))
    for (const auto& [name, _] : j["valuation"].items()) world(nlohmann::json(name));
  if (j.contains("root") && !j["root"].is_null()) out.root = world(j["root"]);
  for (const auto& edge : j.at("R")) out.add_r(world(edge.at(0)), world(edge.at(1)));
  if (j.contains("S")) {
    for (const auto& [name, pairs] : j["S"].items()) {
      const World x = world(nlohmann::json(name));
      for (const auto& p : pairs) out.add_s(x, world(p.at(0)), world(p.at(1)));
    }
  }
  out.normalize();
  return out;
}

}  // namespace ilsat
