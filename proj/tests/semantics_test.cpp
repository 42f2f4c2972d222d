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

#include <gtest/gtest.h>

#include <algorithm>

#include "ilsat/corpus.hpp"
#include "ilsat/semantics.hpp"

namespace ilsat {
namespace {

using Kind_ = FrameViolation::Kind;

// Root x with successors u, v; S_x = {(u,u), (v,v), (u,v)}; p at u, q at v.
VeltmanModel fork() {
  VeltmanModel m;
  const World x = m.add_world("x");
  const World u = m.add_world("u", {"p"});
  const World v = m.add_world("v", {"q"});
  m.add_r(x, u);
  m.add_r(x, v);
  m.add_s(x, u, u);
  m.add_s(x, v, v);
  m.add_s(x, u, v);
  m.root = x;
  m.normalize();
  return m;
}

bool has(const std::vector<FrameViolation>& vs, Kind_ kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const FrameViolation& v) { return v.kind == kind; });
}

TEST(FrameCheck, ForkIsVeltmanFrame) { EXPECT_TRUE(frame_check(fork()).empty()); }

TEST(FrameCheck, ReflexiveR) {
  VeltmanModel m;
  const World x = m.add_world("x");
  m.add_r(x, x);
  m.add_s(x, x, x);
  m.normalize();
  EXPECT_TRUE(has(frame_check(m), Kind_::Reflexive));
}

TEST(FrameCheck, ConditionCNamesTheTriple) {
  VeltmanModel m;
  const World x = m.add_world("x");
  const World u = m.add_world("u");
  const World v = m.add_world("v");
  m.add_r(x, u);
  m.add_r(x, v);
  m.add_r(u, v);
  m.add_s(x, u, u);
  m.add_s(x, v, v);
  m.add_s(u, v, v);
  m.normalize();
  const auto vs = frame_check(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, Kind_::ConditionC);
  EXPECT_EQ(vs[0].x, x);
  EXPECT_EQ(vs[0].u, u);
  EXPECT_EQ(vs[0].v, v);
  EXPECT_FALSE(describe(vs[0], m).empty());
}

TEST(FrameCheck, OtherViolations) {
  VeltmanModel m;
  const World x = m.add_world("x");
  const World u = m.add_world("u");
  const World v = m.add_world("v");
  m.add_r(x, u);
  m.add_r(u, v);
  m.add_s(x, v, v);
  m.normalize();
  const auto vs = frame_check(m);
  EXPECT_TRUE(has(vs, Kind_::Transitive));
  EXPECT_TRUE(has(vs, Kind_::ConditionA));
  EXPECT_TRUE(has(vs, Kind_::ConditionBReflexive));


  VeltmanModel b;
  const World r = b.add_world("r");
  const World a = b.add_world("a");
  const World c = b.add_world("c");
  const World d = b.add_world("d");
  for (World w : {a, c, d}) {
    b.add_r(r, w);
    b.add_s(r, w, w);
  }
  b.add_s(r, a, c);
  b.add_s(r, c, d);
  b.root = r;
  b.normalize();
  const auto bv = frame_check(b);
  ASSERT_EQ(bv.size(), 1u);
  EXPECT_EQ(bv[0].kind, Kind_::ConditionBTransitive);

  VeltmanModel rootless = fork();
  rootless.add_world("stray");
  rootless.normalize();
  EXPECT_TRUE(has(frame_check(rootless), Kind_::Root));
}

TEST(ModelCheck, Fork) {
  const VeltmanModel m = fork();
  EXPECT_TRUE(model_check(m, 0, parse("p |> q")));
  EXPECT_FALSE(model_check(m, 0, parse("q |> p")));
  EXPECT_TRUE(model_check(m, 0, parse("dia p & dia q")));
  EXPECT_FALSE(model_check(m, 0, parse("box p")));
  EXPECT_TRUE(model_check(m, 1, parse("p & ~q")));
}

TEST(ModelCheck, NegatedRhdOnTwoWorlds) {
  VeltmanModel m;
  const World x = m.add_world("x");
  const World u = m.add_world("u", {"p"});
  m.add_r(x, u);
  m.add_s(x, u, u);
  m.root = x;
  m.normalize();
  EXPECT_TRUE(model_check(m, x, parse("~(p |> q)")));
  EXPECT_TRUE(model_check(m, x, parse("p |> p")));
}

TEST(ModelCheck, TerminalWorldMakesEveryRhdTrue) {
  VeltmanModel m;
  m.add_world("x");
  m.normalize();
  EXPECT_TRUE(model_check(m, 0, parse("p |> false")));
  EXPECT_TRUE(model_check(m, 0, parse("box false")));
  EXPECT_FALSE(model_check(m, 0, parse("dia true")));
}

TEST(ModelCheck, UnknownWorld) { EXPECT_THROW(model_check(fork(), 7, parse("p")), UnknownWorld); }

TEST(Enumerate, SmallCounts) {
  const std::vector<std::string> p{"p"};
  const std::vector<std::string> none;
  std::size_t count = 0;
  for_each_model(1, p, [&](const VeltmanModel&) { return ++count, true; });
  EXPECT_EQ(count, 2u);
  count = 0;
  for_each_model(2, none, [&](const VeltmanModel& m) { return count += m.size() == 2, true; });
  EXPECT_EQ(count, 1u);
  EXPECT_THROW(for_each_model(5, none, [](const VeltmanModel&) { return true; }), CapExceeded);
  EXPECT_THROW(for_each_model(0, none, [](const VeltmanModel&) { return true; }), CapExceeded);
}

// Independent count of rooted frames on n worlds: every transitive
// irreflexive R with 0 below everything and every S_x within R[x] x R[x],
// filtered by frame_check.
std::size_t brute_frames(std::size_t n) {
  std::vector<std::pair<World, World>> edges;
  for (World i = 1; i < n; ++i)
    for (World j = 1; j < n; ++j)
      if (i != j) edges.emplace_back(i, j);
  std::size_t total = 0;
  for (std::size_t rmask = 0; rmask < (std::size_t{1} << edges.size()); ++rmask) {
    std::vector<std::vector<std::pair<World, World>>> cand(n);
    VeltmanModel base;
    for (World w = 0; w < n; ++w) base.add_world("w" + std::to_string(w));
    for (World i = 1; i < n; ++i) base.add_r(0, i);
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (rmask >> b & 1) base.add_r(edges[b].first, edges[b].second);
    base.normalize();
    for (World x = 0; x < n; ++x)
      for (World u : base.successors(x))
        for (World v : base.successors(x)) cand[x].emplace_back(u, v);
    std::size_t bits = 0;
    for (const auto& c : cand) bits += c.size();
    for (std::size_t smask = 0; smask < (std::size_t{1} << bits); ++smask) {
      VeltmanModel m = base;
      std::size_t b = 0;
      for (World x = 0; x < n; ++x)
        for (auto [u, v] : cand[x])
          if (smask >> b++ & 1) m.add_s(x, u, v);
      m.root = 0;
      m.normalize();
      total += frame_check(m).empty();
    }
  }
  return total;
}

TEST(Enumerate, FrameCountsMatchBruteForce) {
  const std::vector<std::string> none;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t count = 0;
    for_each_model(n, none, [&](const VeltmanModel& m) { return count += m.size() == n, true; });
    EXPECT_EQ(count, brute_frames(n)) << n << " worlds";
  }
}

TEST(Enumerate, EveryModelIsAFrame) {
  const std::vector<std::string> p{"p"};
  std::size_t bad = 0;
  for_each_model(4, p, [&](const VeltmanModel& m) { return bad += !frame_check(m).empty(), true; });
  EXPECT_EQ(bad, 0u);
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(oracle_sat(parse("p"), 1));
  EXPECT_FALSE(oracle_sat(parse("false"), 3));
  EXPECT_FALSE(oracle_sat(parse("~(dia p |> p)"), 3));
  EXPECT_FALSE(oracle_sat(parse("~(p |> q)"), 1));
  EXPECT_TRUE(oracle_sat(parse("~(p |> q)"), 2));
  auto m = oracle_sat(parse("~(box p -> p)"), 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 1u);
}

TEST(Json, RoundTrip) {
  const VeltmanModel m = fork();
  const auto j = to_json(m);
  EXPECT_EQ(j["worlds"], (nlohmann::json{"x", "u", "v"}));
  EXPECT_EQ(j["root"], "x");
  EXPECT_EQ(j["R"], nlohmann::json::array({nlohmann::json::array({"x", "u"}), nlohmann::json::array({"x", "v"})}));
  EXPECT_EQ(j["valuation"]["u"], (nlohmann::json{"p"}));
  const VeltmanModel back = model_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Json, RejectsUnknownWorld) {
  const auto j = nlohmann::json::parse(R"({"worlds":["a"],"root":"a","R":[["a","b"]]})");
  EXPECT_THROW(model_from_json(j), std::invalid_argument);
}

bool truth_table(const Formula& f, unsigned val) {
  switch (f.kind()) {
    case Kind::Bottom:
      return false;
    case Kind::Atom:
      return val >> (f.name()[0] - 'p') & 1;
    case Kind::Implies:
      return !truth_table(f.left(), val) || truth_table(f.right(), val);
    case Kind::Rhd:
      break;
  }
  return false;
}

bool has_rhd(const Formula& f) {
  if (f.kind() == Kind::Rhd) return true;
  return f.kind() == Kind::Implies && (has_rhd(f.left()) || has_rhd(f.right()));
}

TEST(ModelCheckProperty, RhdFreeFormulasFollowTruthTables) {
  FormulaGenerator gen(7, {.rhd_probability = 0.0});
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen.next();
    ASSERT_FALSE(has_rhd(f));
    for (unsigned val = 0; val < 8; ++val) {
      VeltmanModel m;
      std::vector<std::string> atoms;
      for (unsigned b = 0; b < 3; ++b)
        if (val >> b & 1) atoms.push_back(std::string(1, static_cast<char>('p' + b)));
      m.add_world("w", atoms);
      m.normalize();
      EXPECT_EQ(model_check(m, 0, f), truth_table(f, val)) << to_string(f);
    }
  }
}

TEST(ModelCheckProperty, TruthSetAgreesPointwise) {
  FormulaGenerator gen(9);
  const VeltmanModel m = fork();
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen.next();
    const auto ts = truth_set(m, f);
    for (World w = 0; w < m.size(); ++w) EXPECT_EQ(ts[w], model_check(m, w, f));
  }
}

}  // namespace
}  // namespace ilsat
