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

#include "ilsat/closure.hpp"
#include "ilsat/corpus.hpp"
#include "ilsat/decide.hpp"
#include "ilsat/semantics.hpp"
#include "support/mcs_oracle.hpp"

namespace ilsat {
namespace {

using testing::singleton;

std::size_t rhd_i(const ClosureSets& c, const char* text) {
  const Formula f = parse(text);
  for (std::size_t j = 0; j < c.gamma_rhd_i.size(); ++j)
    if (c.gamma_rhd_i[j] == f) return j;
  ADD_FAILURE() << text << " not in gamma_rhd_i";
  return 0;
}

std::size_t pure(const ClosureSets& c, const char* text) { return c.pure_index(parse(text)).value(); }

TEST(SatSet, BottomIsUnsat) {
  const ClosureSets c = compute_closure(parse("p"));
  Decider d(c);
  EXPECT_EQ(d.sat_set(singleton(c, Formula::bottom())), nullptr);
  EXPECT_EQ(d.stats().mcs_checks, 0u);
}

TEST(SatSet, VariableGivesLeafTrace) {
  const ClosureSets c = compute_closure(parse("p"));
  Decider d(c);
  const SatTrace t = d.sat_set(singleton(c, parse("p")));
  ASSERT_NE(t, nullptr);
  EXPECT_TRUE(t->chosen.split.plus.empty());
  EXPECT_TRUE(t->chosen.split.minus.empty());
  EXPECT_TRUE(t->chosen.refutations.empty());
  EXPECT_EQ(d.stats().max_sat_depth, 1u);
  EXPECT_EQ(d.stats().mcs_checks, 1u);
}

TEST(SatSet, NegatedRhdIsSat) {
  const ClosureSets c = compute_closure(parse("p |> q"));
  Decider d(c);
  const SatTrace t = d.sat_set(singleton(c, parse("p |> q"), Sign::Neg));
  ASSERT_NE(t, nullptr);
  EXPECT_FALSE(t->chosen.mcs.positive(pure(c, "p |> q")));
  // Cross-check with the oracle: a two-world model exists.
  auto m = oracle_sat(parse("~(p |> q)"), 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 2u);
}

TEST(CheckMcs, EmptyMinusSucceedsImmediately) {
  const ClosureSets c = compute_closure(parse("p |> q"));
  SignedSet all_pos(c.gamma_pure.size());
  for (std::size_t i : c.rhd_i_pure) ASSERT_TRUE(all_pos.assign(i, Sign::Pos));
  auto m = McsStream(all_pos, c).next();
  ASSERT_TRUE(m);
  Decider d(c);
  auto node = d.check_mcs(*m, 1, nullptr);
  ASSERT_TRUE(node);
  EXPECT_TRUE(node->refutations.empty());
  EXPECT_EQ(d.stats().refute_calls, 0u);
}

TEST(CheckMcs, AllRhdNegativeIsSatisfiable) {
  // not(p |> q), dia p, dia q: the oracle finds a small model.
  ASSERT_TRUE(oracle_sat(parse("~(p |> q) & dia p & dia q"), 3));
  const ClosureSets c = compute_closure(parse("p |> q"));
  SignedSet s(c.gamma_pure.size());
  for (std::size_t i : c.rhd_i_pure) ASSERT_TRUE(s.assign(i, Sign::Neg));
  ASSERT_TRUE(s.assign(pure(c, "p"), Sign::Pos));
  ASSERT_TRUE(s.assign(pure(c, "q"), Sign::Pos));
  auto m = McsStream(s, c).next();
  ASSERT_TRUE(m);
  Decider d(c);
  auto node = d.check_mcs(*m, 1, nullptr);
  ASSERT_TRUE(node);
  EXPECT_TRUE(node->split.plus.empty());
  EXPECT_EQ(node->split.minus.size(), 3u);
  ASSERT_EQ(node->refutations.size(), 3u);
  for (const RefuteNode& r : node->refutations) EXPECT_EQ(r.check_b.size(), r.pair.theta.size());
}

TEST(RefuteRhd, FirstPassingPairForAtoms) {
  // Gamma_rhd = {p, q}, zeta = p |> q, empty delta_plus.  Candidate Theta = {}
  // gives Sigma = {p, q}, whose check (a) contains both p and ~p; the next
  // candidate Theta = {p}, Sigma = {q} passes with one-world models.
  const ClosureSets c = compute_closure(parse("p |> q"));
  Decider d(c);
  const std::vector<std::size_t> no_boxes;
  auto node = d.refute_rhd({}, rhd_i(c, "p |> q"), 1, no_boxes);
  ASSERT_TRUE(node);
  EXPECT_EQ(node->pair.sigma, (std::vector<std::size_t>{pure(c, "q")}));
  EXPECT_EQ(node->pair.theta, (std::vector<std::size_t>{pure(c, "p")}));
  ASSERT_EQ(node->check_b.size(), 1u);
  EXPECT_EQ(node->check_b[0].first, pure(c, "p"));
  EXPECT_EQ(d.stats().pairs_tried, 2u);
}

TEST(RefuteRhd, BoxedChiInDeltaPlusDiesWithoutRecursion) {
  // chi |> false in delta_plus forces chi into Sigma, so every check (a)
  // contains chi and ~chi and no procedure (2) ever runs.
  const ClosureSets c = compute_closure(parse("p |> q"));
  Decider d(c);
  const std::vector<std::size_t> boxes{pure(c, "p |> false")};
  auto node = d.refute_rhd({rhd_i(c, "p |> false")}, rhd_i(c, "p |> q"), 1, boxes);
  EXPECT_FALSE(node);
  EXPECT_EQ(d.stats().mcs_checks, 0u);
  EXPECT_GT(d.stats().sat_calls, 0u);
}

TEST(RefuteRhd, CoveringByEtaMembership) {
  // delta_plus = {q |> p}: eta = q is always in Sigma, covering it.
  const ClosureSets c = compute_closure(parse("(p |> q) -> (q |> p)"));
  Decider d(c);
  const std::vector<std::size_t> boxes;
  auto node = d.refute_rhd({rhd_i(c, "q |> p")}, rhd_i(c, "p |> q"), 1, boxes);
  ASSERT_TRUE(node);
  EXPECT_EQ(node->pair.sigma.front(), pure(c, "q"));
}

TEST(RefuteRhd, BottomEtaOutsideGammaRhd) {
  // Gamma_rhd = {p, q} does not contain false, yet p |> false must be
  // refutable: dia p & (p |> q) is satisfiable.
  const ClosureSets c = compute_closure(parse("p |> q"));
  Decider d(c);
  const std::vector<std::size_t> boxes;
  auto node = d.refute_rhd({}, rhd_i(c, "p |> false"), 1, boxes);
  ASSERT_TRUE(node);
  EXPECT_EQ(node->pair.sigma.front(), c.bottom);
  EXPECT_TRUE(decide_sat(parse("dia p & (p |> q)")).sat);
}

TEST(PairConstraints, ClashingSignsGiveNullopt) {
  const ClosureSets c = compute_closure(parse("p |> q"));
  Decider d(c);
  const SigmaThetaPair pair{{pure(c, "p"), pure(c, "q")}, {}};
  EXPECT_FALSE(d.pair_constraints(pair, pure(c, "p")));
  const SigmaThetaPair ok{{pure(c, "q")}, {pure(c, "p")}};
  auto s = d.pair_constraints(ok, pure(c, "p"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at(pure(c, "q")), Sign::Neg);
  EXPECT_EQ(s->at(pure(c, "q |> false")), Sign::Pos);
  EXPECT_EQ(s->at(pure(c, "p")), Sign::Pos);
  EXPECT_EQ(s->at(pure(c, "p |> false")), Sign::Pos);
}

TEST(Budget, ExceedingDepthThrows) {
  const ClosureSets c = compute_closure(parse("p"));
  Decider d(c);
  EXPECT_THROW(d.sat_set(singleton(c, parse("p")), c.depth_budget() + 1, nullptr), BudgetExceeded);
  EXPECT_THROW(d.check_mcs(*McsStream(singleton(c, parse("p")), c).next(), c.depth_budget(), nullptr),
               BudgetExceeded);
}

TEST(Budget, NonGrowingBoxesTrip) {
  const ClosureSets c = compute_closure(parse("p |> q"));
  auto m = McsStream(singleton(c, parse("p |> q")), c).next();
  ASSERT_TRUE(m);
  Decider d(c);
  std::vector<std::size_t> parent;
  for (std::size_t i : c.rhd_i_pure)
    if (c.shape[i].right == c.bottom && m->positive(i)) parent.push_back(i);
  EXPECT_THROW(d.check_mcs(*m, 2, &parent), InvariantViolation);
}

TEST(DecideSat, Examples) {
  EXPECT_FALSE(decide_sat(Formula::bottom()).sat);
  EXPECT_TRUE(decide_sat(parse("p")).sat);
  EXPECT_FALSE(decide_sat(parse("dia p & box ~p")).sat);
  EXPECT_TRUE(decide_sat(parse("p |> q")).sat);
  EXPECT_TRUE(decide_sat(parse("~(p |> q)")).sat);
}

TEST(DecideSat, DiamondAndBoxNegationShareOneAtom) {
  // dia p and box ~p desugar to ~(p |> false) and ~~p |> false: distinct
  // atoms, so UNSAT needs the modal reasoning, not just propositional.
  const ClosureSets c = compute_closure(parse("dia p & box ~p"));
  EXPECT_TRUE(c.pure_index(parse("p |> false")).has_value());
  EXPECT_TRUE(c.pure_index(parse("~~p |> false")).has_value());
  EXPECT_FALSE(oracle_sat(parse("dia p & box ~p"), 3));
}

TEST(DecideValid, Examples) {
  EXPECT_TRUE(decide_valid(parse("box (p -> q) -> (p |> q)")).valid);
  EXPECT_TRUE(decide_valid(parse("dia p |> p")).valid);
  const ValidResult v = decide_valid(parse("box p -> p"));
  EXPECT_FALSE(v.valid);
  EXPECT_TRUE(v.negation.trace);
}

TEST(DecideProperty, MemoizationAgreesAndDepthStaysInBudget) {
  FormulaGenerator gen(41);
  for (int i = 0; i < 150; ++i) {
    const Formula phi = gen.next();
    const SatResult plain = decide_sat(phi);
    const SatResult memo = decide_sat(phi, {.memoize = true});
    EXPECT_EQ(plain.sat, memo.sat) << to_string(phi);
    EXPECT_LE(plain.stats.max_sat_depth, plain.closure->depth_budget());
    EXPECT_LE(plain.stats.max_mcs_nesting + 1, plain.closure->depth_budget());
  }
}

}  // namespace
}  // namespace ilsat
