// Copyright 2026 The cground Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "cground/ground.hpp"
#include "cground/golden.hpp"

namespace cground {
namespace {

UtteranceEvent utt(int index, const char* speaker, const char* lf,
                   SpeechAct act = SpeechAct::assertion) {
  UtteranceEvent u;
  u.index = index;
  u.speaker = speaker;
  u.addressee = std::string(speaker) == "A" ? "B" : "A";
  u.lf = parse_lf(lf);
  u.act = act;
  return u;
}

TEST(Endorsement, TotalOrder) {
  EXPECT_LT(Endorsement::hypothesis, Endorsement::default_);
  EXPECT_LT(Endorsement::default_, Endorsement::linguistic);
  EXPECT_EQ(std::string(to_string(Endorsement::default_)), "default");
}

TEST(Ground, QualityAndAir) {
  CommonGround g;
  auto u = utt(1, "A", "(p x)");
  auto q = quality_assert(g, u);
  auto a = air_apply(g, u);
  ASSERT_TRUE(q && a);
  EXPECT_EQ(g.at(*q).content.str(), "(bel A (p x))");
  EXPECT_EQ(g.at(*q).endorsement, Endorsement::linguistic);
  EXPECT_EQ(g.at(*a).endorsement, Endorsement::hypothesis);
  EXPECT_TRUE(g.at(*a).shared);
  EXPECT_EQ(g.at(*a).support.size(), 5u);
  EXPECT_EQ(g.at(*a).support.front().str(), "u1.attend");
}

TEST(Ground, ProposalQualityIsIntention) {
  CommonGround g;
  auto u = utt(1, "A", "(buy we bananas)", SpeechAct::proposal);
  EXPECT_EQ(g.at(*quality_assert(g, u)).content.str(), "(intend A (buy we bananas))");
  EXPECT_EQ(g.at(*air_apply(g, u)).content.str(), "(intend B (buy we bananas))");
}

TEST(Ground, QuestionsAndPromptsAddNothing) {
  CommonGround g;
  auto q = utt(1, "A", "(p x)", SpeechAct::question);
  EXPECT_FALSE(quality_assert(g, q));
  EXPECT_FALSE(air_apply(g, q));
  EXPECT_TRUE(g.suppositions().empty());
}

TEST(Ground, ClaimUnwrapsSelfBelief) {
  EXPECT_EQ(claim(utt(1, "H", "(not (bel H (invest f b)))")).str(), "(not (invest f b))");
  EXPECT_EQ(claim(utt(1, "H", "(bel H (invest f b) 0)")).str(), "(bel H (invest f b) 0)");
  EXPECT_EQ(claim(utt(1, "H", "(bel M (invest f b))")).str(), "(bel M (invest f b))");
}

TEST(Ground, WeakestLinkFollowsUpgrades) {
  CommonGround g;
  auto u = utt(1, "A", "(p x)");
  quality_assert(g, u);
  int a = *air_apply(g, u);
  int d = g.add(parse_lf("(q x)"), Endorsement::linguistic, Rule::siir, {SupportRef::of(a)},
                {"A", "B"}, 2);
  EXPECT_EQ(g.at(d).endorsement, Endorsement::hypothesis);
  upgrade_on_response(g, 1, UpgradeKind::repetition);
  EXPECT_EQ(g.at(a).endorsement, Endorsement::default_);
  EXPECT_EQ(g.at(d).endorsement, Endorsement::default_);
  EXPECT_THROW(upgrade_on_response(g, 9, UpgradeKind::prompt), RulePreconditionError);
}

TEST(Ground, UpgradeTableRowForRow) {
  for (const auto& [kind, expected] : golden::upgrade_table()) {
    CommonGround g;
    auto u = utt(1, "A", "(p x)");
    air_apply(g, u);
    upgrade_on_response(g, 1, kind);
    for (auto slot : kAssumptions)
      EXPECT_EQ(g.assumptions_for(1)[slot], expected[slot]) << to_string(kind) << " " << to_string(slot);
  }
}

TEST(Ground, UpgradesNeverLower) {
  CommonGround g;
  air_apply(g, utt(1, "A", "(p x)"));
  upgrade_on_response(g, 1, UpgradeKind::inference);
  upgrade_on_response(g, 1, UpgradeKind::prompt);
  EXPECT_EQ(g.assumptions_for(1)[Assumption::license], Endorsement::linguistic);
}

TEST(Resolve, StrongerDefeatsWeaker) {
  CommonGround g;
  int weak = g.add(parse_lf("(p x)"), Endorsement::hypothesis, Rule::air, {}, {"A", "B"}, 1);
  int strong = g.add(parse_lf("(not (p x))"), Endorsement::default_, Rule::msis, {}, {"A", "B"}, 2);
  g.resolve();
  EXPECT_EQ(g.at(weak).status, Status::defeated);
  EXPECT_EQ(g.at(weak).defeater, strong);
  EXPECT_EQ(g.at(strong).status, Status::active);
}

TEST(Resolve, EqualStrengthSuspendsBoth) {
  CommonGround g;
  int a = g.add(parse_lf("(p x)"), Endorsement::default_, Rule::air, {}, {"A", "B"}, 1);
  int b = g.add(parse_lf("(not (p x))"), Endorsement::default_, Rule::msis, {}, {"A", "B"}, 2);
  g.resolve();
  EXPECT_EQ(g.at(a).status, Status::suspended);
  EXPECT_EQ(g.at(b).status, Status::suspended);
  ASSERT_EQ(g.conflicts().size(), 1u);
}

TEST(Resolve, SharedContentConflictsWithDisbelief) {
  CommonGround g;
  int shared = g.add(parse_lf("(p x)"), Endorsement::hypothesis, Rule::air, {}, {"A", "B"}, 1,
                     true);
  int dis = g.add(parse_lf("(not (bel B (p x)))"), Endorsement::default_, Rule::siir, {},
                  {"A", "B"}, 2);
  g.resolve();
  EXPECT_EQ(g.at(shared).status, Status::defeated);
  EXPECT_EQ(g.at(dis).status, Status::active);
}

TEST(Siir, BlockedOnlyByDefaultOrStronger) {
  auto scale = Scale::chain("liking", ScaleKind::entailment, {"love", "like"});
  auto u = utt(2, "B", "(like v c)");
  auto pj = parse_lf("(love v c)");
  {
    CommonGround g;
    g.add(pj, Endorsement::hypothesis, Rule::air, {}, {"A", "B"}, 1);
    quality_assert(g, u);
    auto r = siir_apply(g, u, pj, scale, 2);
    EXPECT_TRUE(r.belief && r.content);
  }
  {
    CommonGround g;
    g.add(pj, Endorsement::default_, Rule::air, {}, {"A", "B"}, 1);
    quality_assert(g, u);
    auto r = siir_apply(g, u, pj, scale, 2);
    EXPECT_FALSE(r.belief);
    EXPECT_NE(r.note.find("cancelled"), std::string::npos);
  }
  {
    CommonGround g;
    auto r = siir_apply(g, u, parse_lf("(like w c)"), scale, 2);
    EXPECT_FALSE(r.belief);
  }
}

TEST(Denial, PartialAcceptance) {
  CommonGround g;
  auto u1 = utt(1, "A", "(and (large dog) (vicious dog))");
  auto u2 = utt(2, "B", "(not (large dog))");
  auto r = denial_partial_acceptance(g, u1, u2);
  EXPECT_EQ(g.at(r.denial).endorsement, Endorsement::linguistic);
  ASSERT_TRUE(r.remainder);
  EXPECT_EQ(g.at(*r.remainder).content.str(), "(vicious dog)");
  EXPECT_EQ(g.at(*r.remainder).endorsement, Endorsement::default_);

  auto whole = utt(2, "B", "(not (and (large dog) (vicious dog)))");
  CommonGround g2;
  EXPECT_FALSE(denial_partial_acceptance(g2, u1, whole).remainder);
  EXPECT_THROW(denial_partial_acceptance(g2, u1, utt(2, "B", "(not (small dog))")),
               RulePreconditionError);
  EXPECT_THROW(denial_partial_acceptance(g2, u1, utt(2, "B", "(large dog)")),
               RulePreconditionError);
}

TEST(Persistence, PastAttitudesHoldNow) {
  CommonGround g;
  auto u = utt(13, "M", "(and (bel M (taxable i)) (bel M (wait b) 0))");
  u.cues.attitude_tense = Tense::past;
  auto ids = persistence_apply(g, u);
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_EQ(g.at(ids[0]).content.str(), "(bel M (wait b))");
  EXPECT_EQ(g.at(ids[0]).rule, Rule::belief_persistence);

  auto n = utt(55, "M", "(not (intend M (cash M p) considering 0))");
  n.cues.attitude_tense = Tense::past;
  auto nid = persistence_apply(g, n);
  ASSERT_EQ(nid.size(), 1u);
  EXPECT_EQ(g.at(nid[0]).content.str(), "(not (intend M (cash M p) considering))");
  EXPECT_EQ(g.at(nid[0]).rule, Rule::intention_persistence);

  auto bare = utt(3, "M", "(p x)");
  EXPECT_THROW(persistence_apply(g, bare), RulePreconditionError);
  bare.cues.attitude_tense = Tense::present;
  EXPECT_TRUE(persistence_apply(g, bare).empty());
}

TEST(Deliberation, RequiresProposal) {
  CommonGround g;
  auto p = utt(1, "A", "(buy we x)", SpeechAct::proposal);
  int id = deliberation_reject(g, p, utt(2, "B", "(q y)"), Endorsement::default_);
  EXPECT_EQ(g.at(id).content.str(), "(not (intend B (buy we x)))");
  EXPECT_THROW(deliberation_reject(g, utt(1, "A", "(p x)"), utt(2, "B", "(q y)"),
                                   Endorsement::default_),
               RulePreconditionError);
}

TEST(Snapshot, ListsSuppositionsAndAssumptions) {
  CommonGround g;
  auto u = utt(1, "A", "(p x)");
  quality_assert(g, u);
  air_apply(g, u);
  auto j = g.snapshot();
  EXPECT_EQ(j["suppositions"].size(), 2u);
  EXPECT_EQ(j["assumptions"][0]["attend"], "hypothesis");
  EXPECT_EQ(j["suppositions"][1]["support"][0], "u1.attend");
}

}  // namespace
}  // namespace cground
