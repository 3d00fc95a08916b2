// Copyright 2026 The Opinion Miner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opinion/rules.h"

#include <gtest/gtest.h>

#include <map>

#include "test_util.h"

namespace opinion {
namespace {

using testing::TokenOf;

const Sentence &RuleSentence(const std::string &review_id) {
  static const std::vector<ParsedReview> reviews =
      testing::LoadFixture("rule_examples");
  for (const ParsedReview &r : reviews) {
    if (r.review_id == review_id) return r.sentences.at(0);
  }
  throw std::runtime_error("no fixture review " + review_id);
}

const Sentence &TwoClauseReview() {
  static const std::vector<ParsedReview> reviews =
      testing::LoadFixture("two_clause_review");
  return reviews.at(0).sentences.at(0);
}

std::set<int> Tokens(const Sentence &s, const std::vector<std::string> &forms) {
  std::set<int> out;
  for (const std::string &f : forms) {
    int t = TokenOf(s, f);
    if (t < 0) throw std::runtime_error("no token " + f);
    out.insert(t);
  }
  return out;
}

// One row of the rule table: a seed set on a fixture sentence, the rule it
// illustrates and the words that rule must extract.
struct RuleRow {
  const char *review;
  RuleId rule;
  std::vector<std::string> opinions;
  std::vector<std::string> features;
  std::vector<std::string> expected;
};

std::ostream &operator<<(std::ostream &os, const RuleRow &r) {
  return os << RuleName(r.rule) << " on " << r.review;
}

class RuleTable : public ::testing::TestWithParam<RuleRow> {};

TEST_P(RuleTable, ExtractsExactlyTheStatedWords) {
  const RuleRow &row = GetParam();
  const Sentence &s = RuleSentence(row.review);
  std::set<int> o = Tokens(s, row.opinions);
  std::set<int> f = Tokens(s, row.features);
  std::set<std::string> got;
  for (const ExtractionHit &h : ApplyRule(row.rule, s, o, f)) {
    EXPECT_EQ(h.rule, row.rule);
    EXPECT_EQ(h.link, RuleLink(row.rule));
    got.insert(s.at(h.extracted).form);
  }
  EXPECT_EQ(got, std::set<std::string>(row.expected.begin(),
                                       row.expected.end()));
}

TEST_P(RuleTable, NoOtherRuleExtractsTheStatedWords) {
  const RuleRow &row = GetParam();
  const Sentence &s = RuleSentence(row.review);
  std::set<int> o = Tokens(s, row.opinions);
  std::set<int> f = Tokens(s, row.features);
  std::set<int> stated = Tokens(s, row.expected);
  for (RuleId other : AllRules()) {
    if (other == row.rule) continue;
    for (const ExtractionHit &h : ApplyRule(other, s, o, f)) {
      EXPECT_FALSE(stated.count(h.extracted))
          << RuleName(other) << " also extracts " << s.at(h.extracted).form;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Rows, RuleTable,
    ::testing::Values(
        RuleRow{"rule-photos", RuleId::kR1_1, {"good"}, {}, {"photos"}},
        RuleRow{"rule-images", RuleId::kR1_1, {"excellent"}, {}, {"images"}},
        RuleRow{"rule-hs", RuleId::kR1_2, {"good"}, {}, {"HS"}},
        RuleRow{"rule-kindle", RuleId::kR1_3, {"great"}, {}, {"camera"}},
        RuleRow{"rule-photos", RuleId::kR2_1, {}, {"photos"}, {"good"}},
        RuleRow{"rule-hs", RuleId::kR2_2, {}, {"HS"}, {"good"}},
        RuleRow{"rule-kindle", RuleId::kR2_3, {}, {"camera"}, {"great"}},
        RuleRow{"rule-videos", RuleId::kR3_1, {}, {"photos"}, {"videos"}},
        RuleRow{"rule-quality", RuleId::kR3_2, {}, {"quality"}, {"image"}},
        RuleRow{"rule-sx500", RuleId::kR3_3, {}, {"SX500"}, {"camera"}},
        RuleRow{"rule-indoor", RuleId::kR3_3, {}, {"photos"}, {"SX510"}},
        RuleRow{"rule-indoor", RuleId::kR4_1, {"better"}, {}, {"significantly"}},
        RuleRow{"rule-light", RuleId::kR4_1, {"light"}, {}, {"easy"}},
        RuleRow{"rule-smart", RuleId::kR4_2, {"new"}, {},
                {"light", "smart", "easy"}},
        RuleRow{"rule-indoor", RuleId::kR5_1, {"better"}, {}, {"SX510"}}),
    [](const ::testing::TestParamInfo<RuleRow> &info) {
      std::string name = std::string(RuleName(info.param.rule)) + "_" +
                         info.param.review;
      for (char &c : name) {
        if (c == '-') c = '_';
      }
      return name;
    });

TEST(RuleSixOne, GreatReachesRecommendThroughFeatures) {
  const Sentence &s = TwoClauseReview();
  std::set<int> o = {TokenOf(s, "great")};
  std::set<int> f = {TokenOf(s, "pictures")};
  auto hits = ApplyRule(RuleId::kR6_1, s, o, f);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(s.at(hits[0].extracted).form, "recommend");
  EXPECT_EQ(hits[0].link, LinkKind::kOO);
  // the supporting second feature is the recommended camera
  ASSERT_FALSE(hits[0].support.empty());
  EXPECT_EQ(s.at(hits[0].support.back()).form, "camera");
}

TEST(RuleSixOne, RecommendThenHighlyByAdverbRule) {
  const Sentence &s = TwoClauseReview();
  std::set<int> o = {TokenOf(s, "great"), TokenOf(s, "recommend")};
  auto hits = ApplyRule(RuleId::kR4_1, s, o, {});
  std::set<std::string> got;
  for (const auto &h : hits) got.insert(s.at(h.extracted).form);
  EXPECT_TRUE(got.count("highly"));
}

TEST(ApplyRule, EmptySeedsGiveNoHits) {
  const Sentence &s = TwoClauseReview();
  for (RuleId r : AllRules()) EXPECT_TRUE(ApplyRule(r, s, {}, {}).empty());
}

TEST(ApplyRule, HitsSortedAndNeverExtractASeed) {
  const Sentence &s = RuleSentence("rule-smart");
  std::set<int> o = Tokens(s, {"new", "light"});
  std::set<int> f = Tokens(s, {"camera"});
  for (RuleId r : AllRules()) {
    auto hits = ApplyRule(r, s, o, f);
    for (size_t i = 0; i < hits.size(); ++i) {
      for (int seed : hits[i].seeds) EXPECT_NE(seed, hits[i].extracted);
      if (i > 0) {
        EXPECT_LE(std::make_pair(hits[i - 1].seeds, hits[i - 1].extracted),
                  std::make_pair(hits[i].seeds, hits[i].extracted));
      }
    }
  }
}

TEST(ClassifyRelation, ByMiddleWordCount) {
  const Sentence &photos = RuleSentence("rule-photos");
  EXPECT_EQ(ClassifyRelation(photos, TokenOf(photos, "good"),
                             TokenOf(photos, "photos")),
            RelationClass::kEdrDirect);
  const Sentence &s = TwoClauseReview();
  EXPECT_EQ(ClassifyRelation(s, TokenOf(s, "pictures"),
                             TokenOf(s, "recommend")),
            RelationClass::kEdrIndirect);
  EXPECT_EQ(ClassifyRelation(s, TokenOf(s, "great"), TokenOf(s, "recommend")),
            RelationClass::kIdr);
}

TEST(RelationSet, Members) {
  for (const char *l : {"nn", "nsubj", "amod", "advmod", "prep", "pobj",
                        "dobj", "conj", "dep"}) {
    EXPECT_TRUE(InMR(l)) << l;
  }
  EXPECT_FALSE(InMR("det"));
  EXPECT_FALSE(InMR("punct"));
  EXPECT_EQ(RelationSetMR().size(), 9u);
}

TEST(RuleNames, LinksByFamily) {
  EXPECT_EQ(AllRules().size(), 13u);
  EXPECT_STREQ(RuleName(RuleId::kR3_2), "R3_2");
  EXPECT_EQ(RuleLink(RuleId::kR1_3), LinkKind::kFO);
  EXPECT_EQ(RuleLink(RuleId::kR2_1), LinkKind::kOF);
  EXPECT_EQ(RuleLink(RuleId::kR3_3), LinkKind::kFF);
  EXPECT_EQ(RuleLink(RuleId::kR4_2), LinkKind::kOO);
  EXPECT_EQ(RuleLink(RuleId::kR5_1), LinkKind::kFO);
  EXPECT_EQ(RuleLink(RuleId::kR6_1), LinkKind::kOO);
}

// good -amod-> zoom -conj-> camera, all arcs pointing up the tree.
Sentence LiftChain() {
  std::vector<Token> t(3);
  t[0] = {1, "good", "good", "JJ", 2, "amod", ""};
  t[1] = {2, "zoom", "zoom", "NN", 3, "conj", ""};
  t[2] = {3, "camera", "camera", "NN", 0, "root", ""};
  return Sentence("lift", t);
}

TEST(TransitiveLift, SameDirectionChainLifts) {
  Sentence s = LiftChain();
  ExtractionHit h1{RuleId::kR1_1, {1}, 2, {}, {}, LinkKind::kFO, false};
  ExtractionHit h2{RuleId::kR3_1, {2}, 3, {}, {}, LinkKind::kFF, false};
  auto out = TransitiveLift(s, {h1, h2});
  ASSERT_EQ(out.size(), 3u);
  const ExtractionHit &l = out.back();
  EXPECT_TRUE(l.lifted);
  EXPECT_EQ(l.seeds, std::vector<int>{1});
  EXPECT_EQ(l.extracted, 3);
  EXPECT_EQ(l.link, LinkKind::kFO);
  EXPECT_EQ(l.middle, std::vector<int>{2});
}

TEST(TransitiveLift, SingleEdgeUnchanged) {
  Sentence s = LiftChain();
  ExtractionHit h1{RuleId::kR1_1, {1}, 2, {}, {}, LinkKind::kFO, false};
  auto out = TransitiveLift(s, {h1});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], h1);
}

TEST(TransitiveLift, MixedDirectionDoesNotLift) {
  // A -> H1 <- B
  std::vector<Token> t(3);
  t[0] = {1, "nice", "nice", "JJ", 2, "amod", ""};
  t[1] = {2, "zoom", "zoom", "NN", 0, "root", ""};
  t[2] = {3, "lens", "lens", "NN", 2, "conj", ""};
  Sentence s("mixed", t);
  ExtractionHit h1{RuleId::kR1_1, {1}, 2, {}, {}, LinkKind::kFO, false};
  ExtractionHit h2{RuleId::kR3_1, {2}, 3, {}, {}, LinkKind::kFF, false};
  EXPECT_EQ(TransitiveLift(s, {h1, h2}).size(), 2u);
}

}  // namespace
}  // namespace opinion
