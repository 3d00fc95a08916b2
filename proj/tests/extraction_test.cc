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

#include "opinion/extraction.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "test_util.h"

namespace opinion {
namespace {

using testing::DefaultLexicon;
using testing::LoadFixture;
using testing::TripleStrings;

// Drops leading '#' header lines.
std::string StripHeader(const std::string &text) {
  std::istringstream in(text);
  std::string line, out;
  bool body = false;
  while (std::getline(in, line)) {
    if (!body && !line.empty() && line[0] == '#') continue;
    body = true;
    out += line + "\n";
  }
  return out;
}

const ExtractionResult &WorkedReview() {
  static const ExtractionResult res =
      ExtractReview(LoadFixture("worked_review").at(0), DefaultLexicon());
  return res;
}

const ExtractionResult &TwoClauseReview() {
  static const ExtractionResult res =
      ExtractReview(LoadFixture("two_clause_review").at(0), DefaultLexicon());
  return res;
}

TEST(WorkedReview, SevenFinalRelations) {
  EXPECT_EQ(TripleStrings(WorkedReview()),
            (std::vector<std::string>{
                "(null, great, <image, quality>)",
                "(null, <love, gimmicky>, features)",
                "(very, neat, null)",
                "(n't, shooting, <problem, delay>)",
                "(highly, <recommend, nice, easy>, <camera, button>)",
                "(very much, love, null)",
                "(so, excellent, <images, videos>)",
            }));
}

TEST(WorkedReview, TripleValues) {
  const auto &t = WorkedReview().triples;
  ASSERT_EQ(t.size(), 7u);
  // great is level 4
  EXPECT_EQ(t[0].value, DegreeTriple({Orientation::kPositive, 4}));
  // n't (negator 2) times a negative level-3 word
  EXPECT_NEAR(t[3].value.l, 0.09, 1e-9);
  EXPECT_NEAR(t[3].value.m, 0.25, 1e-9);
  EXPECT_NEAR(t[3].value.u, 0.49, 1e-9);
  EXPECT_EQ(t[5].value, FuzzyTriple(1, 1, 1));
  EXPECT_EQ(t[6].value, FuzzyTriple(1, 1, 1));
}

TEST(WorkedReview, ReviewWeightMatchesMeanOverTriples) {
  const ExtractionResult &res = WorkedReview();
  ASSERT_TRUE(res.weight.has_value());
  // independent mean over the seven triples, each af = 1
  double l = 0, m = 0, u = 0;
  int n = 0;
  for (const OpinionTriple &t : res.triples) {
    l += t.value.l * t.frequency;
    m += t.value.m * t.frequency;
    u += t.value.u * t.frequency;
    n += t.frequency;
  }
  double oracle = (l / n + m / n + u / n) / 3.0;
  EXPECT_NEAR(res.weight->scalar, oracle, 1e-12);
  EXPECT_GT(res.weight->scalar, 0.0);
  EXPECT_LE(res.weight->scalar, 1.0);
  EXPECT_NEAR(res.weight->scalar, 0.739524, 1e-6);
}

TEST(WorkedReview, KernelGroups) {
  const ExtractionResult &res = WorkedReview();
  std::vector<std::string> l2;
  for (const SentenceKernels &sk : res.kernels) {
    for (const Kernel &k : sk.layer2) l2.push_back(k.text);
  }
  for (const char *want : {"(image quality; great)", "(images videos; so excellent)",
                           "(highly recommend; nice easy camera button)"}) {
    EXPECT_NE(std::find(l2.begin(), l2.end(), want), l2.end()) << want;
  }
}

TEST(WorkedReview, ListedRulesAllFire) {
  std::set<std::string> fired;
  for (const TraceEntry &e : WorkedReview().trace) {
    fired.insert(RuleName(e.hit.rule));
  }
  for (const char *r : {"R1_1", "R1_2", "R1_3", "R2_1", "R2_3", "R3_1",
                        "R3_2", "R4_2", "R5_1"}) {
    EXPECT_TRUE(fired.count(r)) << r;
  }
}

TEST(WorkedReview, NewOpinionsCarryInheritedOrientation) {
  const ExtractionState &st = WorkedReview().state;
  const ParsedReview r = LoadFixture("worked_review").at(0);
  bool saw_gimmicky = false;
  for (const auto &[ref, info] : st.opinions) {
    const Token &t = r.sentences[ref.sentence].at(ref.index);
    if (t.form == "gimmicky") {
      saw_gimmicky = true;
      EXPECT_FALSE(info.from_lexicon);
      EXPECT_EQ(info.orientation, Orientation::kPositive);
      EXPECT_EQ(info.base, DegreeTriple({Orientation::kPositive, 3}));
      EXPECT_FALSE(st.initial_opinions.count(ref));
    }
  }
  EXPECT_TRUE(saw_gimmicky);
}

TEST(WorkedReview, GoldenSextupleFile) {
  std::string golden =
      StripHeader(ReadTextFile(testing::Golden("worked_review_sextuples.jsonl")));
  std::string got;
  for (const Sextuple &s : WorkedReview().sextuples) {
    got += SextupleToJsonLine(s) + "\n";
  }
  EXPECT_EQ(got, golden);
}

TEST(WorkedReview, RunsUnderOneSecond) {
  auto review = LoadFixture("worked_review").at(0);
  auto t0 = std::chrono::steady_clock::now();
  ExtractReview(review, DefaultLexicon());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  EXPECT_LT(secs, 1.0);
}

TEST(TwoClauseReview, TwoRelations) {
  const ExtractionResult &res = TwoClauseReview();
  std::vector<std::string> kernels;
  for (const OpinionTriple &t : res.triples) kernels.push_back(t.kernel);
  EXPECT_EQ(kernels,
            (std::vector<std::string>{
                "(camera; great pictures; low artificial light)",
                "(highly recommend; camera)"}));
  EXPECT_EQ(TripleStrings(res),
            (std::vector<std::string>{
                "(null, <great, low, artificial>, <camera, pictures, light>)",
                "(highly, recommend, camera)"}));
  for (const OpinionTriple &t : res.triples) EXPECT_EQ(t.frequency, 2);
}

TEST(TwoClauseReview, FirstLevelKernels) {
  const ExtractionResult &res = TwoClauseReview();
  ASSERT_EQ(res.kernels.size(), 1u);
  std::vector<std::string> l1;
  for (const Kernel &k : res.kernels[0].layer1) l1.push_back(k.text);
  for (const char *want : {"great pictures", "low artificial light",
                           "highly recommend"}) {
    EXPECT_NE(std::find(l1.begin(), l1.end(), want), l1.end()) << want;
  }
  // an isolated feature stays a singleton
  const Kernel &last = res.kernels[0].layer2.back();
  EXPECT_EQ(last.text, "(reason)");
  EXPECT_EQ(last.tokens.size(), 1u);
}

TEST(TwoClauseReview, GreatReachesRecommendBySixOne) {
  const ParsedReview r = LoadFixture("two_clause_review").at(0);
  bool six_one = false;
  for (const TraceEntry &e : TwoClauseReview().trace) {
    const Sentence &s = r.sentences[e.sentence];
    if (e.hit.rule == RuleId::kR6_1 && s.at(e.hit.seeds[0]).form == "great" &&
        s.at(e.hit.extracted).form == "recommend") {
      six_one = true;
    }
  }
  EXPECT_TRUE(six_one);
}

TEST(ExtractReview, NothingToFindGivesNoTriples) {
  auto reviews = ParseCorpus(
      "# review_id = z\n"
      "1\tThe\tthe\t_\tDT\t_\t2\tdet\t_\t_\n"
      "2\tbox\tbox\t_\tNN\t_\t3\tnsubj\t_\t_\n"
      "3\tarrived\tarrive\t_\tVBD\t_\t0\troot\t_\t_\n\n",
      R"({"review_id": "z", "product_id": "p", "stars": 3, "date": "2014-01-01"})");
  ExtractionResult res = ExtractReview(reviews[0], DefaultLexicon());
  EXPECT_TRUE(res.triples.empty());
  EXPECT_TRUE(res.sextuples.empty());
  EXPECT_FALSE(res.weight.has_value());
  EXPECT_FALSE(res.weight_error.empty());
}

TEST(EmitSextuples, EmptyAndNullFeature) {
  const ParsedReview r = LoadFixture("worked_review").at(0);
  EXPECT_TRUE(EmitSextuples(r, {}).empty());
  const Sextuple &love = WorkedReview().sextuples.at(5);
  EXPECT_EQ(love.opinion, "love");
  EXPECT_EQ(love.intensifier, "very much");
  EXPECT_TRUE(love.feature.empty());
  EXPECT_EQ(love.holder, "reviewer-a2400-1");
  EXPECT_EQ(love.time, "2013-05-14");
  EXPECT_EQ(love.product_id, "canon-powershot-a2400");
}

TEST(EmitSextuples, OneRowPerFeatureOpinionPair) {
  for (const ExtractionResult *res : {&WorkedReview(), &TwoClauseReview()}) {
    std::set<std::pair<std::string, std::string>> keys;
    for (const Sextuple &s : res->sextuples) {
      EXPECT_TRUE(keys.insert({s.feature, s.opinion}).second)
          << s.feature << " / " << s.opinion;
    }
  }
}

TEST(SextupleJson, RoundTrip) {
  for (const Sextuple &s : WorkedReview().sextuples) {
    std::string line = SextupleToJsonLine(s);
    Sextuple back = SextupleFromJsonLine(line);
    EXPECT_EQ(SextupleToJsonLine(back), line);
    EXPECT_EQ(back.feature_tokens, s.feature_tokens);
    EXPECT_EQ(back.relations, s.relations);
  }
}

TEST(SextupleJson, ErrorsCarryLocation) {
  try {
    SextupleFromJsonLine("{\"review_id\": 3}", "x.jsonl:7");
    FAIL();
  } catch (const std::exception &e) {
    EXPECT_NE(std::string(e.what()).find("x.jsonl:7"), std::string::npos)
        << e.what();
  }
  EXPECT_ANY_THROW(SextupleFromJsonLine("not json", "x"));
}

TEST(ExtractCorpus, ParallelMatchesSerialInOrder) {
  auto corpus = LoadFixture("synthetic_corpus");
  auto serial = ExtractCorpus(corpus, DefaultLexicon(), 1);
  auto parallel = ExtractCorpus(corpus, DefaultLexicon(), 4);
  ASSERT_EQ(serial.size(), corpus.size());
  ASSERT_EQ(parallel.size(), corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(parallel[i].review_id, corpus[i].review_id);
    EXPECT_EQ(TripleStrings(parallel[i]), TripleStrings(serial[i]));
  }
}

TEST(ExtractReview, NewOpinionLevelOption) {
  EngineOptions opts;
  opts.new_opinion_level = 2;
  ExtractionResult res =
      ExtractReview(LoadFixture("worked_review").at(0), DefaultLexicon(), opts);
  for (const auto &[ref, info] : res.state.opinions) {
    if (!info.from_lexicon) {
      EXPECT_EQ(info.base, DegreeTriple({info.orientation, 2}));
    }
  }
}

TEST(FormatTrace, MentionsStepsAndTriples) {
  const ParsedReview r = LoadFixture("two_clause_review").at(0);
  std::string trace = FormatTrace(r, TwoClauseReview());
  EXPECT_NE(trace.find("R6_1"), std::string::npos);
  EXPECT_NE(trace.find("great -> recommend"), std::string::npos);
  EXPECT_NE(trace.find("(highly, recommend, camera)"), std::string::npos);
}

}  // namespace
}  // namespace opinion
