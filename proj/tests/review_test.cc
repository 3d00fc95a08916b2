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

#include "opinion/review.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace opinion {
namespace {

using testing::LoadFixture;
using testing::TokenOf;

const char kMeta[] =
    R"({"review_id": "r1", "product_id": "p1", "stars": 4, "date": "2014-10-09", "holder": "h", "price": 199.5})"
    "\n";

std::string Row(int id, const std::string &form, const std::string &pos,
                int head, const std::string &rel,
                const std::string &misc = "_") {
  return std::to_string(id) + "\t" + form + "\t" + form + "\t_\t" + pos +
         "\t_\t" + std::to_string(head) + "\t" + rel + "\t_\t" + misc + "\n";
}

std::string TwoTokenReview(int head1, int head2) {
  return "# review_id = r1\n# sent_id = s1\n" + Row(1, "good", "JJ", head1, "amod") +
         Row(2, "photos", "NNS", head2, "root") + "\n";
}

TEST(ParseCorpus, PhotosSentence) {
  auto reviews = LoadFixture("rule_examples");
  const ParsedReview *fixture = nullptr;
  for (const auto &r : reviews) {
    if (r.review_id == "rule-photos") fixture = &r;
  }
  ASSERT_NE(fixture, nullptr);
  ASSERT_EQ(fixture->sentences.size(), 1u);
  const Sentence &s = fixture->sentences[0];
  EXPECT_EQ(s.size(), 6);
  int good = TokenOf(s, "good");
  int photos = TokenOf(s, "photos");
  EXPECT_EQ(s.at(good).head, photos);
  EXPECT_EQ(s.at(good).deprel, "amod");
  EXPECT_EQ(s.text(), "Canon PowerShot SX510 takes good photos");
}

TEST(ParseCorpus, EmptyCorpusGivesEmptyList) {
  EXPECT_TRUE(ParseCorpus("", "").empty());
  EXPECT_TRUE(ParseCorpus("# only a comment\n\n", kMeta).empty());
}

TEST(ParseCorpus, MetadataIsAttached) {
  auto reviews = ParseCorpus(TwoTokenReview(2, 0), kMeta);
  ASSERT_EQ(reviews.size(), 1u);
  const ParsedReview &r = reviews[0];
  EXPECT_EQ(r.product_id, "p1");
  EXPECT_EQ(r.stars, 4);
  EXPECT_EQ(r.year, 2014);
  EXPECT_EQ(r.month, 10);
  EXPECT_EQ(r.holder, "h");
  ASSERT_TRUE(r.price.has_value());
  EXPECT_DOUBLE_EQ(*r.price, 199.5);
}

TEST(ParseCorpus, GoldLabelsReadFromMisc) {
  std::string text = "# review_id = r1\n" +
                     Row(1, "good", "JJ", 2, "amod", "Gold=O") +
                     Row(2, "photos", "NNS", 0, "root", "SpaceAfter=No|Gold=F") +
                     "\n";
  auto reviews = ParseCorpus(text, kMeta);
  EXPECT_EQ(reviews[0].sentences[0].at(1).gold, "O");
  EXPECT_EQ(reviews[0].sentences[0].at(2).gold, "F");
  EXPECT_EQ(reviews[0].sentences[0].id(), "r1-1");
}

TEST(ParseCorpus, TreeViolationsThrowWithLine) {
  // two roots
  EXPECT_THROW(ParseCorpus(TwoTokenReview(0, 0), kMeta), ParseError);
  // cycle
  EXPECT_THROW(ParseCorpus(TwoTokenReview(2, 1), kMeta), ParseError);
  // head beyond the sentence
  EXPECT_THROW(ParseCorpus(TwoTokenReview(9, 0), kMeta), ParseError);
  try {
    ParseCorpus(TwoTokenReview(0, 0), kMeta, nullptr, "c.conllu");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("c.conllu:3"), std::string::npos)
        << e.what();
  }
}

TEST(ParseCorpus, StructuralErrors) {
  EXPECT_THROW(ParseCorpus(Row(1, "good", "JJ", 0, "root") + "\n", kMeta),
               ParseError);  // no review_id
  EXPECT_THROW(ParseCorpus("# review_id = r1\n1\tgood\tJJ\n", kMeta),
               ParseError);  // column count
  EXPECT_THROW(ParseCorpus("# review_id = zz\n" + Row(1, "a", "DT", 0, "root"),
                           kMeta),
               ParseError);  // no metadata
  EXPECT_THROW(ParseCorpus(TwoTokenReview(2, 0) + TwoTokenReview(2, 0), kMeta),
               ParseError);  // review twice
  EXPECT_THROW(ParseCorpus("# review_id = r1\n" +
                               Row(1, "a", "DT", 0, "root", "Gold=X"),
                           kMeta),
               ParseError);
}

TEST(ParseCorpus, UnknownTagWarnsButKeepsToken) {
  std::vector<std::string> warnings;
  auto reviews = ParseCorpus(
      "# review_id = r1\n" + Row(1, "wow", "ZZZ", 0, "root") + "\n", kMeta,
      &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("ZZZ"), std::string::npos);
  EXPECT_EQ(reviews[0].sentences[0].size(), 1);
}

TEST(ParseMetadata, Validation) {
  EXPECT_THROW(ParseMetadata("{not json}\n"), ParseError);
  EXPECT_THROW(ParseMetadata(R"({"review_id": "a"})"), ParseError);
  EXPECT_THROW(
      ParseMetadata(
          R"({"review_id": "a", "product_id": "p", "stars": 0, "date": "2014-01-01"})"),
      ParseError);
  EXPECT_THROW(
      ParseMetadata(
          R"({"review_id": "a", "product_id": "p", "stars": 3, "date": "Jan 2014"})"),
      ParseError);
  std::string dup =
      R"({"review_id": "a", "product_id": "p", "stars": 3, "date": "2014-01-01"})"
      "\n"
      R"({"review_id": "a", "product_id": "p", "stars": 3, "date": "2014-01-01"})";
  try {
    ParseMetadata(dup, "m.jsonl");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("m.jsonl:2"), std::string::npos)
        << e.what();
  }
}

TEST(Sentence, PathThroughHead) {
  auto reviews = LoadFixture("two_clause_review");
  const Sentence &s = reviews[0].sentences[0];
  int pictures = TokenOf(s, "pictures");
  int takes = TokenOf(s, "takes");
  int recommend = TokenOf(s, "recommend");
  auto path = s.Path(pictures, recommend);
  ASSERT_EQ(path.size(), 2u);
  EXPECT_EQ(path[0], (PathStep{pictures, takes, "dobj", Direction::kUp}));
  EXPECT_EQ(path[1], (PathStep{takes, recommend, "dep", Direction::kDown}));
  EXPECT_TRUE(s.Path(takes, takes).empty());
}

TEST(Sentence, NeighboursSkipPunctuation) {
  auto reviews = LoadFixture("two_clause_review");
  const Sentence &s = reviews[0].sentences[0];
  int takes = TokenOf(s, "takes");
  for (const PathStep &p : s.Neighbours(takes)) {
    EXPECT_FALSE(s.at(p.to).is_punct());
  }
  EXPECT_EQ(s.Neighbours(takes).size(), 3u);  // camera, pictures, recommend
}

TEST(FormatConllu, RoundTrips) {
  for (const char *stem : {"worked_review", "two_clause_review", "rule_examples",
                           "synthetic_corpus"}) {
    auto reviews = LoadFixture(stem);
    std::string meta = ReadTextFile(
        testing::Fixture(std::string(stem) + ".meta.jsonl"));
    std::string text = FormatConllu(reviews);
    auto again = ParseCorpus(text, meta);
    ASSERT_EQ(again.size(), reviews.size()) << stem;
    EXPECT_EQ(FormatConllu(again), text) << stem;
  }
}

TEST(TagClasses, PennGroups) {
  EXPECT_TRUE(IsNounTag("NNP"));
  EXPECT_TRUE(IsNounTag("NNS"));
  EXPECT_FALSE(IsNounTag("JJ"));
  EXPECT_TRUE(IsAdjectiveTag("JJR"));
  EXPECT_TRUE(IsAdverbTag("RBS"));
  EXPECT_TRUE(IsVerbTag("VBZ"));
  EXPECT_TRUE(IsPunctTag("."));
  EXPECT_TRUE(IsKnownPennTag("PRP$"));
  EXPECT_FALSE(IsKnownPennTag("ADJ"));
}

}  // namespace
}  // namespace opinion
