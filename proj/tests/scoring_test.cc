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

#include "opinion/scoring.h"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "test_util.h"

namespace opinion {
namespace {

ReviewMeta Meta(const std::string &id, const std::string &product, int stars,
                std::optional<double> price = std::nullopt) {
  ReviewMeta m;
  m.review_id = id;
  m.product_id = product;
  m.stars = stars;
  m.date = "2014-03-01";
  m.year = 2014;
  m.month = 3;
  m.price = price;
  return m;
}

Sextuple Row(const std::string &review, FuzzyTriple f, int freq = 1) {
  Sextuple s;
  s.review_id = review;
  s.opinion = "x";
  s.fuzzy = f;
  s.scalar = Defuzzify(f);
  s.frequency = freq;
  return s;
}

TEST(ClassifyReview, DefaultThresholds) {
  EXPECT_EQ(ClassifyReview(0.75), ReviewClass::kPositive);
  EXPECT_EQ(ClassifyReview(-0.8667), ReviewClass::kNegative);
  EXPECT_EQ(ClassifyReview(0.0), ReviewClass::kNeutral);
  EXPECT_EQ(ClassifyReview(0.1), ReviewClass::kPositive);
  EXPECT_EQ(ClassifyReview(-0.1), ReviewClass::kNegative);
}

TEST(ClassifyReview, CustomAndInvalidThresholds) {
  EXPECT_EQ(ClassifyReview(0.3, {0.5, -0.5}), ReviewClass::kNeutral);
  EXPECT_THROW(ClassifyReview(0.0, {-0.2, 0.2}), ScoringError);
}

TEST(GoldClass, StarMapping) {
  EXPECT_EQ(GoldClass(5), ReviewClass::kPositive);
  EXPECT_EQ(GoldClass(4), ReviewClass::kPositive);
  EXPECT_EQ(GoldClass(3), ReviewClass::kNeutral);
  EXPECT_EQ(GoldClass(2), ReviewClass::kNegative);
  EXPECT_EQ(GoldClass(1), ReviewClass::kNegative);
  EXPECT_THROW(GoldClass(0), ScoringError);
  EXPECT_THROW(GoldClass(6), ScoringError);
}

TEST(ScoreReviews, WeightsFromSextuples) {
  std::vector<ReviewMeta> meta = {Meta("a", "p", 5), Meta("b", "p", 1),
                                  Meta("c", "p", 3)};
  std::vector<Sextuple> rows = {Row("a", {0.8, 1, 1}, 2),
                                Row("a", {-0.4, 0, 0.4}, 2),
                                Row("b", {-0.7, -0.5, -0.3})};
  auto scores = ScoreReviews(meta, rows);
  ASSERT_EQ(scores.size(), 3u);
  ASSERT_TRUE(scores[0].weight);
  EXPECT_NEAR(scores[0].weight->scalar, 0.4667, 1e-4);
  EXPECT_EQ(scores[0].predicted, ReviewClass::kPositive);
  EXPECT_EQ(scores[0].gold, ReviewClass::kPositive);
  EXPECT_EQ(scores[1].predicted, ReviewClass::kNegative);
  EXPECT_FALSE(scores[2].weight);
  EXPECT_EQ(scores[2].predicted, ReviewClass::kNeutral);
  EXPECT_EQ(scores[2].gold, ReviewClass::kNeutral);
}

TEST(ScoreReviews, UnknownReviewThrows) {
  EXPECT_THROW(ScoreReviews({Meta("a", "p", 5)}, {Row("zz", {0, 0.1, 0.3})}),
               ScoringError);
}

TEST(ScoreReviews, WorkedReviewReviewIsPositive) {
  auto reviews = testing::LoadFixture("worked_review");
  auto res = ExtractReview(reviews[0], testing::DefaultLexicon());
  auto meta = ParseMetadata(
      ReadTextFile(testing::Fixture("worked_review.meta.jsonl")));
  auto scores = ScoreReviews(meta, res.sextuples);
  ASSERT_EQ(scores.size(), 1u);
  ASSERT_TRUE(scores[0].weight);
  // rows carry the full-precision triple, so the scalar matches the engine
  EXPECT_NEAR(scores[0].weight->scalar, res.weight->scalar, 1e-6);
  EXPECT_EQ(scores[0].predicted, ReviewClass::kPositive);
}

TEST(ProductOrientations, SingleProductNormalizesToOne) {
  std::vector<ReviewScore> s(1);
  s[0].product_id = "p";
  s[0].weight = ReviewWeight{{0.3, 0.5, 0.7}, 0.5};
  auto p = ProductOrientations(s);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_DOUBLE_EQ(p[0].orientation, 0.5);
  EXPECT_DOUBLE_EQ(p[0].norm_orientation, 1.0);
  EXPECT_FALSE(p[0].norm_price.has_value());
}

TEST(ProductOrientations, TwoProductsSpanEndpoints) {
  std::vector<ReviewScore> s(3);
  s[0].product_id = "p";
  s[0].weight = ReviewWeight{{}, 0.4};
  s[0].price = 100;
  s[1].product_id = "q";
  s[1].weight = ReviewWeight{{}, 0.5};
  s[1].price = 300;
  s[2].product_id = "q";
  s[2].weight = ReviewWeight{{}, 0.7};
  s[2].price = 200;
  auto p = ProductOrientations(s);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_DOUBLE_EQ(p[0].norm_orientation, 0.0);
  EXPECT_DOUBLE_EQ(p[1].norm_orientation, 1.0);
  EXPECT_NEAR(p[1].orientation, 0.6, 1e-12);
  EXPECT_EQ(p[1].review_count, 2);
  EXPECT_DOUBLE_EQ(*p[1].price, 250.0);
  EXPECT_DOUBLE_EQ(*p[0].norm_price, 0.0);
  EXPECT_DOUBLE_EQ(*p[1].norm_price, 1.0);
}

TEST(ProductOrientations, UnweightedProductOmittedWithWarning) {
  std::vector<ReviewScore> s(2);
  s[0].product_id = "p";
  s[0].weight = ReviewWeight{{}, 0.4};
  s[1].product_id = "silent";
  std::vector<std::string> warnings;
  auto p = ProductOrientations(s, &warnings);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].product_id, "p");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("silent"), std::string::npos);
}

TEST(MinMaxNormalize, EmptyAndEqual) {
  EXPECT_TRUE(MinMaxNormalize({}).empty());
  EXPECT_EQ(MinMaxNormalize({2, 2}), (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(MinMaxNormalize({1, 3, 2}), (std::vector<double>{0.0, 1.0, 0.5}));
}

TEST(MinMaxNormalize, PreservesOrderOnRandomSets) {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> v = {d(rng), d(rng), d(rng)};
    auto n = MinMaxNormalize(v);
    for (int i = 0; i < 3; ++i) {
      EXPECT_GE(n[i], 0.0);
      EXPECT_LE(n[i], 1.0);
      for (int j = 0; j < 3; ++j) {
        if (v[i] < v[j]) {
          EXPECT_LT(n[i], n[j]);
        }
      }
    }
  }
}

TEST(Formatters, CsvAndJsonShapes) {
  std::vector<ReviewMeta> meta = {Meta("a,1", "p", 5, 99.0),
                                  Meta("b", "p", 3, 99.0)};
  auto scores = ScoreReviews(meta, {Row("a,1", {0.3, 0.5, 0.7})});
  std::string csv = FormatReviewScoresCsv(scores);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "review_id,product_id,stars,date,fuzzy_l,fuzzy_m,fuzzy_u,scalar,"
            "predicted,gold");
  EXPECT_NE(csv.find("\"a,1\",p,5,2014-03-01,0.300000,0.500000,0.700000,"
                     "0.500000,positive,positive"),
            std::string::npos)
      << csv;
  EXPECT_NE(csv.find("b,p,3,2014-03-01,,,,,neutral,neutral"),
            std::string::npos)
      << csv;
  auto products = ProductOrientations(scores);
  auto j = nlohmann::json::parse(FormatProductsJson(products));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["product_id"], "p");
  EXPECT_NEAR(j[0]["orientation"].get<double>(), 0.5, 1e-9);
  std::string pcsv = FormatProductsCsv(products);
  EXPECT_EQ(pcsv.substr(0, pcsv.find('\n')),
            "product_id,orientation,review_count,price,norm_orientation,"
            "norm_price,norm_count");
}

}  // namespace
}  // namespace opinion
