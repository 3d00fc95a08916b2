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

#ifndef OPINION_SCORING_H_
#define OPINION_SCORING_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opinion/extraction.h"
#include "opinion/fuzzy.h"
#include "opinion/review.h"

namespace opinion {

class ScoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReviewClass { kPositive, kNegative, kNeutral };
const char *ReviewClassName(ReviewClass c);

struct Thresholds {
  double positive = 0.1;
  double negative = -0.1;
};

// Throws ScoringError when negative > positive.
ReviewClass ClassifyReview(double scalar, const Thresholds &t = {});

// 4-5 stars positive, 1-2 negative, 3 neutral. Throws outside 1..5.
ReviewClass GoldClass(int stars);

struct ReviewScore {
  std::string review_id;
  std::string product_id;
  int stars = 0;
  std::string date;
  std::optional<double> price;
  std::optional<ReviewWeight> weight;  // empty: no opinionated features
  ReviewClass predicted = ReviewClass::kNeutral;
  ReviewClass gold = ReviewClass::kNeutral;
};

// Groups sextuples by review and pairs them with metadata. Reviews without
// sextuples get no weight and a neutral prediction. Sextuples naming an
// unknown review raise ScoringError.
std::vector<ReviewScore> ScoreReviews(const std::vector<ReviewMeta> &meta,
                                      const std::vector<Sextuple> &sextuples,
                                      const Thresholds &t = {});

struct ProductOrientation {
  std::string product_id;
  double orientation = 0.0;  // mean scalar over weighted reviews
  int review_count = 0;      // reviews contributing a weight
  std::optional<double> price;  // mean listed price
  double norm_orientation = 0.0;
  std::optional<double> norm_price;
  double norm_count = 0.0;
};

// Per-product means, min-max normalized across the set. A set whose values
// are all equal normalizes to 1.0. Products without any weighted review
// are dropped and reported through *warnings.
std::vector<ProductOrientation> ProductOrientations(
    const std::vector<ReviewScore> &scores,
    std::vector<std::string> *warnings = nullptr);

// Min-max normalization with the all-equal convention above.
std::vector<double> MinMaxNormalize(const std::vector<double> &values);

std::string FormatReviewScoresCsv(const std::vector<ReviewScore> &scores);
std::string FormatProductsCsv(const std::vector<ProductOrientation> &products);
std::string FormatProductsJson(const std::vector<ProductOrientation> &products);

}  // namespace opinion

#endif  // OPINION_SCORING_H_
