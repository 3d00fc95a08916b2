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

#ifndef OPINION_ANALYTICS_H_
#define OPINION_ANALYTICS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opinion/extraction.h"
#include "opinion/scoring.h"

namespace opinion {

class AnalyticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DimensionKind { kTechnical, kNonTechnical };
const char *DimensionKindName(DimensionKind k);

struct Dimension {
  std::string name;
  DimensionKind kind = DimensionKind::kTechnical;
  std::vector<std::string> synonyms;  // lowercased phrases
};

struct DimensionConfig {
  std::vector<Dimension> dimensions;  // file order

  // Throws AnalyticsError on empty dimensions, duplicate names or
  // overlapping synonym sets.
  void Validate() const;
  // Position of the matched dimension, or -1. Longest synonym wins, then
  // earlier dimension.
  int Match(const std::string &feature_text) const;
};

// Rows "name<TAB>kind<TAB>syn1, syn2, ..."; '#' starts a comment.
DimensionConfig ParseDimensionConfig(const std::string &text,
                                     const std::string &name = "<dims>");
DimensionConfig LoadDimensionConfig(const std::string &path);

struct DimensionStats {
  int matched = 0;
  int positive = 0;
  int negative = 0;
  double positive_share = 0.0;  // of matched
  double negative_share = 0.0;  // of matched
  double coverage = 0.0;        // matched / all sextuples of the product
  double mean_scalar = 0.0;
  std::vector<std::pair<std::string, int>> top_negative;  // term, count
};

struct DimensionReport {
  std::string product_id;
  int total = 0;
  int other = 0;
  double other_coverage = 0.0;
  double overall_score = 0.0;  // unweighted mean of dimension mean scalars
  std::vector<DimensionStats> stats;  // parallel to config dimensions
};

// One report per product, sorted by product id.
std::vector<DimensionReport> BucketSextuples(
    const std::vector<Sextuple> &sextuples, const DimensionConfig &cfg,
    int top_k = 3);

struct MonthlySeries {
  std::vector<std::string> months;          // YYYY-MM, contiguous
  std::vector<std::string> predictors;      // dimension names
  std::vector<std::vector<double>> x;       // months x predictors
  std::vector<double> ov;                   // mean review scalar
  std::vector<double> cq;                   // review count
};

// Calendar-month series for one product. Predictors are per-dimension
// negative shares; empty months are zero rows.
MonthlySeries BuildMonthlySeries(const std::string &product_id,
                                 const std::vector<Sextuple> &sextuples,
                                 const std::vector<ReviewScore> &scores,
                                 const DimensionConfig &cfg);

std::string FormatSeriesCsv(const MonthlySeries &s);
MonthlySeries ParseSeriesCsv(const std::string &text,
                             const std::string &name = "<series>");
std::string FormatSeriesJson(const std::string &product_id,
                             const MonthlySeries &s);

struct RegressionModel {
  std::string response;  // OV or CQ
  std::vector<std::string> predictors;
  std::vector<double> coefficients;
  double intercept = 0.0;
  double rmse = 0.0;
  std::vector<double> means;  // of each predictor over the window
  std::vector<double> mins;
  std::vector<double> maxs;
};

// Ordinary least squares with an intercept. Needs rows >= p + 2. A
// rank-deficient design raises AnalyticsError naming the dependent columns.
RegressionModel FitRegression(const std::vector<std::vector<double>> &x,
                              const std::vector<double> &y,
                              const std::vector<std::string> &predictors,
                              const std::string &response);

double Predict(const RegressionModel &m, const std::vector<double> &x);

struct WhatIf {
  double baseline = 0.0;    // at the training means
  double prediction = 0.0;  // with the modifications applied
  std::vector<std::string> out_of_range;
};

// Starts from the training means and overrides the named predictors.
// Values outside [min - margin*range, max + margin*range] are flagged.
WhatIf PredictWhatIf(const RegressionModel &m,
                     const std::map<std::string, double> &modified,
                     double margin = 0.1);

std::string FormatReportCsv(const std::vector<DimensionReport> &reports,
                            const DimensionConfig &cfg);
std::string FormatModelCsv(const std::vector<RegressionModel> &models);

}  // namespace opinion

#endif  // OPINION_ANALYTICS_H_
