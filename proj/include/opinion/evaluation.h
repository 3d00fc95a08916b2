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

#ifndef OPINION_EVALUATION_H_
#define OPINION_EVALUATION_H_

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "opinion/extraction.h"
#include "opinion/lexicon.h"
#include "opinion/review.h"
#include "opinion/scoring.h"

namespace opinion {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PRF {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

// Undefined ratios report as 0.
PRF MakePRF(long tp, long fp, long fn);

enum class Target { kFeature, kOpinion, kIntensifier };
const char *TargetName(Target t);
const char *TargetGoldLabel(Target t);  // F, O, DO

// review id, sentence position, token index
using TokenKey = std::tuple<std::string, int, int>;

struct PredictedTokens {
  std::set<TokenKey> features;
  std::set<TokenKey> opinions;
  std::set<TokenKey> intensifiers;
  const std::set<TokenKey> &Of(Target t) const;
};

PredictedTokens TokensFromSextuples(const std::vector<Sextuple> &sextuples);

// Token-level exact match against Gold= labels. Throws EvaluationError when
// a prediction falls outside its sentence or a sentence lacks gold labels.
PRF ScoreExtraction(const PredictedTokens &predicted,
                    const std::vector<ParsedReview> &gold, Target target);

// Binary PRF with positive as the target class; gold-neutral items are
// excluded.
PRF ScoreClassification(const std::vector<ReviewClass> &predicted,
                        const std::vector<ReviewClass> &gold);

struct AblationRow {
  double fraction = 0.0;
  int lexicon_size = 0;
  double initial_positive = 0.0;  // per review
  double initial_negative = 0.0;
  double new_positive = 0.0;
  double new_negative = 0.0;
  double total_opinions = 0.0;
  double intensifiers = 0.0;
  PRF opinion_prf;
};

// One row per fraction; each samples the lexicon under the same seed.
std::vector<AblationRow> RunAblation(const std::vector<ParsedReview> &corpus,
                                     const Lexicon &lex,
                                     const std::vector<double> &fractions,
                                     uint64_t seed, int workers = 1);

std::string FormatPrfCsv(const std::vector<std::pair<std::string, PRF>> &rows);
std::string FormatAblationCsv(const std::vector<AblationRow> &rows);

}  // namespace opinion

#endif  // OPINION_EVALUATION_H_
