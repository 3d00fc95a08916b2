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

#include "opinion/evaluation.h"

#include <cstdio>
#include <map>
#include <sstream>

namespace opinion {

namespace {

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

void AddTokens(std::set<TokenKey> &out, const std::string &rid, int sentence,
               const std::vector<int> &tokens) {
  for (int t : tokens) out.insert({rid, sentence, t});
}

}  // namespace

PRF MakePRF(long tp, long fp, long fn) {
  PRF r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  r.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  r.f_score = (r.precision > 0 && r.recall > 0)
                  ? 2 * r.precision * r.recall / (r.precision + r.recall)
                  : 0.0;
  return r;
}

const char *TargetName(Target t) {
  switch (t) {
    case Target::kFeature: return "feature";
    case Target::kOpinion: return "opinion";
    case Target::kIntensifier: return "intensifier";
  }
  return "?";
}

const char *TargetGoldLabel(Target t) {
  switch (t) {
    case Target::kFeature: return "F";
    case Target::kOpinion: return "O";
    case Target::kIntensifier: return "DO";
  }
  return "?";
}

const std::set<TokenKey> &PredictedTokens::Of(Target t) const {
  switch (t) {
    case Target::kFeature: return features;
    case Target::kOpinion: return opinions;
    case Target::kIntensifier: return intensifiers;
  }
  return features;
}

PredictedTokens TokensFromSextuples(const std::vector<Sextuple> &sextuples) {
  PredictedTokens p;
  for (const Sextuple &s : sextuples) {
    AddTokens(p.features, s.review_id, s.sentence, s.feature_tokens);
    AddTokens(p.opinions, s.review_id, s.sentence, s.opinion_tokens);
    AddTokens(p.intensifiers, s.review_id, s.sentence, s.intensifier_tokens);
  }
  return p;
}

PRF ScoreExtraction(const PredictedTokens &predicted,
                    const std::vector<ParsedReview> &gold, Target target) {
  std::map<std::string, const ParsedReview *> by_id;
  for (const ParsedReview &r : gold) by_id[r.review_id] = &r;
  const std::string label = TargetGoldLabel(target);
  long tp = 0, fp = 0, fn = 0;
  std::set<TokenKey> gold_set;
  for (const ParsedReview &r : gold) {
    for (size_t si = 0; si < r.sentences.size(); ++si) {
      const Sentence &s = r.sentences[si];
      for (const Token &t : s.tokens()) {
        if (t.gold.empty()) {
          throw EvaluationError("sentence " + s.id() + " of review " +
                                r.review_id + " lacks gold labels");
        }
        if (t.gold == label) {
          gold_set.insert({r.review_id, static_cast<int>(si), t.index});
        }
      }
    }
  }
  for (const TokenKey &k : predicted.Of(target)) {
    const auto &[rid, si, idx] = k;
    auto it = by_id.find(rid);
    if (it == by_id.end()) {
      throw EvaluationError("prediction names unknown review '" + rid + "'");
    }
    const ParsedReview &r = *it->second;
    if (si < 0 || si >= static_cast<int>(r.sentences.size())) {
      throw EvaluationError("prediction names sentence " +
                            std::to_string(si + 1) + " beyond review " + rid);
    }
    const Sentence &s = r.sentences[si];
    if (idx < 1 || idx > s.size()) {
      throw EvaluationError("prediction token " + std::to_string(idx) +
                            " misaligned with sentence " + s.id() + " (" +
                            std::to_string(s.size()) + " tokens)");
    }
    if (gold_set.count(k)) {
      ++tp;
    } else {
      ++fp;
    }
  }
  for (const TokenKey &k : gold_set) {
    if (!predicted.Of(target).count(k)) ++fn;
  }
  return MakePRF(tp, fp, fn);
}

PRF ScoreClassification(const std::vector<ReviewClass> &predicted,
                        const std::vector<ReviewClass> &gold) {
  if (predicted.size() != gold.size()) {
    throw EvaluationError("prediction and gold counts differ");
  }
  long tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == ReviewClass::kNeutral) continue;
    bool pred_pos = predicted[i] == ReviewClass::kPositive;
    bool gold_pos = gold[i] == ReviewClass::kPositive;
    if (pred_pos && gold_pos) ++tp;
    if (pred_pos && !gold_pos) ++fp;
    if (!pred_pos && gold_pos) ++fn;
  }
  return MakePRF(tp, fp, fn);
}

std::vector<AblationRow> RunAblation(const std::vector<ParsedReview> &corpus,
                                     const Lexicon &lex,
                                     const std::vector<double> &fractions,
                                     uint64_t seed, int workers) {
  std::vector<AblationRow> rows;
  double n = corpus.empty() ? 1.0 : static_cast<double>(corpus.size());
  for (double f : fractions) {
    Lexicon sub = lex.Sample(f, seed);
    std::vector<ExtractionResult> results = ExtractCorpus(corpus, sub, workers);
    AblationRow row;
    row.fraction = f;
    row.lexicon_size = static_cast<int>(sub.opinions().size());
    std::vector<Sextuple> all;
    for (const ExtractionResult &res : results) {
      for (const auto &[ref, info] : res.state.opinions) {
        bool initial = res.state.initial_opinions.count(ref) > 0;
        bool pos = info.orientation == Orientation::kPositive;
        if (initial) {
          (pos ? row.initial_positive : row.initial_negative) += 1;
        } else {
          (pos ? row.new_positive : row.new_negative) += 1;
        }
      }
      row.total_opinions += res.state.opinions.size();
      row.intensifiers += res.state.intensifiers.size();
      all.insert(all.end(), res.sextuples.begin(), res.sextuples.end());
    }
    row.initial_positive /= n;
    row.initial_negative /= n;
    row.new_positive /= n;
    row.new_negative /= n;
    row.total_opinions /= n;
    row.intensifiers /= n;
    row.opinion_prf =
        ScoreExtraction(TokensFromSextuples(all), corpus, Target::kOpinion);
    rows.push_back(row);
  }
  return rows;
}

std::string FormatPrfCsv(const std::vector<std::pair<std::string, PRF>> &rows) {
  std::ostringstream os;
  os << "target,tp,fp,fn,precision,recall,f_score\n";
  for (const auto &[name, p] : rows) {
    os << name << ',' << p.tp << ',' << p.fp << ',' << p.fn << ','
       << Num(p.precision) << ',' << Num(p.recall) << ',' << Num(p.f_score)
       << '\n';
  }
  return os.str();
}

std::string FormatAblationCsv(const std::vector<AblationRow> &rows) {
  std::ostringstream os;
  os << "fraction,lexicon_size,avg_initial_positive,avg_initial_negative,"
        "avg_new_positive,avg_new_negative,avg_total_opinions,"
        "avg_intensifiers,precision,recall,f_score\n";
  for (const AblationRow &r : rows) {
    os << Num(r.fraction) << ',' << r.lexicon_size << ','
       << Num(r.initial_positive) << ',' << Num(r.initial_negative) << ','
       << Num(r.new_positive) << ',' << Num(r.new_negative) << ','
       << Num(r.total_opinions) << ',' << Num(r.intensifiers) << ','
       << Num(r.opinion_prf.precision) << ',' << Num(r.opinion_prf.recall)
       << ',' << Num(r.opinion_prf.f_score) << '\n';
  }
  return os.str();
}

}  // namespace opinion
