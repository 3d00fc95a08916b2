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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "opinion/analytics.h"
#include "opinion/evaluation.h"
#include "opinion/extraction.h"
#include "opinion/lexicon.h"
#include "opinion/review.h"
#include "opinion/scoring.h"

#ifndef OPINION_DATA_DIR
#define OPINION_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace opinion;

namespace {

// Files written by a subcommand; all are removed if it fails.
class Outputs {
 public:
  void Write(const std::string &path, const std::string &content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << content;
      if (!out) throw std::runtime_error("write failed for " + path);
    }
    written_.push_back(path);
    fs::rename(tmp, path);
  }
  void RemoveAll() {
    std::error_code ec;
    for (const auto &p : written_) {
      fs::remove(p, ec);
      fs::remove(p + ".tmp", ec);
    }
  }

 private:
  std::vector<std::string> written_;
};

struct Common {
  std::string lexicon = std::string(OPINION_DATA_DIR) + "/lexicon/opinions.tsv";
  std::string intensifiers =
      std::string(OPINION_DATA_DIR) + "/lexicon/intensifiers.tsv";
  std::string dimensions =
      std::string(OPINION_DATA_DIR) + "/dimensions/camera.tsv";
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  uint64_t seed = 20150101;
  double threshold_pos = 0.1;
  double threshold_neg = -0.1;
  int new_level = 3;
};

std::vector<ParsedReview> LoadCorpus(const std::string &conllu,
                                     const std::string &meta) {
  std::vector<std::string> warnings;
  auto reviews = ReadCorpus(conllu, meta, &warnings);
  for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";
  return reviews;
}

Lexicon LoadLex(const Common &c) {
  return LoadLexicon(c.lexicon, c.intensifiers);
}

std::string JoinLines(const std::vector<Sextuple> &xs) {
  std::string out;
  for (const auto &x : xs) out += SextupleToJsonLine(x) + "\n";
  return out;
}

std::vector<double> ParseFractions(const std::string &s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw std::runtime_error("bad fraction '" + item + "'");
    }
  }
  if (out.empty()) throw std::runtime_error("no fractions given");
  return out;
}

std::string SafeName(const std::string &s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Opinion mining over dependency-parsed product reviews"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App *sub, bool lex, bool thresholds) {
    if (lex) {
      sub->add_option("--lexicon", c.lexicon, "Opinion word TSV")
          ->capture_default_str()->check(CLI::ExistingFile);
      sub->add_option("--intensifiers", c.intensifiers, "Intensifier TSV")
          ->capture_default_str()->check(CLI::ExistingFile);
      sub->add_option("--workers", c.workers, "Worker threads")
          ->capture_default_str()->check(CLI::PositiveNumber);
      sub->add_option("--new-level", c.new_level,
                      "Degree level for discovered opinion words")
          ->capture_default_str()->check(CLI::Range(1, 5));
    }
    if (thresholds) {
      sub->add_option("--threshold-pos", c.threshold_pos)->capture_default_str();
      sub->add_option("--threshold-neg", c.threshold_neg)->capture_default_str();
    }
  };

  std::string corpus, meta, out, sextuples_path, out_dir, series_path, trace;
  std::string fractions = "0.1,0.2,0.5,0.8,1.0";
  std::vector<std::string> sets;
  double margin = 0.1;

  CLI::App *extract = app.add_subcommand("extract", "CoNLL-U corpus to sextuple JSON-lines");
  extract->add_option("--corpus", corpus)->required()->check(CLI::ExistingFile);
  extract->add_option("--meta", meta)->required()->check(CLI::ExistingFile);
  extract->add_option("--out", out, "Sextuple JSON-lines output")->required();
  extract->add_option("--trace", trace, "Optional rule-hit log");
  add_common(extract, true, false);

  CLI::App *score = app.add_subcommand("score", "Review and product orientation tables");
  score->add_option("--sextuples", sextuples_path)->required()->check(CLI::ExistingFile);
  score->add_option("--meta", meta)->required()->check(CLI::ExistingFile);
  score->add_option("--out-dir", out_dir)->required();
  add_common(score, false, true);

  CLI::App *compare = app.add_subcommand("compare", "Feature-by-feature comparison and monthly series");
  compare->add_option("--sextuples", sextuples_path)->required()->check(CLI::ExistingFile);
  compare->add_option("--meta", meta)->required()->check(CLI::ExistingFile);
  compare->add_option("--dimensions", c.dimensions)->capture_default_str()->check(CLI::ExistingFile);
  compare->add_option("--out-dir", out_dir)->required();
  add_common(compare, false, true);

  CLI::App *predict = app.add_subcommand("predict", "Regression and what-if prediction over a monthly series");
  predict->add_option("--series", series_path)->required()->check(CLI::ExistingFile);
  predict->add_option("--set", sets, "What-if override, dimension=value (repeatable)");
  predict->add_option("--margin", margin, "Allowed extrapolation as a fraction of the observed range")->capture_default_str();
  predict->add_option("--out-dir", out_dir)->required();

  CLI::App *eval = app.add_subcommand("eval", "Precision/recall/F against gold labels");
  eval->add_option("--sextuples", sextuples_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--corpus", corpus, "Gold-labelled CoNLL-U")->required()->check(CLI::ExistingFile);
  eval->add_option("--meta", meta)->required()->check(CLI::ExistingFile);
  eval->add_option("--out", out)->required();
  add_common(eval, false, true);

  CLI::App *ablate = app.add_subcommand("ablate", "Lexicon-size ablation table");
  ablate->add_option("--corpus", corpus)->required()->check(CLI::ExistingFile);
  ablate->add_option("--meta", meta)->required()->check(CLI::ExistingFile);
  ablate->add_option("--out", out)->required();
  ablate->add_option("--fractions", fractions)->capture_default_str();
  ablate->add_option("--seed", c.seed)->capture_default_str();
  add_common(ablate, true, false);

  CLI11_PARSE(app, argc, argv);

  Outputs outputs;
  try {
    Thresholds th{c.threshold_pos, c.threshold_neg};
    if (*extract) {
      Lexicon lex = LoadLex(c);
      auto reviews = LoadCorpus(corpus, meta);
      EngineOptions opts;
      opts.new_opinion_level = c.new_level;
      auto results = ExtractCorpus(reviews, lex, c.workers, opts);
      std::string body, log;
      for (size_t i = 0; i < results.size(); ++i) {
        body += JoinLines(results[i].sextuples);
        if (!trace.empty()) log += FormatTrace(reviews[i], results[i]);
      }
      outputs.Write(out, body);
      if (!trace.empty()) outputs.Write(trace, log);
    } else if (*score) {
      auto metas = ParseMetadata(ReadTextFile(meta), meta);
      auto scores = ScoreReviews(metas, ReadSextuples(sextuples_path), th);
      std::vector<std::string> warnings;
      auto products = ProductOrientations(scores, &warnings);
      for (const auto &w : warnings) std::cerr << "warning: " << w << "\n";
      outputs.Write(out_dir + "/reviews.csv", FormatReviewScoresCsv(scores));
      outputs.Write(out_dir + "/products.csv", FormatProductsCsv(products));
      outputs.Write(out_dir + "/products.json", FormatProductsJson(products));
    } else if (*compare) {
      auto cfg = LoadDimensionConfig(c.dimensions);
      auto metas = ParseMetadata(ReadTextFile(meta), meta);
      auto xs = ReadSextuples(sextuples_path);
      auto scores = ScoreReviews(metas, xs, th);
      auto reports = BucketSextuples(xs, cfg);
      outputs.Write(out_dir + "/dimension_report.csv", FormatReportCsv(reports, cfg));
      std::set<std::string> products;
      for (const auto &m : metas) products.insert(m.product_id);
      for (const auto &pid : products) {
        auto series = BuildMonthlySeries(pid, xs, scores, cfg);
        std::string base = out_dir + "/series_" + SafeName(pid);
        outputs.Write(base + ".csv", FormatSeriesCsv(series));
        outputs.Write(base + ".json", FormatSeriesJson(pid, series));
      }
    } else if (*predict) {
      auto series = ParseSeriesCsv(ReadTextFile(series_path), series_path);
      std::map<std::string, double> modified;
      for (const auto &s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--set expects dimension=value, got '" + s + "'");
        try {
          modified[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
        } catch (const std::exception &) {
          throw std::runtime_error("--set value is not a number in '" + s + "'");
        }
      }
      std::vector<RegressionModel> models = {
          FitRegression(series.x, series.ov, series.predictors, "OV"),
          FitRegression(series.x, series.cq, series.predictors, "CQ")};
      std::ostringstream wi;
      wi << "response,baseline,prediction,delta,out_of_range\n";
      for (const auto &m : models) {
        WhatIf w = PredictWhatIf(m, modified, margin);
        std::string flags;
        for (const auto &n : w.out_of_range) flags += (flags.empty() ? "" : ";") + n;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f,", m.response.c_str(),
                      w.baseline, w.prediction, w.prediction - w.baseline);
        wi << buf << flags << "\n";
      }
      outputs.Write(out_dir + "/model.csv", FormatModelCsv(models));
      outputs.Write(out_dir + "/whatif.csv", wi.str());
    } else if (*eval) {
      auto reviews = LoadCorpus(corpus, meta);
      auto xs = ReadSextuples(sextuples_path);
      auto predicted = TokensFromSextuples(xs);
      std::vector<std::pair<std::string, PRF>> rows;
      for (Target t : {Target::kFeature, Target::kOpinion, Target::kIntensifier}) {
        rows.push_back({TargetName(t), ScoreExtraction(predicted, reviews, t)});
      }
      auto scores = ScoreReviews(ParseMetadata(ReadTextFile(meta), meta), xs, th);
      std::vector<ReviewClass> pred, gold;
      for (const auto &s : scores) {
        pred.push_back(s.predicted);
        gold.push_back(s.gold);
      }
      rows.push_back({"classification", ScoreClassification(pred, gold)});
      outputs.Write(out, FormatPrfCsv(rows));
    } else if (*ablate) {
      Lexicon lex = LoadLex(c);
      auto reviews = LoadCorpus(corpus, meta);
      auto rows = RunAblation(reviews, lex, ParseFractions(fractions), c.seed, c.workers);
      outputs.Write(out, FormatAblationCsv(rows));
    }
  } catch (const std::exception &e) {
    outputs.RemoveAll();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
