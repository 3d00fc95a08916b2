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

#ifndef OPINION_EXTRACTION_H_
#define OPINION_EXTRACTION_H_

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "opinion/fuzzy.h"
#include "opinion/lexicon.h"
#include "opinion/review.h"
#include "opinion/rules.h"

namespace opinion {

struct TokenRef {
  int sentence = 0;  // 0-based sentence position in the review
  int index = 0;     // 1-based token index
  auto operator<=>(const TokenRef &other) const = default;
};

struct IntensifierUnit {
  int sentence = 0;
  std::vector<int> tokens;  // consecutive, ascending
  std::string text;         // lowercased lexicon key, e.g. "very much"
  IntensifierEntry entry;
};

// Per-token knowledge gathered while the rules run.
struct OpinionInfo {
  FuzzyTriple base;
  Orientation orientation = Orientation::kPositive;
  bool from_lexicon = false;
};

struct FeatureInfo {
  Orientation orientation = Orientation::kPositive;  // of the source opinion
  bool opinionated = false;  // noun listed in the opinion lexicon
  FuzzyTriple base;          // meaningful when opinionated
  bool expanded = false;     // surface form seen first here
};

struct ExtractionState {
  std::map<TokenRef, OpinionInfo> opinions;  // EO
  std::map<TokenRef, FeatureInfo> features;  // F
  std::vector<IntensifierUnit> intensifiers;  // ODI
  std::set<std::string> seen_features;       // lowercased surfaces
  std::map<std::string, int> frequency;      // af per feature surface
  std::set<TokenRef> initial_opinions;       // lexicon seeds only
};

struct TraceEntry {
  int pass = 0;
  int line = 0;  // step of the mining loop: 6, 12, 14, 15, 16, 17 (R5/R6)
  int sentence = 0;
  ExtractionHit hit;
  bool admitted = false;  // extracted token was new to EO or F
};

struct Kernel {
  int layer = 1;
  int sentence = 0;
  std::vector<int> tokens;    // every member token, ascending
  std::vector<int> children;  // layer 2: positions in the layer-1 list
  std::string text;           // "great pictures" or "(camera; great ...)"
};

struct SentenceKernels {
  std::vector<Kernel> layer1;
  std::vector<Kernel> layer2;
};

struct RelationRecord {
  std::string rule;
  std::string link;
  std::string from;
  std::string to;
  bool operator==(const RelationRecord &other) const = default;
};

struct OpinionTriple {
  int sentence = 0;
  std::vector<int> intensifier_tokens;
  std::vector<int> opinion_tokens;
  std::vector<int> feature_tokens;
  std::string intensifier;  // empty = null
  std::string opinion;      // single word or "<a, b>"
  std::string feature;      // empty = null
  std::string kernel;       // layer-2 rendering
  FuzzyTriple value;
  int frequency = 1;
  std::vector<RelationRecord> relations;

  std::string ToString() const;  // "(null, great, <image, quality>)"
};

struct Sextuple {
  std::string review_id;
  std::string product_id;
  std::string feature;  // empty = null
  std::string opinion;
  std::string intensifier;  // empty = null
  FuzzyTriple fuzzy;
  double scalar = 0.0;
  int frequency = 1;
  std::vector<RelationRecord> relations;
  std::string holder;
  std::string time;
  int sentence = 0;
  std::vector<int> feature_tokens;
  std::vector<int> opinion_tokens;
  std::vector<int> intensifier_tokens;
};

struct ExtractionResult {
  std::string review_id;
  ExtractionState state;
  std::vector<SentenceKernels> kernels;
  std::vector<OpinionTriple> triples;
  std::vector<Sextuple> sextuples;
  std::optional<ReviewWeight> weight;
  std::string weight_error;
  std::vector<TraceEntry> trace;
};

struct EngineOptions {
  // Degree given to opinion words the rules discover.
  int new_opinion_level = 3;
};

ExtractionResult ExtractReview(const ParsedReview &r, const Lexicon &lex,
                               const EngineOptions &opts = {});

// Kernels for one sentence given the final state and the hits on it.
SentenceKernels BuildKernels(const Sentence &s, int sentence_pos,
                             const ExtractionState &state,
                             const std::vector<ExtractionHit> &hits);

std::vector<Sextuple> EmitSextuples(const ParsedReview &r,
                                    const std::vector<OpinionTriple> &triples);

// Runs reviews on a pool of workers; output keeps input order.
std::vector<ExtractionResult> ExtractCorpus(
    const std::vector<ParsedReview> &reviews, const Lexicon &lex,
    int workers, const EngineOptions &opts = {});

// JSON-lines interchange.
std::string SextupleToJsonLine(const Sextuple &s);
Sextuple SextupleFromJsonLine(const std::string &line,
                              const std::string &where = "<sextuple>");
std::vector<Sextuple> ReadSextuples(const std::string &path);

// Human-readable run log: rule hits then final triples.
std::string FormatTrace(const ParsedReview &r, const ExtractionResult &res);

}  // namespace opinion

#endif  // OPINION_EXTRACTION_H_
