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

#ifndef OPINION_LEXICON_H_
#define OPINION_LEXICON_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opinion/fuzzy.h"

namespace opinion {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OpinionEntry {
  std::string word;
  DegreeLevel degree;
  bool is_core = false;
  // Word may match when tagged as a noun (e.g. "problem").
  bool noun_ok = false;

  FuzzyTriple triple() const { return DegreeTriple(degree); }
  bool operator==(const OpinionEntry &other) const = default;
};

struct IntensifierEntry {
  std::string word;  // may contain spaces, e.g. "very much"
  IntensifierLevel level;

  FuzzyTriple triple() const { return IntensifierTriple(level); }
  bool operator==(const IntensifierEntry &other) const = default;
};

std::string ToLower(const std::string &s);

class Lexicon {
 public:
  Lexicon() = default;

  // Both throw LexiconError on duplicates or cross-map collisions.
  void AddOpinion(const OpinionEntry &entry);
  void AddIntensifier(const IntensifierEntry &entry);

  std::optional<OpinionEntry> LookupOpinion(const std::string &word) const;
  std::optional<IntensifierEntry> LookupIntensifier(
      const std::string &word) const;

  // Length in tokens of the longest intensifier starting at words[start],
  // 0 when none matches. Words are compared case-insensitively.
  int MatchIntensifier(const std::vector<std::string> &words,
                       size_t start) const;

  // Nested subset: a smaller fraction under the same seed keeps a prefix
  // of the same permutation. Intensifiers are always kept.
  Lexicon Sample(double fraction, uint64_t seed) const;

  const std::map<std::string, OpinionEntry> &opinions() const {
    return opinions_;
  }
  const std::map<std::string, IntensifierEntry> &intensifiers() const {
    return intensifiers_;
  }

  bool operator==(const Lexicon &other) const = default;

 private:
  std::map<std::string, OpinionEntry> opinions_;
  std::map<std::string, IntensifierEntry> intensifiers_;
  int max_intensifier_words_ = 0;
};

// TSV readers. An empty path yields an empty map.
Lexicon LoadLexicon(const std::string &opinion_path,
                    const std::string &intensifier_path);
Lexicon ParseLexicon(const std::string &opinion_text,
                     const std::string &intensifier_text,
                     const std::string &opinion_name = "<opinions>",
                     const std::string &intensifier_name = "<intensifiers>");

std::string FormatOpinionTsv(const Lexicon &lex);
std::string FormatIntensifierTsv(const Lexicon &lex);
void SaveLexicon(const Lexicon &lex, const std::string &opinion_path,
                 const std::string &intensifier_path);

}  // namespace opinion

#endif  // OPINION_LEXICON_H_
