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

#ifndef OPINION_REVIEW_H_
#define OPINION_REVIEW_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opinion {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// POS classes used by patterns and rules.
bool IsNounTag(const std::string &pos);       // NN NNS NNP NNPS
bool IsAdjectiveTag(const std::string &pos);  // JJ JJR JJS
bool IsAdverbTag(const std::string &pos);     // RB RBR RBS
bool IsVerbTag(const std::string &pos);       // VB*
bool IsDeterminerTag(const std::string &pos);
bool IsPronounTag(const std::string &pos);
bool IsPunctTag(const std::string &pos);
bool IsKnownPennTag(const std::string &pos);

struct Token {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string pos;  // Penn tag from the XPOS column
  int head = 0;     // 0 = root
  std::string deprel;
  std::string gold;  // F, O, DO, N or empty

  bool is_punct() const { return IsPunctTag(pos); }
};

enum class Direction { kUp, kDown };  // up: dependent to head

struct PathStep {
  int from = 0;
  int to = 0;
  std::string relation;
  Direction dir = Direction::kUp;
  bool operator==(const PathStep &other) const = default;
};

class Sentence {
 public:
  Sentence() = default;
  Sentence(std::string id, std::vector<Token> tokens);

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  void set_text(const std::string &t) { text_ = t; }

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<Token> &tokens() const { return tokens_; }
  // 1-based access.
  const Token &at(int index) const { return tokens_.at(index - 1); }
  const std::vector<int> &children(int index) const {
    return children_.at(index);
  }

  // Throws ParseError if arcs do not form a single-rooted tree.
  void Validate() const;

  // Unique tree path from a to b, one step per edge.
  std::vector<PathStep> Path(int a, int b) const;

  // Neighbours of a token as one-step paths, excluding punctuation.
  std::vector<PathStep> Neighbours(int index) const;

 private:
  std::string id_;
  std::string text_;
  std::vector<Token> tokens_;
  std::vector<std::vector<int>> children_;  // index 0 holds root children
};

struct ParsedReview {
  std::string review_id;
  std::string product_id;
  int stars = 0;
  std::string date;  // YYYY-MM-DD
  int year = 0;
  int month = 0;
  std::string holder;
  std::optional<double> price;
  std::vector<Sentence> sentences;
};

struct ReviewMeta {
  std::string review_id;
  std::string product_id;
  int stars = 0;
  std::string date;
  int year = 0;
  int month = 0;
  std::string holder;
  std::optional<double> price;
};

// Parses one JSON-lines metadata file. Throws ParseError with line context.
std::vector<ReviewMeta> ParseMetadata(const std::string &text,
                                      const std::string &name = "<meta>");

// Parses a CoNLL-U corpus and pairs it with metadata. Warnings (unknown POS
// tags) are appended to *warnings when given.
std::vector<ParsedReview> ParseCorpus(const std::string &conllu,
                                      const std::string &meta,
                                      std::vector<std::string> *warnings =
                                          nullptr,
                                      const std::string &conllu_name =
                                          "<conllu>",
                                      const std::string &meta_name = "<meta>");

std::vector<ParsedReview> ReadCorpus(const std::string &conllu_path,
                                     const std::string &meta_path,
                                     std::vector<std::string> *warnings =
                                         nullptr);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string ReadTextFile(const std::string &path);

// Writes a corpus back as CoNLL-U (gold labels kept in MISC).
std::string FormatConllu(const std::vector<ParsedReview> &reviews);

}  // namespace opinion

#endif  // OPINION_REVIEW_H_
