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

#include "opinion/lexicon.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace opinion {

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string Trim(const std::string &s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int WordCount(const std::string &s) {
  std::istringstream in(s);
  std::string w;
  int n = 0;
  while (in >> w) ++n;
  return n;
}

std::string ReadFile(const std::string &path) {
  if (path.empty()) return "";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot open lexicon file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int ParseLevel(const std::string &tok, const std::string &where) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
    throw LexiconError(where + ": bad level '" + tok + "'");
  }
  return std::stoi(tok);
}

// Calls fn(fields, "name:line") for every non-comment, non-blank row.
template <typename Fn>
void ForEachRow(const std::string &text, const std::string &name, Fn fn) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    fn(SplitTabs(line), name + ":" + std::to_string(lineno));
  }
}

}  // namespace

std::string ToLower(const std::string &s) {
  std::string out = s;
  for (char &c : out) c = std::tolower(static_cast<unsigned char>(c));
  return out;
}

void Lexicon::AddOpinion(const OpinionEntry &entry) {
  std::string key = ToLower(entry.word);
  if (key.empty()) throw LexiconError("empty opinion word");
  if (opinions_.count(key)) {
    throw LexiconError("duplicate opinion word '" + key + "'");
  }
  if (intensifiers_.count(key)) {
    throw LexiconError("'" + key + "' is both an opinion and an intensifier");
  }
  DegreeTriple(entry.degree);  // validates the level
  OpinionEntry e = entry;
  e.word = key;
  opinions_.emplace(key, e);
}

void Lexicon::AddIntensifier(const IntensifierEntry &entry) {
  std::string key = ToLower(entry.word);
  if (key.empty()) throw LexiconError("empty intensifier word");
  if (intensifiers_.count(key)) {
    throw LexiconError("duplicate intensifier '" + key + "'");
  }
  if (opinions_.count(key)) {
    throw LexiconError("'" + key + "' is both an opinion and an intensifier");
  }
  IntensifierTriple(entry.level);
  IntensifierEntry e = entry;
  e.word = key;
  intensifiers_.emplace(key, e);
  max_intensifier_words_ = std::max(max_intensifier_words_, WordCount(key));
}

std::optional<OpinionEntry> Lexicon::LookupOpinion(
    const std::string &word) const {
  auto it = opinions_.find(ToLower(word));
  if (it == opinions_.end()) return std::nullopt;
  return it->second;
}

std::optional<IntensifierEntry> Lexicon::LookupIntensifier(
    const std::string &word) const {
  auto it = intensifiers_.find(ToLower(word));
  if (it == intensifiers_.end()) return std::nullopt;
  return it->second;
}

int Lexicon::MatchIntensifier(const std::vector<std::string> &words,
                              size_t start) const {
  for (int n = max_intensifier_words_; n >= 1; --n) {
    if (start + n > words.size()) continue;
    std::string key;
    for (int i = 0; i < n; ++i) {
      if (i) key += ' ';
      key += ToLower(words[start + i]);
    }
    if (intensifiers_.count(key)) return n;
  }
  return 0;
}

Lexicon Lexicon::Sample(double fraction, uint64_t seed) const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw LexiconError("sample fraction must lie in (0, 1]");
  }
  std::vector<std::string> keys;
  keys.reserve(opinions_.size());
  for (const auto &kv : opinions_) keys.push_back(kv.first);
  std::mt19937_64 rng(seed);
  std::shuffle(keys.begin(), keys.end(), rng);
  size_t keep = static_cast<size_t>(
      std::floor(static_cast<double>(keys.size()) * fraction + 1e-9));
  Lexicon out;
  out.intensifiers_ = intensifiers_;
  out.max_intensifier_words_ = max_intensifier_words_;
  for (size_t i = 0; i < keep; ++i) {
    out.opinions_.emplace(keys[i], opinions_.at(keys[i]));
  }
  return out;
}

Lexicon ParseLexicon(const std::string &opinion_text,
                     const std::string &intensifier_text,
                     const std::string &opinion_name,
                     const std::string &intensifier_name) {
  Lexicon lex;
  ForEachRow(intensifier_text, intensifier_name,
             [&](const std::vector<std::string> &f, const std::string &where) {
               if (f.size() != 3) {
                 throw LexiconError(where + ": expected 3 tab-separated "
                                            "fields (word, kind, level)");
               }
               IntensifierEntry e;
               e.word = Trim(f[0]);
               std::string kind = ToLower(Trim(f[1]));
               if (kind == "amplifier") {
                 e.level.kind = IntensifierKind::kAmplifier;
               } else if (kind == "negator") {
                 e.level.kind = IntensifierKind::kNegator;
               } else {
                 throw LexiconError(where + ": unknown intensifier kind '" +
                                    f[1] + "'");
               }
               e.level.level = ParseLevel(Trim(f[2]), where);
               try {
                 lex.AddIntensifier(e);
               } catch (const std::exception &ex) {
                 throw LexiconError(where + ": " + ex.what());
               }
             });
  ForEachRow(opinion_text, opinion_name,
             [&](const std::vector<std::string> &f, const std::string &where) {
               if (f.size() != 3 && f.size() != 4) {
                 throw LexiconError(where + ": expected 3 or 4 tab-separated "
                                            "fields (word, orientation, "
                                            "level[, flags])");
               }
               OpinionEntry e;
               e.word = Trim(f[0]);
               std::string orient = ToLower(Trim(f[1]));
               if (orient == "positive") {
                 e.degree.orientation = Orientation::kPositive;
               } else if (orient == "negative") {
                 e.degree.orientation = Orientation::kNegative;
               } else {
                 throw LexiconError(where + ": unknown orientation '" + f[1] +
                                    "'");
               }
               e.degree.level = ParseLevel(Trim(f[2]), where);
               if (f.size() == 4) {
                 std::istringstream flags(f[3]);
                 std::string flag;
                 while (std::getline(flags, flag, ',')) {
                   flag = ToLower(Trim(flag));
                   if (flag.empty()) continue;
                   if (flag == "core") {
                     e.is_core = true;
                   } else if (flag == "noun") {
                     e.noun_ok = true;
                   } else {
                     throw LexiconError(where + ": unknown flag '" + flag +
                                        "'");
                   }
                 }
               }
               try {
                 lex.AddOpinion(e);
               } catch (const std::exception &ex) {
                 throw LexiconError(where + ": " + ex.what());
               }
             });
  return lex;
}

Lexicon LoadLexicon(const std::string &opinion_path,
                    const std::string &intensifier_path) {
  return ParseLexicon(ReadFile(opinion_path), ReadFile(intensifier_path),
                      opinion_path, intensifier_path);
}

std::string FormatOpinionTsv(const Lexicon &lex) {
  std::ostringstream out;
  for (const auto &[word, e] : lex.opinions()) {
    out << word << '\t' << OrientationName(e.degree.orientation) << '\t'
        << e.degree.level;
    std::string flags;
    if (e.is_core) flags = "core";
    if (e.noun_ok) flags += flags.empty() ? "noun" : ",noun";
    if (!flags.empty()) out << '\t' << flags;
    out << '\n';
  }
  return out.str();
}

std::string FormatIntensifierTsv(const Lexicon &lex) {
  std::ostringstream out;
  for (const auto &[word, e] : lex.intensifiers()) {
    out << word << '\t' << IntensifierKindName(e.level.kind) << '\t'
        << e.level.level << '\n';
  }
  return out.str();
}

void SaveLexicon(const Lexicon &lex, const std::string &opinion_path,
                 const std::string &intensifier_path) {
  std::ofstream op(opinion_path, std::ios::binary);
  std::ofstream in(intensifier_path, std::ios::binary);
  if (!op || !in) throw LexiconError("cannot write lexicon files");
  op << FormatOpinionTsv(lex);
  in << FormatIntensifierTsv(lex);
}

}  // namespace opinion
