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

#include "opinion/review.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace opinion {

using json = nlohmann::json;

namespace {

const std::set<std::string> &PennTags() {
  static const std::set<std::string> tags = {
      "CC",   "CD",  "DT",    "EX",    "FW",   "IN",   "JJ",  "JJR",
      "JJS",  "LS",  "MD",    "NN",    "NNS",  "NNP",  "NNPS", "PDT",
      "POS",  "PRP", "PRP$",  "RB",    "RBR",  "RBS",  "RP",  "SYM",
      "TO",   "UH",  "VB",    "VBD",   "VBG",  "VBN",  "VBP", "VBZ",
      "WDT",  "WP",  "WP$",   "WRB",   ".",    ",",    ":",   "``",
      "''",   "-LRB-", "-RRB-", "#",   "$",    "HYPH", "NFP", "ADD",
      "AFX",  "GW",  "XX",    "DET"};
  return tags;
}

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
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "# key = value" comment lines.
bool CommentValue(const std::string &line, const std::string &key,
                  std::string *value) {
  std::string body = Trim(line.substr(1));
  if (body.compare(0, key.size(), key) != 0) return false;
  std::string rest = Trim(body.substr(key.size()));
  if (rest.empty() || rest[0] != '=') return false;
  *value = Trim(rest.substr(1));
  return true;
}

std::string GoldFromMisc(const std::string &misc) {
  std::istringstream in(misc);
  std::string item;
  while (std::getline(in, item, '|')) {
    if (item.rfind("Gold=", 0) == 0) return item.substr(5);
  }
  return "";
}

bool ParseIsoDate(const std::string &s, int *y, int *m) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (int i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  int year = std::stoi(s.substr(0, 4));
  unsigned month = std::stoul(s.substr(5, 2));
  unsigned day = std::stoul(s.substr(8, 2));
  std::chrono::year_month_day ymd{std::chrono::year{year},
                                  std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) return false;
  *y = year;
  *m = static_cast<int>(month);
  return true;
}

struct PendingSentence {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  int first_line = 0;
};

}  // namespace

bool IsNounTag(const std::string &p) {
  return p == "NN" || p == "NNS" || p == "NNP" || p == "NNPS";
}
bool IsAdjectiveTag(const std::string &p) {
  return p == "JJ" || p == "JJR" || p == "JJS";
}
bool IsAdverbTag(const std::string &p) {
  return p == "RB" || p == "RBR" || p == "RBS";
}
bool IsVerbTag(const std::string &p) { return p.rfind("VB", 0) == 0; }
bool IsDeterminerTag(const std::string &p) {
  return p == "DT" || p == "PDT" || p == "WDT" || p == "DET";
}
bool IsPronounTag(const std::string &p) {
  return p == "PRP" || p == "PRP$" || p == "WP" || p == "WP$" || p == "EX";
}
bool IsPunctTag(const std::string &p) {
  static const std::set<std::string> punct = {
      ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "#", "$", "HYPH", "NFP"};
  return punct.count(p) > 0;
}
bool IsKnownPennTag(const std::string &p) { return PennTags().count(p) > 0; }

Sentence::Sentence(std::string id, std::vector<Token> tokens)
    : id_(std::move(id)), tokens_(std::move(tokens)) {
  children_.assign(tokens_.size() + 1, {});
  for (const Token &t : tokens_) {
    if (t.head >= 0 && t.head <= static_cast<int>(tokens_.size())) {
      children_[t.head].push_back(t.index);
    }
  }
}

void Sentence::Validate() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (tokens_[i].index != i + 1) {
      throw ParseError("sentence " + id_ +
                       ": token ids must be contiguous from 1 (duplicate id "
                       "gives a token two heads)");
    }
    if (tokens_[i].head < 0 || tokens_[i].head > n) {
      throw ParseError("sentence " + id_ + ": head of token " +
                       std::to_string(i + 1) + " out of range");
    }
    if (tokens_[i].head == tokens_[i].index) {
      throw ParseError("sentence " + id_ + ": token " +
                       std::to_string(i + 1) + " is its own head (cycle)");
    }
  }
  if (n == 0) return;
  if (children_[0].size() != 1) {
    throw ParseError("sentence " + id_ + ": expected exactly one root, found " +
                     std::to_string(children_[0].size()));
  }
  // Every token must reach the root.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    for (int steps = 0; cur != 0; ++steps) {
      if (steps > n) {
        throw ParseError("sentence " + id_ + ": cycle through token " +
                         std::to_string(i));
      }
      cur = tokens_[cur - 1].head;
    }
  }
}

std::vector<PathStep> Sentence::Path(int a, int b) const {
  std::vector<int> up_a, up_b;
  for (int cur = a; cur != 0; cur = at(cur).head) up_a.push_back(cur);
  for (int cur = b; cur != 0; cur = at(cur).head) up_b.push_back(cur);
  // Drop the shared tail above the lowest common ancestor.
  while (up_a.size() > 1 && up_b.size() > 1 &&
         up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
    up_a.pop_back();
    up_b.pop_back();
  }
  std::vector<PathStep> path;
  if (a == b) return path;
  if (up_a.back() != up_b.back()) return path;  // different trees
  for (size_t i = 0; i + 1 < up_a.size(); ++i) {
    const Token &t = at(up_a[i]);
    path.push_back({t.index, t.head, t.deprel, Direction::kUp});
  }
  for (size_t i = up_b.size() - 1; i-- > 0;) {
    const Token &t = at(up_b[i]);
    path.push_back({t.head, t.index, t.deprel, Direction::kDown});
  }
  return path;
}

std::vector<PathStep> Sentence::Neighbours(int index) const {
  std::vector<PathStep> out;
  const Token &t = at(index);
  if (t.head != 0 && !at(t.head).is_punct()) {
    out.push_back({index, t.head, t.deprel, Direction::kUp});
  }
  for (int c : children(index)) {
    if (at(c).is_punct()) continue;
    out.push_back({index, c, at(c).deprel, Direction::kDown});
  }
  return out;
}

std::vector<ReviewMeta> ParseMetadata(const std::string &text,
                                      const std::string &name) {
  std::vector<ReviewMeta> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = name + ":" + std::to_string(lineno);
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception &e) {
      throw ParseError(where + ": invalid JSON: " + e.what());
    }
    ReviewMeta m;
    try {
      m.review_id = j.at("review_id").get<std::string>();
      m.product_id = j.at("product_id").get<std::string>();
      m.stars = j.at("stars").get<int>();
      m.date = j.at("date").get<std::string>();
      m.holder = j.value("holder", std::string());
      if (j.contains("price") && !j["price"].is_null()) {
        m.price = j["price"].get<double>();
      }
    } catch (const json::exception &e) {
      throw ParseError(where + ": bad metadata record: " + e.what());
    }
    if (m.stars < 1 || m.stars > 5) {
      throw ParseError(where + ": stars must be 1..5");
    }
    if (!ParseIsoDate(m.date, &m.year, &m.month)) {
      throw ParseError(where + ": date must be YYYY-MM-DD, got '" + m.date +
                       "'");
    }
    if (!seen.insert(m.review_id).second) {
      throw ParseError(where + ": duplicate review_id " + m.review_id);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<ParsedReview> ParseCorpus(const std::string &conllu,
                                      const std::string &meta,
                                      std::vector<std::string> *warnings,
                                      const std::string &conllu_name,
                                      const std::string &meta_name) {
  std::map<std::string, ReviewMeta> by_id;
  for (auto &m : ParseMetadata(meta, meta_name)) by_id[m.review_id] = m;

  std::vector<ParsedReview> reviews;
  std::set<std::string> review_ids;
  PendingSentence pending;
  bool in_sentence = false;
  int lineno = 0;

  auto flush = [&]() {
    if (!in_sentence) return;
    in_sentence = false;
    if (pending.tokens.empty()) return;
    if (reviews.empty()) {
      throw ParseError(conllu_name + ":" + std::to_string(pending.first_line) +
                       ": sentence before any '# review_id' comment");
    }
    std::string id = pending.id.empty()
                         ? reviews.back().review_id + "-" +
                               std::to_string(reviews.back().sentences.size() +
                                              1)
                         : pending.id;
    Sentence s(id, std::move(pending.tokens));
    s.set_text(pending.text);
    try {
      s.Validate();
    } catch (const ParseError &e) {
      throw ParseError(conllu_name + ":" + std::to_string(pending.first_line) +
                       ": " + e.what());
    }
    reviews.back().sentences.push_back(std::move(s));
    pending = PendingSentence();
  };

  std::istringstream in(conllu);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string where = conllu_name + ":" + std::to_string(lineno);
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      std::string value;
      if (CommentValue(line, "review_id", &value)) {
        flush();
        if (!review_ids.insert(value).second) {
          throw ParseError(where + ": review " + value + " appears twice");
        }
        auto it = by_id.find(value);
        if (it == by_id.end()) {
          throw ParseError(where + ": review " + value +
                           " has no metadata record");
        }
        ParsedReview r;
        r.review_id = value;
        r.product_id = it->second.product_id;
        r.stars = it->second.stars;
        r.date = it->second.date;
        r.year = it->second.year;
        r.month = it->second.month;
        r.holder = it->second.holder;
        r.price = it->second.price;
        reviews.push_back(std::move(r));
      } else if (CommentValue(line, "sent_id", &value)) {
        flush();
        pending.id = value;
      } else if (CommentValue(line, "text", &value)) {
        pending.text = value;
      }
      continue;
    }
    std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() != 10) {
      throw ParseError(where + ": expected 10 tab-separated columns, got " +
                       std::to_string(cols.size()));
    }
    // Multiword ranges and empty nodes carry no basic arc.
    if (cols[0].find('-') != std::string::npos ||
        cols[0].find('.') != std::string::npos) {
      continue;
    }
    Token t;
    try {
      t.index = std::stoi(cols[0]);
      t.head = cols[6] == "_" ? -1 : std::stoi(cols[6]);
    } catch (const std::exception &) {
      throw ParseError(where + ": non-numeric ID or HEAD");
    }
    if (t.head < 0) throw ParseError(where + ": missing HEAD");
    t.form = cols[1];
    t.lemma = cols[2] == "_" ? cols[1] : cols[2];
    t.pos = cols[4] == "_" ? cols[3] : cols[4];
    t.deprel = cols[7];
    t.gold = GoldFromMisc(cols[9]);
    if (!t.gold.empty() && t.gold != "F" && t.gold != "O" && t.gold != "DO" &&
        t.gold != "N") {
      throw ParseError(where + ": unknown gold label '" + t.gold + "'");
    }
    if (!IsKnownPennTag(t.pos) && warnings) {
      warnings->push_back(where + ": unknown POS tag '" + t.pos +
                          "' (token kept)");
    }
    if (!in_sentence) {
      in_sentence = true;
      pending.first_line = lineno;
    }
    pending.tokens.push_back(std::move(t));
  }
  flush();
  return reviews;
}

std::string ReadTextFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ParsedReview> ReadCorpus(const std::string &conllu_path,
                                     const std::string &meta_path,
                                     std::vector<std::string> *warnings) {
  return ParseCorpus(ReadTextFile(conllu_path), ReadTextFile(meta_path),
                     warnings, conllu_path, meta_path);
}

std::string FormatConllu(const std::vector<ParsedReview> &reviews) {
  std::ostringstream out;
  for (const auto &r : reviews) {
    out << "# review_id = " << r.review_id << "\n";
    for (const auto &s : r.sentences) {
      out << "# sent_id = " << s.id() << "\n";
      if (!s.text().empty()) out << "# text = " << s.text() << "\n";
      for (const auto &t : s.tokens()) {
        out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << "_"
            << '\t' << t.pos << '\t' << "_" << '\t' << t.head << '\t'
            << t.deprel << '\t' << "_" << '\t'
            << (t.gold.empty() ? "_" : "Gold=" + t.gold) << "\n";
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace opinion
