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

#include "opinion/rules.h"

#include <algorithm>
#include <map>
#include <utility>

#include "opinion/lexicon.h"

namespace opinion {

namespace {

// Words a noisy tagger may mark as nouns but that never name a feature.
const std::set<std::string> &NonFeatureWords() {
  static const std::set<std::string> words = {
      "it",    "its",   "itself", "this",    "that",     "these",
      "those", "which", "what",   "who",     "whom",     "whose",
      "one",   "ones",  "they",   "them",    "he",       "she",
      "him",   "her",   "i",      "me",      "you",      "we",
      "us",    "my",    "your",   "our",     "their",    "something",
      "anything", "everything", "nothing", "someone", "anyone", "everyone"};
  return words;
}

enum class Shape { kSibling, kChain };

struct TwoStep {
  int middle;
  int target;
  PathStep first;
  PathStep second;
  Shape shape;
};

std::vector<TwoStep> TwoSteps(const Sentence &s, int x) {
  std::vector<TwoStep> out;
  for (const PathStep &a : s.Neighbours(x)) {
    for (const PathStep &b : s.Neighbours(a.to)) {
      if (b.to == x) continue;
      // Down then up would return to x; any other pair is a real path.
      if (a.dir == Direction::kDown && b.dir == Direction::kUp) continue;
      Shape shape = (a.dir == Direction::kUp && b.dir == Direction::kDown)
                        ? Shape::kSibling
                        : Shape::kChain;
      out.push_back({a.to, b.to, a, b, shape});
    }
  }
  return out;
}

// Label of the edge touching the far end of a one- or two-step path.
const std::string &TargetArc(const PathStep &last) { return last.relation; }

bool VerbOk(const Sentence &s, int y, const PathStep &last) {
  if (!IsVerbTag(s.at(y).pos)) return true;
  return TargetArc(last) == "amod";
}

class HitSink {
 public:
  explicit HitSink(RuleId rule) : rule_(rule) {}

  void Add(int seed, int extracted, std::vector<int> middle,
           std::vector<int> support = {}) {
    if (seed == extracted) return;
    if (!seen_.insert({seed, extracted}).second) return;
    ExtractionHit h;
    h.rule = rule_;
    h.seeds = {seed};
    h.extracted = extracted;
    h.middle = std::move(middle);
    h.support = std::move(support);
    h.link = RuleLink(rule_);
    hits_.push_back(std::move(h));
  }

  std::vector<ExtractionHit> Take() {
    std::stable_sort(hits_.begin(), hits_.end(),
                     [](const ExtractionHit &a, const ExtractionHit &b) {
                       return std::make_pair(a.seeds[0], a.extracted) <
                              std::make_pair(b.seeds[0], b.extracted);
                     });
    return std::move(hits_);
  }

 private:
  RuleId rule_;
  std::set<std::pair<int, int>> seen_;
  std::vector<ExtractionHit> hits_;
};

char SeedRole(LinkKind k) {
  return (k == LinkKind::kFO || k == LinkKind::kOO) ? 'O' : 'F';
}
char ExtractedRole(LinkKind k) {
  return (k == LinkKind::kFO || k == LinkKind::kFF) ? 'F' : 'O';
}
LinkKind Compose(char seed, char extracted) {
  if (seed == 'O') return extracted == 'F' ? LinkKind::kFO : LinkKind::kOO;
  return extracted == 'O' ? LinkKind::kOF : LinkKind::kFF;
}

}  // namespace

const char *RelationClassName(RelationClass c) {
  switch (c) {
    case RelationClass::kEdrDirect: return "EDR_direct";
    case RelationClass::kEdrIndirect: return "EDR_indirect";
    case RelationClass::kIdr: return "IDR";
  }
  return "?";
}

RelationClass ClassifyRelation(const Sentence &s, int a, int b) {
  size_t steps = s.Path(a, b).size();
  if (steps <= 1) return RelationClass::kEdrDirect;
  if (steps == 2) return RelationClass::kEdrIndirect;
  return RelationClass::kIdr;
}

const std::set<std::string> &RelationSetMR() {
  static const std::set<std::string> mr = {
      "nn", "nsubj", "amod", "advmod", "prep", "pobj", "dobj", "conj", "dep"};
  return mr;
}

bool InMR(const std::string &label) { return RelationSetMR().count(label); }

const char *RuleName(RuleId id) {
  static const char *kNames[] = {"R1_1", "R1_2", "R1_3", "R2_1", "R2_2",
                                 "R2_3", "R3_1", "R3_2", "R3_3", "R4_1",
                                 "R4_2", "R5_1", "R6_1"};
  return kNames[static_cast<int>(id)];
}

const std::vector<RuleId> &AllRules() {
  static const std::vector<RuleId> all = {
      RuleId::kR1_1, RuleId::kR1_2, RuleId::kR1_3, RuleId::kR2_1,
      RuleId::kR2_2, RuleId::kR2_3, RuleId::kR3_1, RuleId::kR3_2,
      RuleId::kR3_3, RuleId::kR4_1, RuleId::kR4_2, RuleId::kR5_1,
      RuleId::kR6_1};
  return all;
}

const char *LinkKindName(LinkKind k) {
  switch (k) {
    case LinkKind::kFO: return "FO";
    case LinkKind::kOF: return "OF";
    case LinkKind::kFF: return "FF";
    case LinkKind::kOO: return "OO";
  }
  return "?";
}

LinkKind RuleLink(RuleId id) {
  switch (id) {
    case RuleId::kR1_1:
    case RuleId::kR1_2:
    case RuleId::kR1_3:
    case RuleId::kR5_1:
      return LinkKind::kFO;
    case RuleId::kR2_1:
    case RuleId::kR2_2:
    case RuleId::kR2_3:
      return LinkKind::kOF;
    case RuleId::kR3_1:
    case RuleId::kR3_2:
    case RuleId::kR3_3:
      return LinkKind::kFF;
    case RuleId::kR4_1:
    case RuleId::kR4_2:
    case RuleId::kR6_1:
      return LinkKind::kOO;
  }
  return LinkKind::kFO;
}

bool IsFeatureCandidate(const Sentence &s, int index) {
  const Token &t = s.at(index);
  if (!IsNounTag(t.pos)) return false;
  return NonFeatureWords().count(ToLower(t.form)) == 0;
}

bool IsOpinionCandidate(const Sentence &s, int index) {
  const std::string &p = s.at(index).pos;
  return IsAdjectiveTag(p) || IsAdverbTag(p) || IsVerbTag(p);
}

std::vector<ExtractionHit> ApplyRule(RuleId rule, const Sentence &s,
                                     const std::set<int> &known_opinions,
                                     const std::set<int> &known_features) {
  HitSink sink(rule);
  switch (rule) {
    case RuleId::kR1_1:
      for (int o : known_opinions) {
        for (const PathStep &e : s.Neighbours(o)) {
          if (InMR(e.relation) && IsFeatureCandidate(s, e.to)) {
            sink.Add(o, e.to, {});
          }
        }
      }
      break;
    case RuleId::kR1_2:
    case RuleId::kR1_3: {
      Shape want = rule == RuleId::kR1_2 ? Shape::kSibling : Shape::kChain;
      for (int o : known_opinions) {
        for (const TwoStep &t : TwoSteps(s, o)) {
          if (t.shape != want) continue;
          if (!InMR(t.first.relation) || !InMR(t.second.relation)) continue;
          if (IsFeatureCandidate(s, t.target)) sink.Add(o, t.target, {t.middle});
        }
      }
      break;
    }
    case RuleId::kR2_1:
      for (int f : known_features) {
        for (const PathStep &e : s.Neighbours(f)) {
          if (InMR(e.relation) && IsOpinionCandidate(s, e.to) &&
              VerbOk(s, e.to, e)) {
            sink.Add(f, e.to, {});
          }
        }
      }
      break;
    case RuleId::kR2_2:
    case RuleId::kR2_3: {
      Shape want = rule == RuleId::kR2_2 ? Shape::kSibling : Shape::kChain;
      for (int f : known_features) {
        for (const TwoStep &t : TwoSteps(s, f)) {
          if (t.shape != want) continue;
          if (!InMR(t.first.relation) || !InMR(t.second.relation)) continue;
          if (IsOpinionCandidate(s, t.target) &&
              VerbOk(s, t.target, t.second)) {
            sink.Add(f, t.target, {t.middle});
          }
        }
      }
      break;
    }
    case RuleId::kR3_1:
    case RuleId::kR3_2: {
      const char *label = rule == RuleId::kR3_1 ? "conj" : "nn";
      for (int f : known_features) {
        for (const PathStep &e : s.Neighbours(f)) {
          if (e.relation == label && IsFeatureCandidate(s, e.to)) {
            sink.Add(f, e.to, {});
          }
        }
      }
      break;
    }
    case RuleId::kR3_3:
      for (int f : known_features) {
        for (const TwoStep &t : TwoSteps(s, f)) {
          if (!InMR(t.first.relation) || !InMR(t.second.relation)) continue;
          if (IsFeatureCandidate(s, t.target)) sink.Add(f, t.target, {t.middle});
        }
      }
      break;
    case RuleId::kR4_1:
      for (int o : known_opinions) {
        for (const PathStep &e : s.Neighbours(o)) {
          const std::string &p = s.at(e.to).pos;
          if (e.relation == "advmod" && IsAdverbTag(p)) {
            sink.Add(o, e.to, {});
          } else if (e.relation == "conj" &&
                     (IsAdjectiveTag(p) || IsAdverbTag(p))) {
            sink.Add(o, e.to, {});
          }
        }
      }
      break;
    case RuleId::kR4_2:
      for (int o : known_opinions) {
        if (!IsAdjectiveTag(s.at(o).pos)) continue;
        for (const TwoStep &t : TwoSteps(s, o)) {
          if (t.shape != Shape::kSibling) continue;
          if (t.first.relation != t.second.relation) continue;
          if (!InMR(t.first.relation)) continue;
          if (IsAdjectiveTag(s.at(t.target).pos)) {
            sink.Add(o, t.target, {t.middle});
          }
        }
      }
      break;
    case RuleId::kR5_1:
      for (int o : known_opinions) {
        for (const PathStep &e : s.Neighbours(o)) {
          if (!InMR(e.relation) || !IsFeatureCandidate(s, e.to)) continue;
          int f = e.to;
          for (const PathStep &n : s.Neighbours(f)) {
            if (n.relation == "nn" && n.to != o &&
                IsFeatureCandidate(s, n.to)) {
              sink.Add(o, n.to, {f});
            }
          }
          for (const TwoStep &t : TwoSteps(s, f)) {
            if (t.target == o || t.middle == o) continue;
            if (!InMR(t.first.relation) || !InMR(t.second.relation)) continue;
            if (IsFeatureCandidate(s, t.target)) {
              sink.Add(o, t.target, {f, t.middle});
            }
          }
        }
      }
      break;
    case RuleId::kR6_1:
      for (int o : known_opinions) {
        for (const PathStep &e : s.Neighbours(o)) {
          if (!InMR(e.relation) || !IsFeatureCandidate(s, e.to)) continue;
          int f = e.to;
          for (const TwoStep &t : TwoSteps(s, f)) {
            if (t.target == o || t.middle == o) continue;
            if (!InMR(t.first.relation) || !InMR(t.second.relation)) continue;
            if (!IsOpinionCandidate(s, t.target)) continue;
            for (const PathStep &g : s.Neighbours(t.target)) {
              if (g.to == f || !InMR(g.relation)) continue;
              if (!IsFeatureCandidate(s, g.to)) continue;
              sink.Add(o, t.target, {f, t.middle}, {g.to});
              break;
            }
          }
        }
      }
      break;
  }
  return sink.Take();
}

std::vector<ExtractionHit> TransitiveLift(
    const Sentence &s, const std::vector<ExtractionHit> &hits) {
  std::vector<ExtractionHit> out = hits;
  std::set<std::pair<int, int>> have;
  for (const auto &h : hits) {
    for (int seed : h.seeds) have.insert({seed, h.extracted});
  }
  for (const auto &h1 : hits) {
    for (const auto &h2 : hits) {
      if (std::find(h2.seeds.begin(), h2.seeds.end(), h1.extracted) ==
          h2.seeds.end()) {
        continue;
      }
      for (int a : h1.seeds) {
        int b = h2.extracted;
        if (a == b || have.count({a, b})) continue;
        std::vector<PathStep> path = s.Path(a, b);
        if (path.size() < 2) continue;
        bool uniform = std::all_of(path.begin(), path.end(),
                                   [&](const PathStep &p) {
                                     return p.dir == path[0].dir;
                                   });
        if (!uniform) continue;
        ExtractionHit lifted;
        lifted.rule = h1.rule;
        lifted.seeds = {a};
        lifted.extracted = b;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
          lifted.middle.push_back(path[i].to);
        }
        lifted.link = Compose(SeedRole(h1.link), ExtractedRole(h2.link));
        lifted.lifted = true;
        have.insert({a, b});
        out.push_back(std::move(lifted));
      }
    }
  }
  return out;
}

}  // namespace opinion
