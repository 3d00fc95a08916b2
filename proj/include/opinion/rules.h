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

#ifndef OPINION_RULES_H_
#define OPINION_RULES_H_

#include <set>
#include <string>
#include <vector>

#include "opinion/review.h"

namespace opinion {

enum class RelationClass { kEdrDirect, kEdrIndirect, kIdr };
const char *RelationClassName(RelationClass c);

// Middle-word count on the tree path decides the class.
RelationClass ClassifyRelation(const Sentence &s, int a, int b);

// Labels the rules may traverse.
const std::set<std::string> &RelationSetMR();
bool InMR(const std::string &label);

enum class RuleId {
  kR1_1, kR1_2, kR1_3,  // opinion -> feature
  kR2_1, kR2_2, kR2_3,  // feature -> opinion
  kR3_1, kR3_2, kR3_3,  // feature -> feature
  kR4_1, kR4_2,         // opinion -> opinion
  kR5_1,                // opinion -> feature via a second feature
  kR6_1,                // opinion -> opinion via features
};
const char *RuleName(RuleId id);  // "R1_1" ...
const std::vector<RuleId> &AllRules();

// FO: opinion seed finds a feature. OF: feature seed finds an opinion.
enum class LinkKind { kFO, kOF, kFF, kOO };
const char *LinkKindName(LinkKind k);
LinkKind RuleLink(RuleId id);

struct ExtractionHit {
  RuleId rule = RuleId::kR1_1;
  std::vector<int> seeds;
  int extracted = 0;
  std::vector<int> middle;   // tokens between seed and extracted
  std::vector<int> support;  // tokens that licensed a composite rule
  LinkKind link = LinkKind::kFO;
  bool lifted = false;  // produced by TransitiveLift

  bool operator==(const ExtractionHit &other) const = default;
};

// Candidate checks shared with the engine.
bool IsFeatureCandidate(const Sentence &s, int index);
bool IsOpinionCandidate(const Sentence &s, int index);

// Applies one rule to a sentence. Pure; hits are sorted by (seed,
// extracted) and never extract a seed of the same hit.
std::vector<ExtractionHit> ApplyRule(RuleId rule, const Sentence &s,
                                     const std::set<int> &known_opinions,
                                     const std::set<int> &known_features);

// Adds direct links for chained hits whose tree path keeps one direction.
std::vector<ExtractionHit> TransitiveLift(
    const Sentence &s, const std::vector<ExtractionHit> &hits);

}  // namespace opinion

#endif  // OPINION_RULES_H_
