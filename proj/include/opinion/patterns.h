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

#ifndef OPINION_PATTERNS_H_
#define OPINION_PATTERNS_H_

#include <string>
#include <vector>

#include "opinion/review.h"

namespace opinion {

// Opinion phrase shapes, at most three content words.
enum class PatternId {
  kAdjNounNoun,     // 1.1 JJ NN [NN]
  kAdjNounAdv,      // 1.2 JJ NN RB
  kAdjAdvAdj,       // 1.3 JJ RB JJ
  kAdvModNoun,      // 2.1 RB JJ/RB [NN]
  kAdvModAdj,       // 2.2 RB JJ/RB JJ
  kAdvVerbDetNoun,  // 2.3 RB VB DT NN
  kVerbAdvAdj,      // 3.1 VB RB JJ
  kVerbAdj,         // 3.2 VB JJ
};

const char *PatternLabel(PatternId id);  // "1.1" ... "3.2"
const std::vector<PatternId> &AllPatterns();

struct PhraseMatch {
  PatternId pattern;
  int start = 0;  // first token index (1-based)
  int end = 0;    // last token index, inclusive
  int length() const { return end - start + 1; }
};

// All matches a pattern allows at one start position, each as an
// inclusive end index.
std::vector<int> PatternEnds(PatternId id, const Sentence &s, int start);

// Longest match wins at a start, then leftmost; non-overlapping, sorted.
std::vector<PhraseMatch> MatchPatterns(const Sentence &s);

}  // namespace opinion

#endif  // OPINION_PATTERNS_H_
