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

#include "opinion/patterns.h"

#include <functional>

namespace opinion {

namespace {

using Slot = std::function<bool(const std::string &)>;

bool Jj(const std::string &p) { return IsAdjectiveTag(p); }
bool Rb(const std::string &p) { return IsAdverbTag(p); }
bool Vb(const std::string &p) { return IsVerbTag(p); }
bool Nn(const std::string &p) { return p == "NN" || p == "NNS"; }
bool Dt(const std::string &p) { return IsDeterminerTag(p); }
bool JjOrRb(const std::string &p) { return Jj(p) || Rb(p); }

// Slots plus the number of trailing slots that may be left out.
struct Shape {
  std::vector<Slot> slots;
  int optional_tail = 0;
};

const Shape &ShapeOf(PatternId id) {
  static const Shape kShapes[] = {
      {{Jj, Nn, Nn}, 1},      {{Jj, Nn, Rb}, 0},     {{Jj, Rb, Jj}, 0},
      {{Rb, JjOrRb, Nn}, 1},  {{Rb, JjOrRb, Jj}, 0}, {{Rb, Vb, Dt, Nn}, 0},
      {{Vb, Rb, Jj}, 0},      {{Vb, Jj}, 0},
  };
  return kShapes[static_cast<int>(id)];
}

}  // namespace

const char *PatternLabel(PatternId id) {
  static const char *kLabels[] = {"1.1", "1.2", "1.3", "2.1",
                                  "2.2", "2.3", "3.1", "3.2"};
  return kLabels[static_cast<int>(id)];
}

const std::vector<PatternId> &AllPatterns() {
  static const std::vector<PatternId> all = {
      PatternId::kAdjNounNoun,    PatternId::kAdjNounAdv,
      PatternId::kAdjAdvAdj,      PatternId::kAdvModNoun,
      PatternId::kAdvModAdj,      PatternId::kAdvVerbDetNoun,
      PatternId::kVerbAdvAdj,     PatternId::kVerbAdj};
  return all;
}

std::vector<int> PatternEnds(PatternId id, const Sentence &s, int start) {
  const Shape &shape = ShapeOf(id);
  std::vector<int> ends;
  int n = static_cast<int>(shape.slots.size());
  int matched = 0;
  while (matched < n && start + matched <= s.size() &&
         shape.slots[matched](s.at(start + matched).pos)) {
    ++matched;
  }
  for (int len = n - shape.optional_tail; len <= n; ++len) {
    if (matched >= len) ends.push_back(start + len - 1);
  }
  return ends;
}

std::vector<PhraseMatch> MatchPatterns(const Sentence &s) {
  std::vector<PhraseMatch> out;
  int i = 1;
  while (i <= s.size()) {
    PhraseMatch best{PatternId::kAdjNounNoun, i, 0};
    for (PatternId id : AllPatterns()) {
      for (int end : PatternEnds(id, s, i)) {
        if (end > best.end) {
          best.pattern = id;
          best.end = end;
        }
      }
    }
    if (best.end >= i) {
      out.push_back(best);
      i = best.end + 1;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace opinion
