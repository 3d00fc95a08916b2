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

#ifndef OPINION_FUZZY_H_
#define OPINION_FUZZY_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opinion {

// Triangular fuzzy number (lower, modal, upper).
struct FuzzyTriple {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  FuzzyTriple() = default;
  constexpr FuzzyTriple(double lo, double mid, double hi)
      : l(lo), m(mid), u(hi) {}

  bool operator==(const FuzzyTriple &other) const = default;
  std::string ToString() const;
};

enum class Orientation { kPositive, kNegative };
enum class IntensifierKind { kAmplifier, kNegator };

const char *OrientationName(Orientation o);
const char *IntensifierKindName(IntensifierKind k);

// Opinion word degree scale, levels 1..5.
struct DegreeLevel {
  Orientation orientation = Orientation::kPositive;
  int level = 3;
  bool operator==(const DegreeLevel &other) const = default;
};

// Intensifier scale: amplifier levels 1..5, negator levels 1..3.
struct IntensifierLevel {
  IntensifierKind kind = IntensifierKind::kAmplifier;
  int level = 1;
  bool operator==(const IntensifierLevel &other) const = default;
};

// Raised for out-of-range levels and empty review weights.
class FuzzyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FuzzyTriple DegreeTriple(DegreeLevel d);
FuzzyTriple IntensifierTriple(IntensifierLevel i);

// Sorts the components ascending.
FuzzyTriple Sorted(FuzzyTriple a);

// Saturates every component to [-1, 1] and restores ascending order.
FuzzyTriple Clamp(FuzzyTriple a);

// Sign of the modal value: +1, -1 or 0.
int Sign(const FuzzyTriple &a);

// Component-wise ops. Add and Mul are clamped, Negate and Square are not.
FuzzyTriple AddRaw(const FuzzyTriple &a, const FuzzyTriple &b);
FuzzyTriple Add(const FuzzyTriple &a, const FuzzyTriple &b);
FuzzyTriple Mul(const FuzzyTriple &a, const FuzzyTriple &b);
FuzzyTriple Negate(const FuzzyTriple &a);
FuzzyTriple Square(const FuzzyTriple &a);

// One intensifier applied to an opinion word. A zero intensifier returns
// the opinion unchanged.
FuzzyTriple CombineCase1(const FuzzyTriple &intensifier,
                         const FuzzyTriple &opinion);

// A further intensifier wrapped around a case-1 result. The kind decides
// between the negator and amplifier formulas. base_sign is the sign of the
// bare opinion word; 0 falls back to the sign of inner.
FuzzyTriple CombineCase2(const FuzzyTriple &outer, IntensifierKind kind,
                         const FuzzyTriple &inner, int base_sign = 0);

// Applies intensifiers ordered innermost first (closest to the word).
FuzzyTriple ApplyIntensifiers(
    const std::vector<std::pair<FuzzyTriple, IntensifierKind>> &chain,
    const FuzzyTriple &opinion);

// Centroid (L + M + U) / 3.
double Defuzzify(const FuzzyTriple &a);

// Unweighted component-wise mean, clamped.
FuzzyTriple Mean(const std::vector<FuzzyTriple> &items);

struct ReviewWeight {
  FuzzyTriple fuzzy;
  double scalar = 0.0;
};

// Frequency-weighted mean of opinion triples. Throws FuzzyError on an empty
// list or a frequency below 1.
ReviewWeight ComputeReviewWeight(
    const std::vector<std::pair<FuzzyTriple, int>> &items);

}  // namespace opinion

#endif  // OPINION_FUZZY_H_
