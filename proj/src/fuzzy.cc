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

#include "opinion/fuzzy.h"

#include <algorithm>
#include <cstdio>

namespace opinion {

namespace {

// Shared rows of the degree scales.
constexpr FuzzyTriple kPositiveRows[5] = {
    {0.0, 0.1, 0.3}, {0.1, 0.3, 0.5}, {0.3, 0.5, 0.7},
    {0.5, 0.7, 0.9}, {0.7, 0.9, 1.0}};
constexpr FuzzyTriple kNegativeRows[5] = {
    {-0.3, -0.1, 0.0}, {-0.5, -0.3, -0.1}, {-0.7, -0.5, -0.3},
    {-0.9, -0.7, -0.5}, {-1.0, -0.9, -0.7}};
constexpr FuzzyTriple kNegatorRows[3] = {
    {-0.5, -0.3, 0.0}, {-0.7, -0.5, -0.3}, {-0.9, -0.7, -0.5}};

double Saturate(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

std::string FuzzyTriple::ToString() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.4g,%.4g,%.4g)", l, m, u);
  return buf;
}

const char *OrientationName(Orientation o) {
  return o == Orientation::kPositive ? "positive" : "negative";
}

const char *IntensifierKindName(IntensifierKind k) {
  return k == IntensifierKind::kAmplifier ? "amplifier" : "negator";
}

FuzzyTriple DegreeTriple(DegreeLevel d) {
  if (d.level < 1 || d.level > 5) {
    throw FuzzyError("opinion degree level out of range: " +
                     std::to_string(d.level));
  }
  return d.orientation == Orientation::kPositive ? kPositiveRows[d.level - 1]
                                                 : kNegativeRows[d.level - 1];
}

FuzzyTriple IntensifierTriple(IntensifierLevel i) {
  if (i.kind == IntensifierKind::kAmplifier) {
    if (i.level < 1 || i.level > 5) {
      throw FuzzyError("amplifier level out of range: " +
                       std::to_string(i.level));
    }
    return kPositiveRows[i.level - 1];
  }
  if (i.level < 1 || i.level > 3) {
    throw FuzzyError("negator level out of range: " +
                     std::to_string(i.level));
  }
  return kNegatorRows[i.level - 1];
}

FuzzyTriple Sorted(FuzzyTriple a) {
  double v[3] = {a.l, a.m, a.u};
  std::sort(v, v + 3);
  return {v[0], v[1], v[2]};
}

FuzzyTriple Clamp(FuzzyTriple a) {
  return Sorted({Saturate(a.l), Saturate(a.m), Saturate(a.u)});
}

int Sign(const FuzzyTriple &a) {
  if (a.m > 0) return 1;
  if (a.m < 0) return -1;
  return 0;
}

FuzzyTriple AddRaw(const FuzzyTriple &a, const FuzzyTriple &b) {
  return Sorted({a.l + b.l, a.m + b.m, a.u + b.u});
}

FuzzyTriple Add(const FuzzyTriple &a, const FuzzyTriple &b) {
  return Clamp(AddRaw(a, b));
}

FuzzyTriple Mul(const FuzzyTriple &a, const FuzzyTriple &b) {
  return Clamp(Sorted({a.l * b.l, a.m * b.m, a.u * b.u}));
}

FuzzyTriple Negate(const FuzzyTriple &a) { return {-a.u, -a.m, -a.l}; }

FuzzyTriple Square(const FuzzyTriple &a) {
  return Sorted({a.l * a.l, a.m * a.m, a.u * a.u});
}

FuzzyTriple CombineCase1(const FuzzyTriple &intensifier,
                         const FuzzyTriple &opinion) {
  int si = Sign(intensifier);
  int so = Sign(opinion);
  if (si == 0 || so == 0) return Add(intensifier, opinion);
  if (so > 0) return Add(intensifier, opinion);
  if (si > 0) return Add(Negate(intensifier), opinion);
  return Mul(intensifier, opinion);
}

FuzzyTriple CombineCase2(const FuzzyTriple &outer, IntensifierKind kind,
                         const FuzzyTriple &inner, int base_sign) {
  bool positive = base_sign != 0 ? base_sign > 0 : Sign(inner) >= 0;
  FuzzyTriple shift;
  if (kind == IntensifierKind::kNegator) {
    FuzzyTriple sq = Square(Negate(outer));
    shift = positive ? Negate(sq) : sq;
  } else {
    FuzzyTriple sq = Square(outer);
    shift = positive ? sq : Negate(sq);
  }
  return Add(inner, shift);
}

FuzzyTriple ApplyIntensifiers(
    const std::vector<std::pair<FuzzyTriple, IntensifierKind>> &chain,
    const FuzzyTriple &opinion) {
  if (chain.empty()) return opinion;
  FuzzyTriple value = CombineCase1(chain[0].first, opinion);
  for (size_t i = 1; i < chain.size(); ++i) {
    value = CombineCase2(chain[i].first, chain[i].second, value,
                         Sign(opinion));
  }
  return value;
}

double Defuzzify(const FuzzyTriple &a) { return (a.l + a.m + a.u) / 3.0; }

FuzzyTriple Mean(const std::vector<FuzzyTriple> &items) {
  if (items.empty()) throw FuzzyError("mean of an empty triple list");
  FuzzyTriple sum;
  for (const auto &t : items) {
    sum.l += t.l;
    sum.m += t.m;
    sum.u += t.u;
  }
  double n = static_cast<double>(items.size());
  return Clamp({sum.l / n, sum.m / n, sum.u / n});
}

ReviewWeight ComputeReviewWeight(
    const std::vector<std::pair<FuzzyTriple, int>> &items) {
  if (items.empty()) throw FuzzyError("no opinionated features in review");
  FuzzyTriple sum;
  double total = 0;
  for (const auto &[t, freq] : items) {
    if (freq < 1) throw FuzzyError("feature frequency must be at least 1");
    sum.l += t.l * freq;
    sum.m += t.m * freq;
    sum.u += t.u * freq;
    total += freq;
  }
  ReviewWeight rw;
  rw.fuzzy = Clamp({sum.l / total, sum.m / total, sum.u / total});
  rw.scalar = Defuzzify(rw.fuzzy);
  return rw;
}

}  // namespace opinion
