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

#include "opinion/scoring.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace opinion {

namespace {

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

const char *ReviewClassName(ReviewClass c) {
  switch (c) {
    case ReviewClass::kPositive: return "positive";
    case ReviewClass::kNegative: return "negative";
    case ReviewClass::kNeutral: return "neutral";
  }
  return "?";
}

ReviewClass ClassifyReview(double scalar, const Thresholds &t) {
  if (t.negative > t.positive) {
    throw ScoringError("negative threshold " + Num(t.negative) +
                       " exceeds positive threshold " + Num(t.positive));
  }
  if (scalar >= t.positive) return ReviewClass::kPositive;
  if (scalar <= t.negative) return ReviewClass::kNegative;
  return ReviewClass::kNeutral;
}

ReviewClass GoldClass(int stars) {
  if (stars < 1 || stars > 5) {
    throw ScoringError("stars out of range 1..5: " + std::to_string(stars));
  }
  if (stars >= 4) return ReviewClass::kPositive;
  if (stars <= 2) return ReviewClass::kNegative;
  return ReviewClass::kNeutral;
}

std::vector<ReviewScore> ScoreReviews(const std::vector<ReviewMeta> &meta,
                                      const std::vector<Sextuple> &sextuples,
                                      const Thresholds &t) {
  std::map<std::string, std::vector<std::pair<FuzzyTriple, int>>> items;
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < meta.size(); ++i) index[meta[i].review_id] = i;
  for (const Sextuple &s : sextuples) {
    if (!index.count(s.review_id)) {
      throw ScoringError("sextuple names unknown review '" + s.review_id + "'");
    }
    items[s.review_id].push_back({s.fuzzy, s.frequency});
  }
  std::vector<ReviewScore> out;
  for (const ReviewMeta &m : meta) {
    ReviewScore r;
    r.review_id = m.review_id;
    r.product_id = m.product_id;
    r.stars = m.stars;
    r.date = m.date;
    r.price = m.price;
    r.gold = GoldClass(m.stars);
    auto it = items.find(m.review_id);
    if (it != items.end()) {
      r.weight = ComputeReviewWeight(it->second);
      r.predicted = ClassifyReview(r.weight->scalar, t);
    } else {
      ClassifyReview(0.0, t);  // validates thresholds
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> MinMaxNormalize(const std::vector<double> &values) {
  if (values.empty()) return {};
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  double span = *hi - *lo;
  std::vector<double> out;
  for (double v : values) out.push_back(span > 0 ? (v - *lo) / span : 1.0);
  return out;
}

std::vector<ProductOrientation> ProductOrientations(
    const std::vector<ReviewScore> &scores, std::vector<std::string> *warnings) {
  struct Acc {
    double sum = 0;
    int n = 0;
    double price_sum = 0;
    int price_n = 0;
  };
  std::map<std::string, Acc> acc;
  for (const ReviewScore &s : scores) {
    Acc &a = acc[s.product_id];
    if (s.price) {
      a.price_sum += *s.price;
      ++a.price_n;
    }
    if (!s.weight) continue;
    a.sum += s.weight->scalar;
    ++a.n;
  }
  std::vector<ProductOrientation> out;
  for (const auto &[pid, a] : acc) {
    if (a.n == 0) {
      if (warnings) {
        warnings->push_back("product '" + pid +
                            "' has no review with opinionated features; "
                            "omitted");
      }
      continue;
    }
    ProductOrientation p;
    p.product_id = pid;
    p.orientation = a.sum / a.n;
    p.review_count = a.n;
    if (a.price_n) p.price = a.price_sum / a.price_n;
    out.push_back(p);
  }
  std::vector<double> ov, cnt, price;
  bool all_priced = !out.empty();
  for (const auto &p : out) {
    ov.push_back(p.orientation);
    cnt.push_back(p.review_count);
    if (p.price) {
      price.push_back(*p.price);
    } else {
      all_priced = false;
    }
  }
  std::vector<double> nov = MinMaxNormalize(ov), ncnt = MinMaxNormalize(cnt);
  std::vector<double> nprice = all_priced ? MinMaxNormalize(price)
                                          : std::vector<double>{};
  for (size_t i = 0; i < out.size(); ++i) {
    out[i].norm_orientation = nov[i];
    out[i].norm_count = ncnt[i];
    if (all_priced) out[i].norm_price = nprice[i];
  }
  return out;
}

std::string FormatReviewScoresCsv(const std::vector<ReviewScore> &scores) {
  std::ostringstream os;
  os << "review_id,product_id,stars,date,fuzzy_l,fuzzy_m,fuzzy_u,scalar,"
        "predicted,gold\n";
  for (const ReviewScore &s : scores) {
    os << CsvField(s.review_id) << ',' << CsvField(s.product_id) << ','
       << s.stars << ',' << s.date << ',';
    if (s.weight) {
      os << Num(s.weight->fuzzy.l) << ',' << Num(s.weight->fuzzy.m) << ','
         << Num(s.weight->fuzzy.u) << ',' << Num(s.weight->scalar);
    } else {
      os << ",,,";
    }
    os << ',' << ReviewClassName(s.predicted) << ','
       << ReviewClassName(s.gold) << '\n';
  }
  return os.str();
}

std::string FormatProductsCsv(const std::vector<ProductOrientation> &products) {
  std::ostringstream os;
  os << "product_id,orientation,review_count,price,norm_orientation,"
        "norm_price,norm_count\n";
  for (const auto &p : products) {
    os << CsvField(p.product_id) << ',' << Num(p.orientation) << ','
       << p.review_count << ',' << (p.price ? Num(*p.price) : "") << ','
       << Num(p.norm_orientation) << ','
       << (p.norm_price ? Num(*p.norm_price) : "") << ',' << Num(p.norm_count)
       << '\n';
  }
  return os.str();
}

std::string FormatProductsJson(const std::vector<ProductOrientation> &products) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &p : products) {
    nlohmann::ordered_json j;
    j["product_id"] = p.product_id;
    j["orientation"] = Round6(p.orientation);
    j["review_count"] = p.review_count;
    j["price"] = p.price ? nlohmann::ordered_json(Round6(*p.price))
                         : nlohmann::ordered_json(nullptr);
    j["normalized"] = {
        {"orientation", Round6(p.norm_orientation)},
        {"price", p.norm_price ? nlohmann::ordered_json(Round6(*p.norm_price))
                               : nlohmann::ordered_json(nullptr)},
        {"review_count", Round6(p.norm_count)}};
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

}  // namespace opinion
