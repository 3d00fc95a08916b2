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

#include "opinion/analytics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

namespace opinion {

namespace {

std::string Trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

// Whole-word containment of phrase in text, both space separated.
bool ContainsPhrase(const std::string &text, const std::string &phrase) {
  std::string t = " " + text + " ";
  return t.find(" " + phrase + " ") != std::string::npos;
}

int MonthIndex(const std::string &date) {
  if (date.size() < 7) throw AnalyticsError("bad date '" + date + "'");
  int y = std::stoi(date.substr(0, 4));
  int m = std::stoi(date.substr(5, 2));
  return y * 12 + (m - 1);
}

std::string MonthLabel(int idx) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", idx / 12, idx % 12 + 1);
  return buf;
}

}  // namespace

const char *DimensionKindName(DimensionKind k) {
  return k == DimensionKind::kTechnical ? "technical" : "non_technical";
}

void DimensionConfig::Validate() const {
  std::set<std::string> names;
  std::map<std::string, std::string> owner;
  for (const Dimension &d : dimensions) {
    if (d.synonyms.empty()) {
      throw AnalyticsError("dimension '" + d.name + "' has no synonyms");
    }
    if (!names.insert(d.name).second) {
      throw AnalyticsError("duplicate dimension '" + d.name + "'");
    }
    for (const std::string &s : d.synonyms) {
      auto [it, fresh] = owner.insert({s, d.name});
      if (!fresh) {
        throw AnalyticsError("synonym '" + s + "' listed under both '" +
                             it->second + "' and '" + d.name + "'");
      }
    }
  }
}

int DimensionConfig::Match(const std::string &feature_text) const {
  std::string text = ToLower(feature_text);
  int best = -1;
  size_t best_len = 0;
  for (size_t i = 0; i < dimensions.size(); ++i) {
    for (const std::string &s : dimensions[i].synonyms) {
      if (s.size() > best_len && ContainsPhrase(text, s)) {
        best = static_cast<int>(i);
        best_len = s.size();
      }
    }
  }
  return best;
}

DimensionConfig ParseDimensionConfig(const std::string &text,
                                     const std::string &name) {
  DimensionConfig cfg;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f = Split(t, '\t');
    std::string where = name + ":" + std::to_string(n) + ": ";
    if (f.size() != 3) {
      throw AnalyticsError(where + "expected name<TAB>kind<TAB>synonyms");
    }
    Dimension d;
    d.name = Trim(f[0]);
    std::string kind = Trim(f[1]);
    if (kind == "technical") {
      d.kind = DimensionKind::kTechnical;
    } else if (kind == "non_technical") {
      d.kind = DimensionKind::kNonTechnical;
    } else {
      throw AnalyticsError(where + "unknown dimension kind '" + kind + "'");
    }
    for (const std::string &s : Split(f[2], ',')) {
      std::string syn = ToLower(Trim(s));
      if (!syn.empty()) d.synonyms.push_back(syn);
    }
    if (d.name.empty()) throw AnalyticsError(where + "empty dimension name");
    cfg.dimensions.push_back(std::move(d));
  }
  try {
    cfg.Validate();
  } catch (const AnalyticsError &e) {
    throw AnalyticsError(name + ": " + e.what());
  }
  return cfg;
}

DimensionConfig LoadDimensionConfig(const std::string &path) {
  return ParseDimensionConfig(ReadTextFile(path), path);
}

std::vector<DimensionReport> BucketSextuples(
    const std::vector<Sextuple> &sextuples, const DimensionConfig &cfg,
    int top_k) {
  size_t nd = cfg.dimensions.size();
  struct Acc {
    DimensionReport report;
    std::vector<double> scalar_sum;
    std::vector<std::map<std::string, int>> neg_terms;
  };
  std::map<std::string, Acc> by_product;
  for (const Sextuple &s : sextuples) {
    Acc &a = by_product[s.product_id];
    if (a.report.stats.empty()) {
      a.report.product_id = s.product_id;
      a.report.stats.resize(nd);
      a.scalar_sum.assign(nd, 0.0);
      a.neg_terms.resize(nd);
    }
    ++a.report.total;
    int d = cfg.Match(s.feature);
    if (d < 0) {
      ++a.report.other;
      continue;
    }
    DimensionStats &st = a.report.stats[d];
    ++st.matched;
    a.scalar_sum[d] += s.scalar;
    if (s.scalar > 0) {
      ++st.positive;
    } else if (s.scalar < 0) {
      ++st.negative;
      std::string term = s.opinion;
      if (!s.feature.empty()) term += " " + s.feature;
      ++a.neg_terms[d][term];
    }
  }
  std::vector<DimensionReport> out;
  for (auto &[pid, a] : by_product) {
    DimensionReport &r = a.report;
    double score_sum = 0;
    int scored = 0;
    for (size_t d = 0; d < nd; ++d) {
      DimensionStats &st = r.stats[d];
      if (st.matched > 0) {
        st.positive_share = static_cast<double>(st.positive) / st.matched;
        st.negative_share = static_cast<double>(st.negative) / st.matched;
        st.mean_scalar = a.scalar_sum[d] / st.matched;
        score_sum += st.mean_scalar;
        ++scored;
      }
      st.coverage = static_cast<double>(st.matched) / r.total;
      std::vector<std::pair<std::string, int>> terms(a.neg_terms[d].begin(),
                                                     a.neg_terms[d].end());
      std::stable_sort(terms.begin(), terms.end(),
                       [](const auto &x, const auto &y) {
                         return x.second > y.second;
                       });
      if (static_cast<int>(terms.size()) > top_k) terms.resize(top_k);
      st.top_negative = terms;
    }
    r.other_coverage = static_cast<double>(r.other) / r.total;
    r.overall_score = scored ? score_sum / scored : 0.0;
    out.push_back(std::move(r));
  }
  return out;
}

MonthlySeries BuildMonthlySeries(const std::string &product_id,
                                 const std::vector<Sextuple> &sextuples,
                                 const std::vector<ReviewScore> &scores,
                                 const DimensionConfig &cfg) {
  MonthlySeries s;
  for (const Dimension &d : cfg.dimensions) s.predictors.push_back(d.name);
  std::vector<const ReviewScore *> mine;
  for (const ReviewScore &r : scores) {
    if (r.product_id == product_id) mine.push_back(&r);
  }
  if (mine.empty()) {
    throw AnalyticsError("no reviews for product '" + product_id + "'");
  }
  int lo = MonthIndex(mine.front()->date), hi = lo;
  for (const ReviewScore *r : mine) {
    lo = std::min(lo, MonthIndex(r->date));
    hi = std::max(hi, MonthIndex(r->date));
  }
  size_t months = hi - lo + 1, nd = cfg.dimensions.size();
  s.x.assign(months, std::vector<double>(nd, 0.0));
  s.ov.assign(months, 0.0);
  s.cq.assign(months, 0.0);
  std::vector<int> weighted(months, 0);
  for (int m = lo; m <= hi; ++m) s.months.push_back(MonthLabel(m));
  std::map<std::string, int> review_month;
  for (const ReviewScore *r : mine) {
    int m = MonthIndex(r->date) - lo;
    review_month[r->review_id] = m;
    s.cq[m] += 1;
    if (r->weight) {
      s.ov[m] += r->weight->scalar;
      ++weighted[m];
    }
  }
  for (size_t m = 0; m < months; ++m) {
    if (weighted[m]) s.ov[m] /= weighted[m];
  }
  std::vector<std::vector<int>> matched(months, std::vector<int>(nd, 0));
  for (const Sextuple &x : sextuples) {
    if (x.product_id != product_id) continue;
    auto it = review_month.find(x.review_id);
    if (it == review_month.end()) continue;
    int d = cfg.Match(x.feature);
    if (d < 0) continue;
    ++matched[it->second][d];
    if (x.scalar < 0) s.x[it->second][d] += 1;
  }
  for (size_t m = 0; m < months; ++m) {
    for (size_t d = 0; d < nd; ++d) {
      if (matched[m][d]) s.x[m][d] /= matched[m][d];
    }
  }
  return s;
}

std::string FormatSeriesCsv(const MonthlySeries &s) {
  std::ostringstream os;
  os << "month";
  for (const auto &p : s.predictors) os << ',' << p;
  os << ",OV,CQ\n";
  for (size_t m = 0; m < s.months.size(); ++m) {
    os << s.months[m];
    for (double v : s.x[m]) os << ',' << Num(v);
    os << ',' << Num(s.ov[m]) << ',' << Num(s.cq[m]) << '\n';
  }
  return os.str();
}

MonthlySeries ParseSeriesCsv(const std::string &text, const std::string &name) {
  std::istringstream in(text);
  std::string line;
  MonthlySeries s;
  int n = 0;
  size_t cols = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> f = Split(t, ',');
    std::string where = name + ":" + std::to_string(n) + ": ";
    if (cols == 0) {
      if (f.size() < 3 || f.front() != "month" || f[f.size() - 2] != "OV" ||
          f.back() != "CQ") {
        throw AnalyticsError(where + "header must be month,...,OV,CQ");
      }
      cols = f.size();
      s.predictors.assign(f.begin() + 1, f.end() - 2);
      continue;
    }
    if (f.size() != cols) {
      throw AnalyticsError(where + "expected " + std::to_string(cols) +
                           " columns, got " + std::to_string(f.size()));
    }
    std::vector<double> v;
    try {
      for (size_t i = 1; i < cols; ++i) v.push_back(std::stod(f[i]));
    } catch (const std::exception &) {
      throw AnalyticsError(where + "non-numeric value");
    }
    s.months.push_back(f[0]);
    s.cq.push_back(v.back());
    v.pop_back();
    s.ov.push_back(v.back());
    v.pop_back();
    s.x.push_back(v);
  }
  if (cols == 0) throw AnalyticsError(name + ": missing header");
  return s;
}

std::string FormatSeriesJson(const std::string &product_id,
                             const MonthlySeries &s) {
  nlohmann::ordered_json j;
  j["product_id"] = product_id;
  j["months"] = s.months;
  nlohmann::ordered_json preds;
  for (size_t d = 0; d < s.predictors.size(); ++d) {
    std::vector<double> col;
    for (const auto &row : s.x) col.push_back(Round6(row[d]));
    preds[s.predictors[d]] = col;
  }
  j["negative_share"] = preds;
  std::vector<double> ov, cq;
  for (double v : s.ov) ov.push_back(Round6(v));
  for (double v : s.cq) cq.push_back(Round6(v));
  j["OV"] = ov;
  j["CQ"] = cq;
  return j.dump(2) + "\n";
}

RegressionModel FitRegression(const std::vector<std::vector<double>> &x,
                              const std::vector<double> &y,
                              const std::vector<std::string> &predictors,
                              const std::string &response) {
  size_t n = x.size(), p = predictors.size();
  if (y.size() != n) throw AnalyticsError("row count mismatch");
  if (n < p + 2) {
    throw AnalyticsError("need at least " + std::to_string(p + 2) +
                         " rows for " + std::to_string(p) +
                         " predictors, got " + std::to_string(n));
  }
  Eigen::MatrixXd a(n, p + 1);
  Eigen::VectorXd b(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].size() != p) throw AnalyticsError("ragged predictor row");
    a(i, 0) = 1.0;
    for (size_t j = 0; j < p; ++j) a(i, j + 1) = x[i][j];
    b(i) = y[i];
  }
  // Column scale for the rank tolerance.
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  double tol = 1e-10 * scale * static_cast<double>(std::max(n, p + 1));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(tol / scale);
  if (qr.rank() < static_cast<Eigen::Index>(p + 1)) {
    // Name every column that adds nothing to the span of the earlier ones.
    std::vector<std::string> dependent;
    Eigen::MatrixXd kept = a.col(0);
    for (size_t j = 0; j < p; ++j) {
      Eigen::MatrixXd trial(n, kept.cols() + 1);
      trial << kept, a.col(j + 1);
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> q(trial);
      q.setThreshold(tol / scale);
      if (q.rank() < trial.cols()) {
        dependent.push_back(predictors[j]);
      } else {
        kept = trial;
      }
    }
    std::string names;
    for (const auto &d : dependent) names += (names.empty() ? "" : ", ") + d;
    throw AnalyticsError("rank-deficient design for " + response +
                         "; collinear dimensions: " + names);
  }
  Eigen::VectorXd beta = qr.solve(b);
  RegressionModel m;
  m.response = response;
  m.predictors = predictors;
  m.intercept = beta(0);
  for (size_t j = 0; j < p; ++j) m.coefficients.push_back(beta(j + 1));
  Eigen::VectorXd resid = b - a * beta;
  m.rmse = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  for (size_t j = 0; j < p; ++j) {
    m.means.push_back(a.col(j + 1).mean());
    m.mins.push_back(a.col(j + 1).minCoeff());
    m.maxs.push_back(a.col(j + 1).maxCoeff());
  }
  return m;
}

double Predict(const RegressionModel &m, const std::vector<double> &x) {
  if (x.size() != m.coefficients.size()) {
    throw AnalyticsError("predictor vector has wrong length");
  }
  double y = m.intercept;
  for (size_t j = 0; j < x.size(); ++j) y += m.coefficients[j] * x[j];
  return y;
}

WhatIf PredictWhatIf(const RegressionModel &m,
                     const std::map<std::string, double> &modified,
                     double margin) {
  std::vector<double> x = m.means;
  WhatIf w;
  w.baseline = Predict(m, x);
  for (const auto &[name, value] : modified) {
    auto it = std::find(m.predictors.begin(), m.predictors.end(), name);
    if (it == m.predictors.end()) {
      throw AnalyticsError("unknown dimension '" + name + "'");
    }
    size_t j = it - m.predictors.begin();
    double range = m.maxs[j] - m.mins[j];
    if (value < m.mins[j] - margin * range ||
        value > m.maxs[j] + margin * range) {
      w.out_of_range.push_back(name);
    }
    x[j] = value;
  }
  w.prediction = Predict(m, x);
  return w;
}

std::string FormatReportCsv(const std::vector<DimensionReport> &reports,
                            const DimensionConfig &cfg) {
  std::ostringstream os;
  os << "product_id,dimension,kind,matched,positive_share,negative_share,"
        "coverage,mean_scalar,top_negative\n";
  for (const DimensionReport &r : reports) {
    for (size_t d = 0; d < cfg.dimensions.size(); ++d) {
      const DimensionStats &st = r.stats[d];
      std::string terms;
      for (const auto &[t, c] : st.top_negative) {
        if (!terms.empty()) terms += "; ";
        terms += t + " (" + std::to_string(c) + ")";
      }
      os << r.product_id << ',' << cfg.dimensions[d].name << ','
         << DimensionKindName(cfg.dimensions[d].kind) << ',' << st.matched
         << ',' << Num(st.positive_share) << ',' << Num(st.negative_share)
         << ',' << Num(st.coverage) << ',' << Num(st.mean_scalar) << ",\""
         << terms << "\"\n";
    }
    os << r.product_id << ",other,,"
       << r.other << ",,," << Num(r.other_coverage) << ",,\"\"\n";
    os << r.product_id << ",overall,,"
       << r.total << ",,,,"
       << Num(r.overall_score) << ",\"\"\n";
  }
  return os.str();
}

std::string FormatModelCsv(const std::vector<RegressionModel> &models) {
  std::ostringstream os;
  os << "response,term,coefficient,mean,rmse\n";
  for (const RegressionModel &m : models) {
    os << m.response << ",intercept," << Num(m.intercept) << ",,"
       << Num(m.rmse) << '\n';
    for (size_t j = 0; j < m.predictors.size(); ++j) {
      os << m.response << ',' << m.predictors[j] << ','
         << Num(m.coefficients[j]) << ',' << Num(m.means[j]) << ','
         << Num(m.rmse) << '\n';
    }
  }
  return os.str();
}

}  // namespace opinion
