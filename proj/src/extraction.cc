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

#include "opinion/extraction.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "opinion/patterns.h"

namespace opinion {

namespace {

using ordered_json = nlohmann::ordered_json;

// Plain union-find over dense ids.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    // Smaller id stays the root so iteration order is stable.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

std::optional<OpinionEntry> LookupWord(const Lexicon &lex, const Token &t) {
  if (auto e = lex.LookupOpinion(t.form)) return e;
  if (!t.lemma.empty() && t.lemma != "_") return lex.LookupOpinion(t.lemma);
  return std::nullopt;
}

int PosClass(const std::string &pos) {
  if (IsNounTag(pos)) return 0;
  if (IsAdjectiveTag(pos)) return 1;
  if (IsAdverbTag(pos)) return 2;
  if (IsVerbTag(pos)) return 3;
  return 4;
}

std::string RenderList(const std::vector<std::string> &items) {
  if (items.empty()) return "null";
  if (items.size() == 1) return items[0];
  std::string out = "<";
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + ">";
}

std::string JoinSpace(const std::vector<std::string> &items) {
  std::string out;
  for (const auto &w : items) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

class Engine {
 public:
  Engine(const ParsedReview &r, const Lexicon &lex, const EngineOptions &opts)
      : review_(r), lex_(lex), opts_(opts), hits_(r.sentences.size()) {}

  ExtractionResult Run() {
    ScanIntensifiers();
    Seed();
    Mine();
    CountFrequencies();

    ExtractionResult res;
    res.review_id = review_.review_id;
    for (size_t si = 0; si < review_.sentences.size(); ++si) {
      res.kernels.push_back(BuildKernels(review_.sentences[si],
                                         static_cast<int>(si), state_,
                                         hits_[si]));
    }
    res.triples = BuildTriples(res.kernels);
    res.sextuples = EmitSextuples(review_, res.triples);
    std::vector<std::pair<FuzzyTriple, int>> items;
    for (const auto &t : res.triples) items.push_back({t.value, t.frequency});
    try {
      res.weight = ComputeReviewWeight(items);
    } catch (const FuzzyError &e) {
      res.weight_error = e.what();
    }
    res.state = std::move(state_);
    res.trace = std::move(trace_);
    return res;
  }

 private:
  const Sentence &S(int si) const { return review_.sentences[si]; }

  void ScanIntensifiers() {
    for (size_t si = 0; si < review_.sentences.size(); ++si) {
      const Sentence &s = review_.sentences[si];
      std::vector<std::string> words;
      for (const Token &t : s.tokens()) words.push_back(t.form);
      size_t i = 0;
      while (i < words.size()) {
        int n = lex_.MatchIntensifier(words, i);
        if (n == 0) {
          ++i;
          continue;
        }
        IntensifierUnit u;
        u.sentence = static_cast<int>(si);
        std::vector<std::string> parts;
        for (int k = 0; k < n; ++k) {
          u.tokens.push_back(static_cast<int>(i) + k + 1);
          parts.push_back(ToLower(words[i + k]));
          intensifier_tokens_.insert({u.sentence, static_cast<int>(i) + k + 1});
        }
        u.text = JoinSpace(parts);
        u.entry = *lex_.LookupIntensifier(u.text);
        state_.intensifiers.push_back(std::move(u));
        i += n;
      }
    }
  }

  void Seed() {
    for (size_t si = 0; si < review_.sentences.size(); ++si) {
      const Sentence &s = review_.sentences[si];
      for (const Token &t : s.tokens()) {
        TokenRef ref{static_cast<int>(si), t.index};
        if (intensifier_tokens_.count(ref)) continue;
        auto e = LookupWord(lex_, t);
        if (!e) continue;
        if (IsOpinionCandidate(s, t.index)) {
          state_.opinions[ref] = {e->triple(), e->degree.orientation, true};
          state_.initial_opinions.insert(ref);
        } else if (e->noun_ok && IsFeatureCandidate(s, t.index)) {
          FeatureInfo fi;
          fi.orientation = e->degree.orientation;
          fi.opinionated = true;
          fi.base = e->triple();
          AdmitFeatureInfo(ref, fi);
        }
      }
    }
  }

  // Returns true when the token is new to F.
  bool AdmitFeatureInfo(TokenRef ref, FeatureInfo fi) {
    if (state_.features.count(ref) || state_.opinions.count(ref)) return false;
    if (intensifier_tokens_.count(ref)) return false;
    std::string surface = ToLower(S(ref.sentence).at(ref.index).form);
    fi.expanded = state_.seen_features.insert(surface).second;
    state_.features[ref] = fi;
    if (fi.expanded) pending_.insert(ref);
    return true;
  }

  bool AdmitFeature(TokenRef ref, Orientation o) {
    FeatureInfo fi;
    fi.orientation = o;
    if (auto e = LookupWord(lex_, S(ref.sentence).at(ref.index));
        e && e->noun_ok) {
      fi.opinionated = true;
      fi.base = e->triple();
      fi.orientation = e->degree.orientation;
    }
    return AdmitFeatureInfo(ref, fi);
  }

  bool AdmitOpinion(TokenRef ref, Orientation o) {
    if (state_.opinions.count(ref) || state_.features.count(ref)) return false;
    if (intensifier_tokens_.count(ref)) return false;
    const Token &t = S(ref.sentence).at(ref.index);
    auto e = LookupWord(lex_, t);
    OpinionInfo info;
    if (e) {
      info = {e->triple(), e->degree.orientation, true};
    } else {
      if (IsAdverbTag(t.pos)) return false;
      info.orientation = o;
      info.base = DegreeTriple({o, opts_.new_opinion_level});
    }
    state_.opinions[ref] = info;
    return true;
  }

  Orientation SeedOrientation(TokenRef seed, LinkKind link) const {
    bool opinion_seed = link == LinkKind::kFO || link == LinkKind::kOO;
    if (opinion_seed) return state_.opinions.at(seed).orientation;
    return state_.features.at(seed).orientation;
  }

  // Runs rules from the given seeds; returns tokens newly admitted.
  std::set<TokenRef> Apply(const std::vector<RuleId> &rules,
                           const std::set<TokenRef> &seeds, int line) {
    std::set<TokenRef> admitted;
    std::map<int, std::set<int>> by_sentence;
    for (const TokenRef &r : seeds) by_sentence[r.sentence].insert(r.index);
    for (RuleId rule : rules) {
      LinkKind link = RuleLink(rule);
      bool opinion_seed = link == LinkKind::kFO || link == LinkKind::kOO;
      for (const auto &[si, idx] : by_sentence) {
        const Sentence &s = S(si);
        std::vector<ExtractionHit> hits =
            opinion_seed ? ApplyRule(rule, s, idx, {})
                         : ApplyRule(rule, s, {}, idx);
        for (const ExtractionHit &h : hits) {
          TokenRef seed{si, h.seeds[0]};
          TokenRef target{si, h.extracted};
          Orientation o = SeedOrientation(seed, link);
          bool fresh = (link == LinkKind::kFO || link == LinkKind::kFF)
                           ? AdmitFeature(target, o)
                           : AdmitOpinion(target, o);
          if (fresh) admitted.insert(target);
          Record(si, h, line, fresh);
        }
      }
    }
    return admitted;
  }

  void Record(int si, const ExtractionHit &h, int line, bool fresh) {
    auto key = std::make_tuple(h.rule, h.seeds[0], h.extracted);
    if (!hit_keys_.insert({si, key}).second) return;
    hits_[si].push_back(h);
    trace_.push_back({pass_, line, si, h, fresh});
  }

  std::set<TokenRef> Keys(const std::map<TokenRef, OpinionInfo> &m) const {
    std::set<TokenRef> out;
    for (const auto &kv : m) out.insert(kv.first);
    return out;
  }

  void Mine() {
    static const std::vector<RuleId> kR1 = {RuleId::kR1_1, RuleId::kR1_2,
                                            RuleId::kR1_3};
    static const std::vector<RuleId> kR2 = {RuleId::kR2_1, RuleId::kR2_2,
                                            RuleId::kR2_3};
    static const std::vector<RuleId> kR3 = {RuleId::kR3_1, RuleId::kR3_2,
                                            RuleId::kR3_3};
    static const std::vector<RuleId> kR4 = {RuleId::kR4_1, RuleId::kR4_2};
    bool changed = true;
    while (changed) {
      ++pass_;
      changed = false;
      // Opinion expansion among opinions.
      for (;;) {
        auto fresh = Apply(kR4, Keys(state_.opinions), 6);
        if (fresh.empty()) break;
        changed = true;
      }
      // Features from all known opinions.
      if (!Apply(kR1, Keys(state_.opinions), 12).empty()) changed = true;
      // Features from features, then opinions from those features.
      std::set<TokenRef> expanded;
      while (!pending_.empty()) {
        std::set<TokenRef> batch;
        batch.swap(pending_);
        expanded.insert(batch.begin(), batch.end());
        if (!Apply(kR3, batch, 14).empty()) changed = true;
      }
      std::set<TokenRef> new_opinions = Apply(kR2, expanded, 15);
      if (!new_opinions.empty()) {
        changed = true;
        if (!Apply(kR1, new_opinions, 16).empty()) changed = true;
      }
      // Composite rules.
      if (!Apply({RuleId::kR5_1}, Keys(state_.opinions), 17).empty()) {
        changed = true;
      }
      if (!Apply({RuleId::kR6_1}, Keys(state_.opinions), 17).empty()) {
        changed = true;
      }
      if (!pending_.empty()) changed = true;
    }
  }

  void CountFrequencies() {
    for (const auto &[ref, fi] : state_.features) {
      state_.frequency[ToLower(S(ref.sentence).at(ref.index).form)] = 0;
    }
    for (const Sentence &s : review_.sentences) {
      for (const Token &t : s.tokens()) {
        auto it = state_.frequency.find(ToLower(t.form));
        if (it != state_.frequency.end()) ++it->second;
      }
    }
  }

  std::vector<OpinionTriple> BuildTriples(
      const std::vector<SentenceKernels> &kernels) const;

  const ParsedReview &review_;
  const Lexicon &lex_;
  EngineOptions opts_;
  ExtractionState state_;
  std::set<TokenRef> intensifier_tokens_;
  std::set<TokenRef> pending_;
  std::vector<std::vector<ExtractionHit>> hits_;
  std::set<std::pair<int, std::tuple<RuleId, int, int>>> hit_keys_;
  std::vector<TraceEntry> trace_;
  int pass_ = 0;
};

// Kernel membership shared by BuildKernels and triple construction.
struct KernelModel {
  // Items: features and opinions by token, intensifier units by position.
  std::vector<int> item_token;          // -1 for units
  std::vector<int> item_unit;           // -1 for tokens
  std::map<int, int> token_item;        // token -> item (units map every token)
  std::vector<int> unit_bound_to;       // opinion token or -1
  std::vector<std::vector<int>> layer1; // item groups
  std::vector<std::vector<int>> layer2; // layer-1 positions
};

KernelModel Model(const Sentence &s, int si, const ExtractionState &state,
                  const std::vector<ExtractionHit> &hits) {
  KernelModel km;
  std::set<int> feats, ops;
  for (const auto &[ref, fi] : state.features) {
    if (ref.sentence == si) feats.insert(ref.index);
  }
  for (const auto &[ref, oi] : state.opinions) {
    if (ref.sentence == si) ops.insert(ref.index);
  }
  std::vector<const IntensifierUnit *> units;
  for (const auto &u : state.intensifiers) {
    if (u.sentence == si) units.push_back(&u);
  }
  for (int t = 1; t <= s.size(); ++t) {
    if (feats.count(t) || ops.count(t)) {
      km.token_item[t] = static_cast<int>(km.item_token.size());
      km.item_token.push_back(t);
      km.item_unit.push_back(-1);
    }
  }
  for (size_t u = 0; u < units.size(); ++u) {
    int id = static_cast<int>(km.item_token.size());
    km.item_token.push_back(-1);
    km.item_unit.push_back(static_cast<int>(u));
    for (int t : units[u]->tokens) km.token_item[t] = id;
  }
  km.unit_bound_to.assign(units.size(), -1);
  int n = static_cast<int>(km.item_token.size());
  DisjointSet l1(n);

  auto role = [&](int t) { return feats.count(t) ? 'F' : 'O'; };
  // Equivalent structures.
  for (int a : km.item_token) {
    if (a < 0) continue;
    const Token &ta = s.at(a);
    for (int b : km.item_token) {
      if (b <= a || role(a) != role(b)) continue;
      const Token &tb = s.at(b);
      if (PosClass(ta.pos) != PosClass(tb.pos)) continue;
      bool arc = (ta.head == b || tb.head == a);
      const std::string &rel = ta.head == b ? ta.deprel : tb.deprel;
      bool equivalent = arc && (rel == "nn" || rel == "conj");
      if (!arc && ta.head == tb.head && ta.deprel == tb.deprel) {
        equivalent = true;
      }
      if (equivalent) l1.Union(km.token_item.at(a), km.token_item.at(b));
    }
  }
  // Modifiers attached to a kernel head.
  auto modifier = [](const std::string &rel) {
    return rel == "amod" || rel == "advmod" || rel == "neg";
  };
  for (int o : ops) {
    const Token &t = s.at(o);
    if (modifier(t.deprel) && t.head > 0 &&
        (feats.count(t.head) || ops.count(t.head))) {
      l1.Union(km.token_item.at(o), km.token_item.at(t.head));
    }
  }
  // Intensifier binding: by arc, through other units, then by adjacency.
  auto unit_top = [&](const IntensifierUnit &u) {
    for (int t : u.tokens) {
      int h = s.at(t).head;
      if (std::find(u.tokens.begin(), u.tokens.end(), h) == u.tokens.end()) {
        return t;
      }
    }
    return u.tokens.front();
  };
  for (size_t u = 0; u < units.size(); ++u) {
    int top = unit_top(*units[u]);
    int id = km.token_item.at(units[u]->tokens.front());
    int cur = top;
    for (int guard = 0; guard < s.size(); ++guard) {
      const Token &t = s.at(cur);
      if (!modifier(t.deprel) || t.head == 0) break;
      int h = t.head;
      if (ops.count(h)) {
        km.unit_bound_to[u] = h;
        l1.Union(id, km.token_item.at(h));
        break;
      }
      if (feats.count(h)) {
        l1.Union(id, km.token_item.at(h));
        break;
      }
      auto it = km.token_item.find(h);
      if (it == km.token_item.end() || km.item_unit[it->second] < 0) break;
      cur = unit_top(*units[km.item_unit[it->second]]);
    }
    if (km.unit_bound_to[u] < 0) {
      int next = units[u]->tokens.back() + 1;
      if (ops.count(next)) {
        km.unit_bound_to[u] = next;
        l1.Union(id, km.token_item.at(next));
      }
    }
  }
  // Units bound to another unit inherit its opinion.
  for (size_t u = 0; u < units.size(); ++u) {
    if (km.unit_bound_to[u] >= 0) continue;
    int root = l1.Find(km.token_item.at(units[u]->tokens.front()));
    for (size_t v = 0; v < units.size(); ++v) {
      if (v == u || km.unit_bound_to[v] < 0) continue;
      if (l1.Find(km.token_item.at(units[v]->tokens.front())) == root) {
        km.unit_bound_to[u] = km.unit_bound_to[v];
        break;
      }
    }
  }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[l1.Find(i)].push_back(i);
  std::map<int, int> item_l1;
  for (auto &[root, items] : groups) {
    for (int i : items) item_l1[i] = static_cast<int>(km.layer1.size());
    km.layer1.push_back(items);
  }
  auto first_token = [&](const std::vector<int> &items) {
    int best = s.size() + 1;
    for (int i : items) {
      int t = km.item_token[i] >= 0 ? km.item_token[i]
                                    : units[km.item_unit[i]]->tokens.front();
      best = std::min(best, t);
    }
    return best;
  };
  // Order layer-1 kernels by their first token.
  std::vector<int> order(km.layer1.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return first_token(km.layer1[a]) < first_token(km.layer1[b]);
  });
  std::vector<std::vector<int>> sorted;
  for (int p : order) {
    for (int i : km.layer1[p]) item_l1[i] = static_cast<int>(sorted.size());
    sorted.push_back(km.layer1[p]);
  }
  km.layer1 = sorted;

  int k1 = static_cast<int>(km.layer1.size());
  DisjointSet l2(k1);
  auto kernel_of = [&](int token) { return item_l1.at(km.token_item.at(token)); };
  for (const ExtractionHit &h : hits) {
    if (h.link != LinkKind::kFF) continue;
    int a = h.seeds[0], b = h.extracted;
    if (feats.count(a) && feats.count(b)) l2.Union(kernel_of(a), kernel_of(b));
  }
  for (const PhraseMatch &m : MatchPatterns(s)) {
    int first = -1;
    for (int t = m.start; t <= m.end; ++t) {
      if (!km.token_item.count(t)) continue;
      if (first < 0) {
        first = kernel_of(t);
      } else {
        l2.Union(first, kernel_of(t));
      }
    }
  }
  auto has_feature = [&](int root) {
    for (int k = 0; k < k1; ++k) {
      if (l2.Find(k) != root) continue;
      for (int i : km.layer1[k]) {
        if (km.item_token[i] >= 0 && feats.count(km.item_token[i])) return true;
      }
    }
    return false;
  };
  // Opinion-only kernels anchor to the nearest reachable feature.
  std::vector<std::pair<int, int>> anchors;
  for (int k = 0; k < k1; ++k) {
    int root = l2.Find(k);
    if (root != k) continue;
    if (has_feature(root)) continue;
    std::set<int> members;
    for (int j = 0; j < k1; ++j) {
      if (l2.Find(j) != root) continue;
      for (int i : km.layer1[j]) {
        if (km.item_token[i] >= 0) members.insert(km.item_token[i]);
      }
    }
    std::tuple<size_t, int, int> best{SIZE_MAX, 0, 0};
    int best_feature = -1;
    for (const ExtractionHit &h : hits) {
      int o, f;
      if (h.link == LinkKind::kFO) {
        o = h.seeds[0];
        f = h.extracted;
      } else if (h.link == LinkKind::kOF) {
        f = h.seeds[0];
        o = h.extracted;
      } else {
        continue;
      }
      if (!members.count(o) || !feats.count(f) || members.count(f)) continue;
      std::vector<PathStep> path = s.Path(o, f);
      bool blocked = false;
      for (size_t p = 0; p + 1 < path.size(); ++p) {
        int mid = path[p].to;
        if (ops.count(mid) && !members.count(mid)) blocked = true;
      }
      if (blocked) continue;
      std::tuple<size_t, int, int> key{path.size(), std::abs(o - f), f};
      if (key < best) {
        best = key;
        best_feature = f;
      }
    }
    if (best_feature >= 0) anchors.push_back({k, kernel_of(best_feature)});
  }
  for (auto [a, b] : anchors) l2.Union(a, b);

  std::map<int, std::vector<int>> g2;
  for (int k = 0; k < k1; ++k) g2[l2.Find(k)].push_back(k);
  for (auto &[root, ks] : g2) km.layer2.push_back(ks);
  return km;
}

std::string KernelText(const Sentence &s, const std::vector<int> &tokens) {
  std::vector<std::string> words;
  for (int t : tokens) words.push_back(s.at(t).form);
  return JoinSpace(words);
}

std::vector<int> ItemTokens(const KernelModel &km,
                            const std::vector<const IntensifierUnit *> &units,
                            const std::vector<int> &items) {
  std::vector<int> out;
  for (int i : items) {
    if (km.item_token[i] >= 0) {
      out.push_back(km.item_token[i]);
    } else {
      const auto &u = units[km.item_unit[i]]->tokens;
      out.insert(out.end(), u.begin(), u.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<const IntensifierUnit *> UnitsOf(const ExtractionState &state,
                                             int si) {
  std::vector<const IntensifierUnit *> units;
  for (const auto &u : state.intensifiers) {
    if (u.sentence == si) units.push_back(&u);
  }
  return units;
}

SentenceKernels KernelsFromModel(const Sentence &s, int si,
                                 const KernelModel &km,
                                 const ExtractionState &state) {
  auto units = UnitsOf(state, si);
  SentenceKernels out;
  for (const auto &items : km.layer1) {
    Kernel k;
    k.layer = 1;
    k.sentence = si;
    k.tokens = ItemTokens(km, units, items);
    k.text = KernelText(s, k.tokens);
    out.layer1.push_back(std::move(k));
  }
  for (const auto &ks : km.layer2) {
    Kernel k;
    k.layer = 2;
    k.sentence = si;
    k.children = ks;
    std::string text = "(";
    for (size_t i = 0; i < ks.size(); ++i) {
      const Kernel &child = out.layer1[ks[i]];
      k.tokens.insert(k.tokens.end(), child.tokens.begin(), child.tokens.end());
      if (i) text += "; ";
      text += child.text;
    }
    std::sort(k.tokens.begin(), k.tokens.end());
    k.text = text + ")";
    out.layer2.push_back(std::move(k));
  }
  return out;
}

std::vector<OpinionTriple> Engine::BuildTriples(
    const std::vector<SentenceKernels> &kernels) const {
  std::vector<OpinionTriple> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (size_t si = 0; si < review_.sentences.size(); ++si) {
    const Sentence &s = S(static_cast<int>(si));
    int sp = static_cast<int>(si);
    KernelModel km = Model(s, sp, state_, hits_[si]);
    auto units = UnitsOf(state_, sp);
    for (size_t g = 0; g < km.layer2.size(); ++g) {
      std::vector<int> opinion_tokens, feature_tokens;
      std::vector<int> unit_ids;
      for (int k : km.layer2[g]) {
        for (int i : km.layer1[k]) {
          int t = km.item_token[i];
          if (t < 0) {
            unit_ids.push_back(km.item_unit[i]);
          } else if (state_.opinions.count({sp, t})) {
            opinion_tokens.push_back(t);
          } else {
            feature_tokens.push_back(t);
          }
        }
      }
      std::sort(opinion_tokens.begin(), opinion_tokens.end());
      std::sort(feature_tokens.begin(), feature_tokens.end());
      std::sort(unit_ids.begin(), unit_ids.end());
      // Base values per opinion token.
      std::vector<std::pair<int, FuzzyTriple>> bases;
      for (int t : opinion_tokens) {
        bases.push_back({t, state_.opinions.at({sp, t}).base});
      }
      if (bases.empty()) {
        // Opinionated nouns carry the polarity when no opinion word does.
        std::vector<int> rest;
        for (int t : feature_tokens) {
          const FeatureInfo &fi = state_.features.at({sp, t});
          if (fi.opinionated) {
            opinion_tokens.push_back(t);
            bases.push_back({t, fi.base});
          } else {
            rest.push_back(t);
          }
        }
        feature_tokens = rest;
      }
      if (bases.empty()) continue;

      std::vector<FuzzyTriple> values;
      for (auto [t, base] : bases) {
        std::vector<std::pair<int, int>> own, shared;  // (distance, unit)
        for (int u : unit_ids) {
          int dist = std::abs(units[u]->tokens.front() - t);
          if (km.unit_bound_to[u] == t) {
            own.push_back({dist, u});
          } else if (km.unit_bound_to[u] < 0) {
            shared.push_back({dist, u});
          }
        }
        std::sort(own.begin(), own.end());
        std::sort(shared.begin(), shared.end());
        std::vector<std::pair<FuzzyTriple, IntensifierKind>> chain;
        for (auto [d, u] : own) {
          chain.push_back({units[u]->entry.triple(), units[u]->entry.level.kind});
        }
        for (auto [d, u] : shared) {
          chain.push_back({units[u]->entry.triple(), units[u]->entry.level.kind});
        }
        values.push_back(ApplyIntensifiers(chain, base));
      }

      OpinionTriple tr;
      tr.sentence = sp;
      tr.opinion_tokens = opinion_tokens;
      tr.feature_tokens = feature_tokens;
      std::vector<std::string> iw, ow, fw;
      for (int u : unit_ids) {
        iw.push_back(KernelText(s, units[u]->tokens));
        tr.intensifier_tokens.insert(tr.intensifier_tokens.end(),
                                     units[u]->tokens.begin(),
                                     units[u]->tokens.end());
      }
      for (int t : opinion_tokens) ow.push_back(s.at(t).form);
      for (int t : feature_tokens) fw.push_back(s.at(t).form);
      tr.intensifier = iw.empty() ? "" : RenderList(iw);
      tr.opinion = RenderList(ow);
      tr.feature = fw.empty() ? "" : RenderList(fw);
      if (!seen.insert({tr.opinion, tr.feature}).second) {
        continue;
      }
      tr.value = Mean(values);
      tr.frequency = 1;
      for (int t : feature_tokens) {
        auto it = state_.frequency.find(ToLower(s.at(t).form));
        if (it != state_.frequency.end()) {
          tr.frequency = std::max(tr.frequency, it->second);
        }
      }
      std::set<int> members(opinion_tokens.begin(), opinion_tokens.end());
      members.insert(feature_tokens.begin(), feature_tokens.end());
      for (const ExtractionHit &h : hits_[si]) {
        if (members.count(h.seeds[0]) && members.count(h.extracted)) {
          tr.relations.push_back({RuleName(h.rule), LinkKindName(h.link),
                                  s.at(h.seeds[0]).form,
                                  s.at(h.extracted).form});
        }
      }
      tr.kernel = kernels[si].layer2[g].text;
      out.push_back(std::move(tr));
    }
  }
  return out;
}

std::vector<int> JsonInts(const ordered_json &j, const char *key,
                          const std::string &where) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(where + ": missing array '" + key + "'");
  }
  return j[key].get<std::vector<int>>();
}

std::string OptString(const ordered_json &j, const char *key) {
  if (!j.contains(key) || j[key].is_null()) return "";
  return j[key].get<std::string>();
}

}  // namespace

std::string OpinionTriple::ToString() const {
  return "(" + (intensifier.empty() ? std::string("null") : intensifier) +
         ", " + opinion + ", " +
         (feature.empty() ? std::string("null") : feature) + ")";
}

SentenceKernels BuildKernels(const Sentence &s, int sentence_pos,
                             const ExtractionState &state,
                             const std::vector<ExtractionHit> &hits) {
  KernelModel km = Model(s, sentence_pos, state, hits);
  return KernelsFromModel(s, sentence_pos, km, state);
}

ExtractionResult ExtractReview(const ParsedReview &r, const Lexicon &lex,
                               const EngineOptions &opts) {
  return Engine(r, lex, opts).Run();
}

std::vector<Sextuple> EmitSextuples(const ParsedReview &r,
                                    const std::vector<OpinionTriple> &triples) {
  std::vector<Sextuple> out;
  for (const OpinionTriple &t : triples) {
    const Sentence &s = r.sentences.at(t.sentence);
    auto words = [&](const std::vector<int> &idx) {
      std::vector<std::string> w;
      for (int i : idx) w.push_back(s.at(i).form);
      return JoinSpace(w);
    };
    Sextuple x;
    x.review_id = r.review_id;
    x.product_id = r.product_id;
    x.feature = words(t.feature_tokens);
    x.opinion = words(t.opinion_tokens);
    x.intensifier = words(t.intensifier_tokens);
    x.fuzzy = t.value;
    x.scalar = Defuzzify(t.value);
    x.frequency = t.frequency;
    x.relations = t.relations;
    x.holder = r.holder;
    x.time = r.date;
    x.sentence = t.sentence;
    x.feature_tokens = t.feature_tokens;
    x.opinion_tokens = t.opinion_tokens;
    x.intensifier_tokens = t.intensifier_tokens;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<ExtractionResult> ExtractCorpus(
    const std::vector<ParsedReview> &reviews, const Lexicon &lex, int workers,
    const EngineOptions &opts) {
  std::vector<ExtractionResult> out(reviews.size());
  std::vector<std::exception_ptr> errors(reviews.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < reviews.size(); i = next++) {
      try {
        out[i] = ExtractReview(reviews[i], lex, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  int n = std::max(1, workers);
  n = static_cast<int>(std::min<size_t>(n, std::max<size_t>(1, reviews.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string SextupleToJsonLine(const Sextuple &s) {
  ordered_json j;
  j["review_id"] = s.review_id;
  j["product_id"] = s.product_id;
  j["feature"] = s.feature.empty() ? ordered_json(nullptr) : ordered_json(s.feature);
  j["opinion"] = s.opinion;
  j["intensifier"] =
      s.intensifier.empty() ? ordered_json(nullptr) : ordered_json(s.intensifier);
  j["fuzzy"] = {Round6(s.fuzzy.l), Round6(s.fuzzy.m), Round6(s.fuzzy.u)};
  j["scalar"] = Round6(s.scalar);
  j["frequency"] = s.frequency;
  ordered_json rel = ordered_json::array();
  for (const auto &r : s.relations) {
    rel.push_back({{"rule", r.rule}, {"kind", r.link}, {"from", r.from},
                   {"to", r.to}});
  }
  j["relations"] = rel;
  j["holder"] = s.holder.empty() ? ordered_json(nullptr) : ordered_json(s.holder);
  j["time"] = s.time.empty() ? ordered_json(nullptr) : ordered_json(s.time);
  j["tokens"] = {{"sentence", s.sentence},
                 {"feature", s.feature_tokens},
                 {"opinion", s.opinion_tokens},
                 {"intensifier", s.intensifier_tokens}};
  return j.dump();
}

Sextuple SextupleFromJsonLine(const std::string &line,
                              const std::string &where) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(where + ": invalid JSON: " + e.what());
  }
  try {
    Sextuple s;
    s.review_id = j.at("review_id").get<std::string>();
    s.product_id = j.at("product_id").get<std::string>();
    s.feature = OptString(j, "feature");
    s.opinion = j.at("opinion").get<std::string>();
    s.intensifier = OptString(j, "intensifier");
    auto f = j.at("fuzzy").get<std::vector<double>>();
    if (f.size() != 3) throw ParseError(where + ": fuzzy must have 3 values");
    s.fuzzy = {f[0], f[1], f[2]};
    s.scalar = j.at("scalar").get<double>();
    s.frequency = j.at("frequency").get<int>();
    if (s.frequency < 1) throw ParseError(where + ": frequency below 1");
    for (const auto &r : j.at("relations")) {
      s.relations.push_back({r.at("rule").get<std::string>(),
                             r.at("kind").get<std::string>(),
                             r.at("from").get<std::string>(),
                             r.at("to").get<std::string>()});
    }
    s.holder = OptString(j, "holder");
    s.time = OptString(j, "time");
    const auto &tok = j.at("tokens");
    s.sentence = tok.at("sentence").get<int>();
    s.feature_tokens = JsonInts(tok, "feature", where);
    s.opinion_tokens = JsonInts(tok, "opinion", where);
    s.intensifier_tokens = JsonInts(tok, "intensifier", where);
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<Sextuple> ReadSextuples(const std::string &path) {
  std::istringstream in(ReadTextFile(path));
  std::vector<Sextuple> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(SextupleFromJsonLine(line, path + ":" + std::to_string(n)));
  }
  return out;
}

std::string FormatTrace(const ParsedReview &r, const ExtractionResult &res) {
  std::ostringstream os;
  os << "review " << r.review_id << "\n";
  for (const TraceEntry &e : res.trace) {
    const Sentence &s = r.sentences.at(e.sentence);
    os << "  pass " << e.pass << " step " << e.line << " s" << e.sentence + 1
       << " " << RuleName(e.hit.rule) << " " << LinkKindName(e.hit.link) << " "
       << s.at(e.hit.seeds[0]).form << " -> " << s.at(e.hit.extracted).form
       << " [" << RelationClassName(ClassifyRelation(s, e.hit.seeds[0],
                                                     e.hit.extracted))
       << "]" << (e.admitted ? " new" : "") << "\n";
  }
  for (size_t si = 0; si < res.kernels.size(); ++si) {
    for (const Kernel &k : res.kernels[si].layer2) {
      os << "  kernel s" << si + 1 << " " << k.text << "\n";
    }
  }
  for (const OpinionTriple &t : res.triples) {
    os << "  triple " << t.ToString() << " value " << t.value.ToString()
       << " freq " << t.frequency << "\n";
  }
  if (res.weight) {
    os << "  weight " << res.weight->fuzzy.ToString() << " scalar "
       << res.weight->scalar << "\n";
  } else {
    os << "  weight unavailable: " << res.weight_error << "\n";
  }
  return os.str();
}

}  // namespace opinion
