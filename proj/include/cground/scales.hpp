// Copyright 2026 The cground Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Partially ordered sets of scalar expressions and sentence ranking.

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cground/proposition.hpp"

namespace cground {

enum class ScaleKind { entailment, world_knowledge, ad_hoc, conjunctive };

inline const char* to_string(ScaleKind k) {
  switch (k) {
    case ScaleKind::entailment: return "entailment-based";
    case ScaleKind::world_knowledge: return "world-knowledge";
    case ScaleKind::ad_hoc: return "ad-hoc";
    case ScaleKind::conjunctive: return "conjunctive";
  }
  return "?";
}

inline ScaleKind scale_kind_from_string(const std::string& s) {
  if (s == "entailment-based" || s == "entailment") return ScaleKind::entailment;
  if (s == "world-knowledge") return ScaleKind::world_knowledge;
  if (s == "ad-hoc") return ScaleKind::ad_hoc;
  if (s == "conjunctive") return ScaleKind::conjunctive;
  throw std::invalid_argument("unknown scale kind '" + s + "'");
}

class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strict partial order over scalar expressions. Items are symbols for
/// registered scales and canonical LF strings for generated conjunctive
/// scales. `higher(a, b)` holds on the transitive closure of the declared
/// order pairs.
class Scale {
 public:
  Scale() = default;

  /// Builds and validates. `order` lists (higher, lower) pairs.
  Scale(std::string id, ScaleKind kind, std::vector<std::string> items,
        std::vector<std::pair<std::string, std::string>> order)
      : id_(std::move(id)), kind_(kind), items_(std::move(items)) {
    std::set<std::string> seen;
    for (const auto& it : items_)
      if (!seen.insert(it).second)
        throw ScaleError("scale '" + id_ + "': duplicate item '" + it + "'");
    for (const auto& [hi, lo] : order) {
      if (!seen.count(hi) || !seen.count(lo))
        throw ScaleError("scale '" + id_ + "': order pair names unknown item");
      if (hi == lo)
        throw ScaleError("scale '" + id_ + "': order is not irreflexive at '" + hi + "'");
      above_[lo].insert(hi);
    }
    close_transitively();
    for (const auto& [lo, his] : above_)
      if (his.count(lo))
        throw ScaleError("scale '" + id_ + "': order has a cycle through '" + lo + "'");
  }

  /// A chain: items listed from highest to lowest.
  static Scale chain(std::string id, ScaleKind kind, std::vector<std::string> items) {
    std::vector<std::pair<std::string, std::string>> order;
    for (std::size_t i = 0; i + 1 < items.size(); ++i)
      order.emplace_back(items[i], items[i + 1]);
    return Scale(std::move(id), kind, std::move(items), std::move(order));
  }

  /// Items with no order between them: every pair is alternate.
  static Scale antichain(std::string id, ScaleKind kind, std::vector<std::string> items) {
    return Scale(std::move(id), kind, std::move(items), {});
  }

  const std::string& id() const { return id_; }
  ScaleKind kind() const { return kind_; }
  const std::vector<std::string>& items() const { return items_; }

  bool contains(const std::string& item) const {
    return std::find(items_.begin(), items_.end(), item) != items_.end();
  }

  bool higher(const std::string& a, const std::string& b) const {
    auto it = above_.find(b);
    return it != above_.end() && it->second.count(a) > 0;
  }

  /// Declared-or-derived (higher, lower) pairs, sorted.
  std::vector<std::pair<std::string, std::string>> order_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [lo, his] : above_)
      for (const auto& hi : his) out.emplace_back(hi, lo);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void close_transitively() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [lo, his] : above_) {
        std::set<std::string> add;
        for (const auto& hi : his) {
          auto it = above_.find(hi);
          if (it == above_.end()) continue;
          for (const auto& h2 : it->second)
            if (!his.count(h2)) add.insert(h2);
        }
        if (!add.empty()) {
          his.insert(add.begin(), add.end());
          changed = true;
        }
      }
    }
  }

  std::string id_;
  ScaleKind kind_ = ScaleKind::ad_hoc;
  std::vector<std::string> items_;
  std::map<std::string, std::set<std::string>> above_;  // item -> items above it
};

class ScaleRegistry {
 public:
  /// Empty registry. Use builtin() for the preloaded table.
  ScaleRegistry() = default;

  /// Every row of the standard sample-scales table. The conjunctive row
  /// (P, P∧Q) is a schema: conjunctive scales are generated on demand by
  /// conjunctive_scale() and so are not stored here.
  static ScaleRegistry builtin() {
    using K = ScaleKind;
    ScaleRegistry r;
    r.add(Scale::chain("definiteness", K::entailment, {"definite", "indefinite"}));
    r.add(Scale::chain("quantifiers", K::entailment, {"all", "most", "many", "some", "few"}));
    r.add(Scale::chain("epistemic-modals", K::entailment, {"necessarily", "probably", "possibly"}));
    r.add(Scale::chain("numerals", K::entailment, {"ten", "nine", "eight"}));
    r.add(Scale::chain("deontic-modals", K::entailment, {"must", "should", "may"}));
    r.add(Scale::chain("quality", K::entailment, {"excellent", "good"}));
    r.add(Scale::chain("temperature", K::entailment, {"hot", "warm"}));
    r.add(Scale::chain("frequency", K::entailment, {"always", "often", "sometimes"}));
    r.add(Scale::chain("attainment", K::entailment, {"succeed-in-ving", "try-to-v", "want-to-v"}));
    r.add(Scale::chain("liking", K::entailment, {"love", "like", "dont-mind"}));
    r.add(Scale::chain("negative-quantifiers", K::entailment, {"none", "not-all"}));
    r.add(Scale::antichain("fruit", K::world_knowledge,
                           {"apples", "bananas", "pears", "plums", "oranges"}));
    r.add(Scale::antichain("cars", K::world_knowledge, {"vw", "opel", "honda", "chevy"}));
    r.add(Scale::antichain("affordable", K::ad_hoc, {"a-dog", "a-stove"}));
    r.add(Scale::chain("book-parts", K::world_knowledge,
                       {"a-book", "half-of-a-book", "a-chapter-of-a-book"}));
    return r;
  }

  /// Adds a scale. Throws ScaleError on duplicate id or a conjunctive kind.
  void add(Scale s) {
    if (s.kind() == ScaleKind::conjunctive)
      throw ScaleError("conjunctive scales are generated, not registered");
    for (const auto& existing : scales_)
      if (existing.id() == s.id())
        throw ScaleError("duplicate scale id '" + s.id() + "'");
    scales_.push_back(std::move(s));
  }

  const std::vector<Scale>& scales() const { return scales_; }

  const Scale* find(const std::string& id) const {
    for (const auto& s : scales_)
      if (s.id() == id) return &s;
    return nullptr;
  }

  /// Scales that contain every one of `items`.
  std::vector<const Scale*> containing(const std::vector<std::string>& items) const {
    std::vector<const Scale*> out;
    for (const auto& s : scales_) {
      bool all = std::all_of(items.begin(), items.end(),
                             [&](const std::string& i) { return s.contains(i); });
      if (all) out.push_back(&s);
    }
    return out;
  }

  /// True if `hi` is above `lo` on some registered entailment-based scale.
  bool entails_item(const std::string& hi, const std::string& lo) const {
    for (const auto& s : scales_)
      if (s.kind() == ScaleKind::entailment && s.higher(hi, lo)) return true;
    return false;
  }

 private:
  std::vector<Scale> scales_;
};

/// Returns a copy of `registry` with `scale` registered.
inline ScaleRegistry register_scale(ScaleRegistry registry, Scale scale) {
  registry.add(std::move(scale));
  return registry;
}

// ---------------------------------------------------------------------------
// Scale definition records (JSON)

inline Scale scale_from_json(const nlohmann::json& j) {
  std::vector<std::string> items = j.at("items").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> order;
  if (j.contains("order"))
    for (const auto& pr : j.at("order")) {
      if (!pr.is_array() || pr.size() != 2)
        throw ScaleError("order entries must be [higher, lower] pairs");
      order.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  return Scale(j.at("id").get<std::string>(),
               scale_kind_from_string(j.at("kind").get<std::string>()),
               std::move(items), std::move(order));
}

inline nlohmann::json scale_to_json(const Scale& s) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& [hi, lo] : s.order_pairs()) order.push_back({hi, lo});
  return {{"id", s.id()}, {"kind", to_string(s.kind())}, {"items", s.items()},
          {"order", order}};
}

/// Loads a scale-definition file: a JSON array of {id, kind, items, order}.
inline void load_scale_file(ScaleRegistry& registry, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScaleError("cannot open scale file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ScaleError("scale file '" + path + "': " + e.what());
  }
  if (!j.is_array()) throw ScaleError("scale file must hold a JSON array");
  for (const auto& rec : j) registry.add(scale_from_json(rec));
}

// ---------------------------------------------------------------------------
// Conjunctive scales

/// The scale of conjunctive assertions evoked by p: every nonempty
/// sub-conjunction of p's conjuncts, larger conjunctions higher.
inline Scale conjunctive_scale(const Proposition& p) {
  std::vector<Proposition> parts;
  for (const auto& c : conjuncts(p))
    if (std::find(parts.begin(), parts.end(), c) == parts.end()) parts.push_back(c);
  if (parts.size() < 2) throw ScaleError("conjunctive scale needs a conjunction");
  if (parts.size() > 12) throw ScaleError("conjunction too large for a scale");

  const std::size_t n = parts.size();
  std::vector<std::string> items;
  std::vector<unsigned> masks;
  for (unsigned mask = (1u << n) - 1; mask > 0; --mask) {
    std::vector<Proposition> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(parts[i]);
    items.push_back(Proposition::conj(std::move(sub)).str());
    masks.push_back(mask);
  }
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t a = 0; a < masks.size(); ++a)
    for (std::size_t b = 0; b < masks.size(); ++b)
      if (a != b && (masks[a] & masks[b]) == masks[b])
        order.emplace_back(items[a], items[b]);
  return Scale("conj:" + p.str(), ScaleKind::conjunctive, std::move(items),
               std::move(order));
}

// ---------------------------------------------------------------------------
// Sentence ranking

enum class SentenceRank { higher, alternate, lower, unrelated };

inline const char* to_string(SentenceRank r) {
  switch (r) {
    case SentenceRank::higher: return "higher";
    case SentenceRank::alternate: return "alternate";
    case SentenceRank::lower: return "lower";
    case SentenceRank::unrelated: return "unrelated";
  }
  return "?";
}

namespace detail {

/// Collects symbol positions where a and b differ; false if the shapes differ.
inline bool symbol_diff(const Proposition& a, const Proposition& b,
                        std::vector<std::pair<Symbol, Symbol>>& out) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::atom:
      if (a.args().size() != b.args().size()) return false;
      if (a.predicate() != b.predicate()) out.emplace_back(a.predicate(), b.predicate());
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (a.args()[i] != b.args()[i]) out.emplace_back(a.args()[i], b.args()[i]);
      return true;
    case Kind::conj:
      if (a.members().size() != b.members().size()) return false;
      for (std::size_t i = 0; i < a.members().size(); ++i)
        if (!symbol_diff(a.members()[i], b.members()[i], out)) return false;
      return true;
    default:
      if (a.agent() != b.agent() || a.addressee() != b.addressee() ||
          a.degree() != b.degree() || a.time() != b.time())
        return false;
      return symbol_diff(a.body(), b.body(), out);
  }
}

inline SentenceRank rank_items(const Scale& s, const std::string& i, const std::string& j) {
  if (i == j) return SentenceRank::unrelated;
  if (s.higher(j, i)) return SentenceRank::higher;
  if (s.higher(i, j)) return SentenceRank::lower;
  return SentenceRank::alternate;
}

inline SentenceRank rank_conjunctive(const Proposition& pi, const Proposition& pj,
                                     const Scale& s) {
  std::set<Proposition> universe;
  for (const auto& item : s.items())
    for (const auto& c : conjuncts(parse_lf(item))) universe.insert(c);
  auto split = [&](const Proposition& p, std::set<Proposition>& in,
                   std::set<Proposition>& out) {
    for (const auto& c : conjuncts(p)) (universe.count(c) ? in : out).insert(c);
  };
  std::set<Proposition> in_i, out_i, in_j, out_j;
  split(pi, in_i, out_i);
  split(pj, in_j, out_j);
  if (out_i != out_j || in_i.empty() || in_j.empty()) return SentenceRank::unrelated;
  // Items were generated in conjunct order, so look items up by content.
  auto find_item = [&](const std::set<Proposition>& parts) -> std::optional<std::string> {
    for (const auto& item : s.items()) {
      auto cs = conjuncts(parse_lf(item));
      if (std::set<Proposition>(cs.begin(), cs.end()) == parts) return item;
    }
    return std::nullopt;
  };
  auto ii = find_item(in_i), jj = find_item(in_j);
  if (!ii || !jj) return SentenceRank::unrelated;
  return rank_items(s, *ii, *jj);
}

}  // namespace detail

/// Ranks p_j relative to p_i: `higher` when p_j carries the higher item.
inline SentenceRank rank_sentences(const Proposition& pi, const Proposition& pj,
                                   const Scale& scale) {
  if (scale.kind() == ScaleKind::conjunctive)
    return detail::rank_conjunctive(pi, pj, scale);
  std::vector<std::pair<Symbol, Symbol>> diff;
  if (!detail::symbol_diff(pi, pj, diff) || diff.size() != 1)
    return SentenceRank::unrelated;
  const auto& [ei, ej] = diff.front();
  if (!scale.contains(ei) || !scale.contains(ej)) return SentenceRank::unrelated;
  return detail::rank_items(scale, ei, ej);
}

// ---------------------------------------------------------------------------
// Salience

class AmbiguousScaleError : public ScaleError {
 public:
  explicit AmbiguousScaleError(std::vector<std::string> candidates)
      : ScaleError(make_message(candidates)), candidates_(std::move(candidates)) {}
  const std::vector<std::string>& candidates() const { return candidates_; }

 private:
  static std::string make_message(const std::vector<std::string>& c) {
    std::string m = "ambiguous salient scale:";
    for (const auto& id : c) m += " " + id;
    return m;
  }
  std::vector<std::string> candidates_;
};

/// The scale made salient by the focal expressions of a pair of utterances.
/// Registered scales are tried first (they must match uniquely); otherwise,
/// when the second focus is a proper sub-conjunction of the first, the
/// conjunctive scale of `u1_lf` is returned.
inline std::optional<Scale> salient_scale(const Expression& u1_focus,
                                          const Expression& u2_focus,
                                          const ScaleRegistry& registry,
                                          const Proposition& u1_lf) {
  std::string e1 = expression_text(u1_focus), e2 = expression_text(u2_focus);
  if (e1 == e2) return std::nullopt;

  auto matches = registry.containing({e1, e2});
  if (matches.size() > 1) {
    std::vector<std::string> ids;
    for (const auto* s : matches) ids.push_back(s->id());
    throw AmbiguousScaleError(std::move(ids));
  }
  if (matches.size() == 1) return *matches.front();

  const auto* p1 = std::get_if<Proposition>(&u1_focus);
  const auto* p2 = std::get_if<Proposition>(&u2_focus);
  if (!p1 || !p2) return std::nullopt;
  auto c1 = conjuncts(*p1), c2 = conjuncts(*p2);
  std::set<Proposition> s1(c1.begin(), c1.end()), s2(c2.begin(), c2.end());
  bool proper_subset = s2.size() < s1.size() &&
                       std::includes(s1.begin(), s1.end(), s2.begin(), s2.end());
  if (!proper_subset) return std::nullopt;
  auto lf_parts = conjuncts(u1_lf);
  std::set<Proposition> lf_set(lf_parts.begin(), lf_parts.end());
  if (!std::includes(lf_set.begin(), lf_set.end(), s1.begin(), s1.end()))
    return std::nullopt;
  return conjunctive_scale(u1_lf);
}

}  // namespace cground
