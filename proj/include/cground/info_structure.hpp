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
/// Focus, open propositions, IRU detection and the attitude locus.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cground/logic.hpp"
#include "cground/scales.hpp"
#include "cground/utterance.hpp"

namespace cground {

/// Focus paths after metrical projection. A focus labelled strong widens to
/// the conjunct that contains it (or the whole form when there is no
/// enclosing conjunction); weak or unlabelled focus stays narrow.
inline std::vector<Path> projected_focus(const UtteranceEvent& u) {
  std::vector<Path> out;
  for (std::size_t i = 0; i < u.focus.size(); ++i) {
    Path p = u.focus[i];
    bool strong = i < u.metrical.size() && u.metrical[i] == Metrical::strong;
    if (strong && u.lf) {
      // Cut just below the deepest conjunction on the way down.
      std::size_t cut = 0;
      Proposition node = *u.lf;
      for (std::size_t d = 0; d < p.size(); ++d) {
        if (node.is(Kind::atom)) break;
        if (node.is(Kind::conj)) cut = d + 1;
        node = node.is(Kind::conj) ? node.members()[static_cast<std::size_t>(p[d])]
                                   : node.body();
      }
      p.resize(cut);
    }
    out.push_back(std::move(p));
  }
  // Drop paths nested inside another focused path.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Path> kept;
  for (const auto& p : out) {
    bool nested = std::any_of(kept.begin(), kept.end(), [&](const Path& k) {
      return k.size() < p.size() && std::equal(k.begin(), k.end(), p.begin());
    });
    if (!nested) kept.push_back(p);
  }
  return kept;
}

/// The propositional skeleton with focal positions abstracted to slots
/// named `?0`, `?1`, ... in path order.
struct OpenProposition {
  Proposition skeleton;
  std::vector<Path> slots;
  std::vector<Expression> fillers;

  Proposition fill() const {
    Proposition p = skeleton;
    for (std::size_t i = 0; i < slots.size(); ++i) p = replace_at(p, slots[i], fillers[i]);
    return p;
  }
};

inline std::string slot_name(std::size_t i) { return "?" + std::to_string(i); }

inline OpenProposition open_proposition(const UtteranceEvent& u) {
  if (!u.lf) throw std::invalid_argument("open_proposition: utterance has no logical form");
  if (u.focus.empty()) throw std::invalid_argument("open_proposition: empty focus set");
  OpenProposition op{*u.lf, projected_focus(u), {}};
  for (std::size_t i = 0; i < op.slots.size(); ++i) {
    Expression filler = resolve_path(*u.lf, op.slots[i]);
    Expression slot = std::holds_alternative<Symbol>(filler)
                          ? Expression{slot_name(i)}
                          : Expression{Proposition::atom(slot_name(i))};
    op.skeleton = replace_at(op.skeleton, op.slots[i], slot);
    op.fillers.push_back(std::move(filler));
  }
  return op;
}

enum class FocusRelation { realizes_focal, substitutes_focal, unrelated };

inline const char* to_string(FocusRelation r) {
  switch (r) {
    case FocusRelation::realizes_focal: return "realizes-focal";
    case FocusRelation::substitutes_focal: return "substitutes-focal";
    case FocusRelation::unrelated: return "unrelated";
  }
  return "?";
}

namespace detail {

inline std::set<Proposition> conjunct_set(const Proposition& p) {
  auto cs = conjuncts(p);
  return {cs.begin(), cs.end()};
}

/// The top-level conjuncts touched by u's (projected) focus.
inline std::set<Proposition> focal_conjuncts(const UtteranceEvent& u) {
  std::set<Proposition> out;
  if (!u.lf) return out;
  for (const auto& path : projected_focus(u)) {
    if (!u.lf->is(Kind::conj) || path.empty()) {
      auto all = conjunct_set(*u.lf);
      out.insert(all.begin(), all.end());
    } else {
      out.insert(u.lf->members()[static_cast<std::size_t>(path.front())]);
    }
  }
  return out;
}

inline bool subset_of(const std::set<Proposition>& a, const std::set<Proposition>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// u2 re-realizes u1's skeleton at u1's focal paths; returns the filler pairs.
inline std::optional<std::vector<std::pair<Expression, Expression>>> aligned_fillers(
    const UtteranceEvent& u1, const UtteranceEvent& u2) {
  std::vector<std::pair<Expression, Expression>> out;
  Proposition s1 = *u1.lf, s2 = *u2.lf;
  auto paths = projected_focus(u1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!path_resolves(s2, paths[i])) return std::nullopt;
    Expression f1 = resolve_path(*u1.lf, paths[i]);
    Expression f2 = resolve_path(*u2.lf, paths[i]);
    if (f1.index() != f2.index()) return std::nullopt;
    Expression slot = std::holds_alternative<Symbol>(f1)
                          ? Expression{slot_name(i)}
                          : Expression{Proposition::atom(slot_name(i))};
    s1 = replace_at(s1, paths[i], slot);
    s2 = replace_at(s2, paths[i], slot);
    out.emplace_back(std::move(f1), std::move(f2));
  }
  if (!(s1 == s2)) return std::nullopt;
  return out;
}

}  // namespace detail

/// True when u2 keeps u1's conjuncts but drops at least one of them (the
/// shape in which a conjunctive scale can be evoked).
inline bool conjunctive_reduction(const UtteranceEvent& u1, const UtteranceEvent& u2) {
  if (!u1.lf || !u2.lf || !u1.lf->is(Kind::conj)) return false;
  auto c1 = detail::conjunct_set(*u1.lf), c2 = detail::conjunct_set(*u2.lf);
  return c2.size() < c1.size() && detail::subset_of(c2, c1);
}

/// The pair of focal expressions from which the salient scale is identified.
/// For a conjunctive reduction the first element is the conjunction of both
/// utterances' focal conjuncts, so the second is a sub-conjunction of it.
inline std::optional<std::pair<Expression, Expression>> focal_pair(const UtteranceEvent& u1,
                                                                   const UtteranceEvent& u2) {
  if (!u1.lf || !u2.lf || u1.focus.empty() || u2.focus.empty()) return std::nullopt;
  if (conjunctive_reduction(u1, u2)) {
    auto f1 = detail::focal_conjuncts(u1), f2 = detail::focal_conjuncts(u2);
    std::set<Proposition> wide = f1;
    wide.insert(f2.begin(), f2.end());
    // Keep u1's conjunct order so the generated items read naturally.
    std::vector<Proposition> wide_ordered, narrow_ordered;
    for (const auto& c : conjuncts(*u1.lf)) {
      if (wide.count(c)) wide_ordered.push_back(c);
      if (f2.count(c)) narrow_ordered.push_back(c);
    }
    if (narrow_ordered.empty()) return std::nullopt;
    return std::make_pair(Expression{Proposition::conj(wide_ordered)},
                          Expression{Proposition::conj(narrow_ordered)});
  }
  auto aligned = detail::aligned_fillers(u1, u2);
  if (!aligned) return std::nullopt;
  for (const auto& pr : *aligned)
    if (expression_text(pr.first) != expression_text(pr.second)) return pr;
  return aligned->front();
}

/// Decides whether u2 re-realizes u1's focal element (acceptance-shaped) or
/// re-realizes u1's open proposition while omitting, generalizing or
/// swapping the focal element (rejection-shaped).
inline FocusRelation substitution_of_focus(const UtteranceEvent& u1, const UtteranceEvent& u2,
                                           const ScaleRegistry& registry) {
  if (!u1.lf || !u2.lf || u1.focus.empty() || u2.focus.empty())
    return FocusRelation::unrelated;
  if (*u1.lf == *u2.lf) return FocusRelation::realizes_focal;

  if (u1.lf->is(Kind::conj)) {
    auto c1 = detail::conjunct_set(*u1.lf), c2 = detail::conjunct_set(*u2.lf);
    if (c1 == c2) return FocusRelation::realizes_focal;
    if (detail::subset_of(c2, c1)) {
      auto f1 = detail::focal_conjuncts(u1);
      if (detail::subset_of(f1, c2))
        return c2 == f1 ? FocusRelation::realizes_focal : FocusRelation::unrelated;
      return FocusRelation::substitutes_focal;
    }
  }

  auto aligned = detail::aligned_fillers(u1, u2);
  if (!aligned) return FocusRelation::unrelated;
  for (const auto& [f1, f2] : *aligned) {
    std::string a = expression_text(f1), b = expression_text(f2);
    if (a == b) continue;
    for (const auto* s : registry.containing({a, b}))
      if (!s->higher(b, a)) return FocusRelation::substitutes_focal;
    return FocusRelation::unrelated;
  }
  return FocusRelation::realizes_focal;
}

/// Index of the most recent earlier utterance whose content (or annotated
/// presuppositions) entails u's content. Questions contribute only their
/// presuppositions.
inline std::optional<int> detect_iru(const UtteranceEvent& u,
                                     const std::vector<UtteranceEvent>& history,
                                     const ScaleRegistry& registry, const AxiomSet& axioms) {
  if (!u.lf) return std::nullopt;
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    if (it->index >= u.index) continue;
    std::vector<Proposition> premises = it->cues.presuppositions;
    if (it->lf && it->act != SpeechAct::question) premises.push_back(*it->lf);
    if (premises.empty()) continue;
    if (derives(premises, *u.lf, axioms, registry)) return it->index;
  }
  return std::nullopt;
}

struct LocusResult {
  bool in_locus = false;
  bool echo = false;
};

/// Adjacent plus Other position. `iru_antecedent` is u's IRU antecedent, if
/// any; an IRU in the locus with a final rise is an echo.
inline LocusResult attitude_locus(const UtteranceEvent& u, const UtteranceEvent& prev,
                                  std::optional<int> iru_antecedent = std::nullopt) {
  LocusResult r;
  r.in_locus = prev.index == u.index - 1 && prev.speaker != u.speaker;
  r.echo = r.in_locus && iru_antecedent.has_value() && u.tone == BoundaryTone::high;
  return r;
}

enum class IruRelation { repetition, paraphrase, inference };

inline const char* to_string(IruRelation r) {
  switch (r) {
    case IruRelation::repetition: return "repetition";
    case IruRelation::paraphrase: return "paraphrase";
    case IruRelation::inference: return "inference";
  }
  return "?";
}

/// How an IRU's content relates to its antecedent's: identical content (or
/// exactly the antecedent's focal part, the rest elided) is a repetition,
/// mutual entailment a paraphrase, one-way entailment an inference made
/// explicit.
inline IruRelation iru_relation(const UtteranceEvent& u, const UtteranceEvent& antecedent,
                                const ScaleRegistry& registry, const AxiomSet& axioms) {
  if (!u.lf || !antecedent.lf) throw std::invalid_argument("iru_relation: missing content");
  auto mine = detail::conjunct_set(*u.lf);
  if (*u.lf == *antecedent.lf || mine == detail::conjunct_set(*antecedent.lf))
    return IruRelation::repetition;
  if (antecedent.lf->is(Kind::conj) && !antecedent.focus.empty() &&
      mine == detail::focal_conjuncts(antecedent))
    return IruRelation::repetition;
  if (derives({*u.lf}, *antecedent.lf, axioms, registry)) return IruRelation::paraphrase;
  return IruRelation::inference;
}

}  // namespace cground
