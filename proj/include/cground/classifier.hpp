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
/// Acceptance and rejection subtypes for a response in the attitude locus.

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cground/ground.hpp"
#include "cground/info_structure.hpp"
#include "cground/logic.hpp"
#include "cground/scales.hpp"
#include "cground/utterance.hpp"

namespace cground {

enum class Major { acceptance, rejection, echo, unrelated };

enum class AcceptanceType { prompt, repetition, paraphrase, inference_explicit, implicit };

enum class RejectionType {
  denial,
  contradiction,
  implicit_denial,
  refusal,
  implicature_rejection,
  deny_belief_transfer,
  inconsistent_past_belief,
  contradictory_authority,
  negative_consequence,
  precondition_denial,
  negative_evaluation,
  conflicting_intentions,
};

inline const char* to_string(Major m) {
  switch (m) {
    case Major::acceptance: return "acceptance";
    case Major::rejection: return "rejection";
    case Major::echo: return "echo";
    case Major::unrelated: return "unrelated";
  }
  return "?";
}

inline const char* to_string(AcceptanceType a) {
  switch (a) {
    case AcceptanceType::prompt: return "prompt";
    case AcceptanceType::repetition: return "repetition";
    case AcceptanceType::paraphrase: return "paraphrase";
    case AcceptanceType::inference_explicit: return "inference-explicit";
    case AcceptanceType::implicit: return "implicit";
  }
  return "?";
}

inline const char* to_string(RejectionType r) {
  switch (r) {
    case RejectionType::denial: return "denial";
    case RejectionType::contradiction: return "contradiction";
    case RejectionType::implicit_denial: return "implicit-denial";
    case RejectionType::refusal: return "refusal";
    case RejectionType::implicature_rejection: return "implicature-rejection";
    case RejectionType::deny_belief_transfer: return "deny-belief-transfer";
    case RejectionType::inconsistent_past_belief: return "inconsistent-past-belief";
    case RejectionType::contradictory_authority: return "contradictory-authority";
    case RejectionType::negative_consequence: return "negative-consequence";
    case RejectionType::precondition_denial: return "precondition-denial";
    case RejectionType::negative_evaluation: return "negative-evaluation";
    case RejectionType::conflicting_intentions: return "conflicting-intentions";
  }
  return "?";
}

struct ResponseClassification {
  Major major = Major::unrelated;
  std::optional<AcceptanceType> acceptance;
  std::optional<RejectionType> rejection;
  std::set<std::string> confidence_cues;

  // Details the rule dispatch needs.
  std::optional<int> iru_antecedent;
  std::optional<Scale> scale;
  bool reversed_scale = false;  // u2 asserted the higher value
  std::optional<Proposition> authority_content;

  std::string subtype() const {
    if (acceptance) return to_string(*acceptance);
    if (rejection) return to_string(*rejection);
    return "";
  }
};

namespace detail {

inline bool is_iru_of(const UtteranceEvent& u2, const UtteranceEvent& u1,
                      const ScaleRegistry& registry, const AxiomSet& axioms) {
  if (!u2.lf) return false;
  std::vector<Proposition> premises = u1.cues.presuppositions;
  if (u1.lf && u1.act != SpeechAct::question) premises.push_back(*u1.lf);
  return !premises.empty() && derives(premises, *u2.lf, axioms, registry);
}

inline std::optional<Proposition> find_say(const Proposition& p) {
  if (p.is(Kind::say)) return p;
  if (p.is(Kind::atom)) return std::nullopt;
  for (const auto& m : p.members())
    if (auto s = find_say(m)) return s;
  return std::nullopt;
}

inline std::optional<Proposition> find_intend(const Proposition& p, const Symbol& agent) {
  if (p.is(Kind::intend) && p.agent() == agent) return p;
  if (p.is(Kind::atom)) return std::nullopt;
  for (const auto& m : p.members())
    if (auto s = find_intend(m, agent)) return s;
  return std::nullopt;
}

/// Current attitudes obtained by persisting u's past-time attitudes.
inline std::vector<Proposition> persisted(const UtteranceEvent& u) {
  std::vector<Proposition> out;
  if (u.lf) past_attitudes(*u.lf, u.speaker, out);
  return out;
}

inline std::vector<Proposition> persisted_beliefs(const UtteranceEvent& u) {
  std::vector<Proposition> out;
  for (const auto& p : persisted(u))
    if (p.is(Kind::bel)) out.push_back(p.body());
  return out;
}

inline bool jointly_inconsistent(std::vector<Proposition> ps, const AxiomSet& axioms,
                                 const ScaleRegistry& registry) {
  return Closure(ps, axioms, registry).contradictory();
}

struct ImplicatureMatch {
  Scale scale;
  bool reversed = false;
};

/// The implicature-rejection test: u2 substitutes for u1's focus on a
/// salient scale and the scalar inference preconditions hold. Also accepts
/// the reverse shape, where u2 asserts the higher value and so rejects the
/// implicature carried by u1 itself.
inline std::optional<ImplicatureMatch> implicature_match(const UtteranceEvent& u1,
                                                         const UtteranceEvent& u2,
                                                         const ScaleRegistry& registry) {
  if (!u1.lf || !u2.lf || u1.focus.empty() || u2.focus.empty()) return std::nullopt;
  auto fp = focal_pair(u1, u2);
  if (!fp) return std::nullopt;
  std::optional<Scale> scale;
  try {
    scale = salient_scale(fp->first, fp->second, registry, *u1.lf);
  } catch (const AmbiguousScaleError&) {
    return std::nullopt;
  }
  if (!scale) return std::nullopt;
  Proposition c1 = claim(u1), c2 = claim(u2);
  auto rel = substitution_of_focus(u1, u2, registry);
  if (rel == FocusRelation::substitutes_focal) {
    auto rank = rank_sentences(c2, c1, *scale);
    if ((rank == SentenceRank::higher || rank == SentenceRank::alternate) &&
        affirm(u2.speaker, Expression{c2}, Proposition::bel(u2.speaker, c2)))
      return ImplicatureMatch{*scale, false};
    return std::nullopt;
  }
  if (rel == FocusRelation::unrelated && rank_sentences(c1, c2, *scale) == SentenceRank::higher &&
      affirm(u1.speaker, Expression{c1}, Proposition::bel(u1.speaker, c1)))
    return ImplicatureMatch{*scale, true};
  return std::nullopt;
}

}  // namespace detail

/// Classifies u2 as a response to u1. Total: pairs outside the attitude
/// locus, or whose target neither asserts nor proposes, are unrelated.
inline ResponseClassification classify(const UtteranceEvent& u2, const UtteranceEvent& u1,
                                       const ScaleRegistry& registry, const AxiomSet& axioms) {
  ResponseClassification r;
  if (u2.contour == Contour::fall_rise) r.confidence_cues.insert("fall-rise");
  if (u2.tone == BoundaryTone::mid) r.confidence_cues.insert("final-mid");
  if (u2.cues.doubt_marker) r.confidence_cues.insert("doubt-marker");

  auto reject = [&](RejectionType t) {
    r.major = Major::rejection;
    r.rejection = t;
    return r;
  };
  auto accept = [&](AcceptanceType t) {
    r.major = Major::acceptance;
    r.acceptance = t;
    return r;
  };

  if (!attitude_locus(u2, u1).in_locus || !u1.asserts_or_proposes() || !u1.lf) return r;
  const bool proposal = u1.act == SpeechAct::proposal;
  const Proposition core = claim(u1);
  const bool iru = detail::is_iru_of(u2, u1, registry, axioms);
  if (iru) r.iru_antecedent = u1.index;

  if (iru && u2.tone == BoundaryTone::high) {
    r.major = Major::echo;
    return r;
  }

  if (u2.lf) {
    const Proposition& lf = *u2.lf;
    if (lf.is(Kind::neg)) {
      auto parts = conjuncts(core);
      if (lf.body() == core || std::find(parts.begin(), parts.end(), lf.body()) != parts.end())
        return reject(RejectionType::denial);
    }

    Proposition target = proposal ? Proposition::propose(u1.speaker, u1.addressee, core, u1.index)
                                  : *u1.lf;
    if (detail::jointly_inconsistent({lf, target}, axioms, registry))
      return reject(RejectionType::contradiction);

    if (!proposal && !u1.cues.presuppositions.empty()) {
      auto ps = u1.cues.presuppositions;
      ps.push_back(lf);
      if (detail::jointly_inconsistent(ps, axioms, registry))
        return reject(RejectionType::implicit_denial);
    }

    if (!proposal) {
      if (u2.cues.doubt_marker || u2.cues.evaluation == Polarity::negative)
        return reject(RejectionType::deny_belief_transfer);
      if (u2.cues.attitude_verb == AttitudeVerb::think && u2.cues.attitude_tense == Tense::past) {
        auto beliefs = detail::persisted_beliefs(u2);
        if (!beliefs.empty()) {
          beliefs.push_back(core);
          if (detail::jointly_inconsistent(beliefs, axioms, registry))
            return reject(RejectionType::inconsistent_past_belief);
        }
      }
      if (u2.cues.attribution_source && *u2.cues.attribution_source != u1.speaker) {
        if (auto say = detail::find_say(lf)) {
          if (detail::jointly_inconsistent({say->body(), core}, axioms, registry)) {
            r.authority_content = say->body();
            return reject(RejectionType::contradictory_authority);
          }
        }
      }
    } else {
      for (const auto& c : conjuncts(lf)) {
        if (c.is(Kind::neg) && c.body().is(Kind::intend) && c.body().agent() == u2.speaker &&
            !c.body().time() && c.body().body() == core)
          return reject(RejectionType::refusal);
      }
      if (u2.cues.goal_id &&
          detail::jointly_inconsistent({core, claim(u2)}, axioms, registry))
        return reject(RejectionType::negative_consequence);
      if (u2.cues.attitude_tense == Tense::past && !u1.cues.presuppositions.empty()) {
        auto beliefs = detail::persisted_beliefs(u2);
        if (!beliefs.empty()) {
          auto ps = u1.cues.presuppositions;
          ps.insert(ps.end(), beliefs.begin(), beliefs.end());
          if (detail::jointly_inconsistent(ps, axioms, registry))
            return reject(RejectionType::precondition_denial);
        }
      }
      if (u2.cues.evaluation == Polarity::negative)
        return reject(RejectionType::negative_evaluation);
      if (u2.cues.goal_id && u2.cues.goal_id == u1.cues.goal_id) {
        auto intent = detail::find_intend(lf, u2.speaker);
        if (intent && (intent->time() || !(intent->body() == core)))
          return reject(RejectionType::conflicting_intentions);
      }
    }

    if (auto m = detail::implicature_match(u1, u2, registry)) {
      r.scale = m->scale;
      r.reversed_scale = m->reversed;
      return reject(RejectionType::implicature_rejection);
    }
  }

  if (iru) {
    switch (iru_relation(u2, u1, registry, axioms)) {
      case IruRelation::repetition: return accept(AcceptanceType::repetition);
      case IruRelation::paraphrase: return accept(AcceptanceType::paraphrase);
      case IruRelation::inference: return accept(AcceptanceType::inference_explicit);
    }
  }
  if (u2.act == SpeechAct::prompt) return accept(AcceptanceType::prompt);
  if (u2.lf) return accept(AcceptanceType::implicit);
  return r;
}

/// The upgrade row for an acceptance response.
inline UpgradeKind acceptance_subtype_to_upgrade(const ResponseClassification& c) {
  if (c.major != Major::acceptance || !c.acceptance)
    throw std::invalid_argument("acceptance_subtype_to_upgrade: not an acceptance");
  switch (*c.acceptance) {
    case AcceptanceType::prompt: return UpgradeKind::prompt;
    case AcceptanceType::repetition: return UpgradeKind::repetition;
    case AcceptanceType::paraphrase: return UpgradeKind::paraphrase;
    case AcceptanceType::inference_explicit: return UpgradeKind::inference;
    case AcceptanceType::implicit: return UpgradeKind::implicit;
  }
  throw std::invalid_argument("acceptance_subtype_to_upgrade: unknown subtype");
}

}  // namespace cground
