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
/// The defeasible common ground: endorsed suppositions, per-utterance
/// assumption sets, the inference rules that populate them, and
/// strength-based defeat.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cground/info_structure.hpp"
#include "cground/logic.hpp"
#include "cground/scales.hpp"
#include "cground/utterance.hpp"

namespace cground {

enum class Endorsement { hypothesis = 0, default_ = 1, linguistic = 2 };

inline const char* to_string(Endorsement e) {
  switch (e) {
    case Endorsement::hypothesis: return "hypothesis";
    case Endorsement::default_: return "default";
    case Endorsement::linguistic: return "linguistic";
  }
  return "?";
}

inline bool operator<(Endorsement a, Endorsement b) {
  return static_cast<int>(a) < static_cast<int>(b);
}
inline bool operator>(Endorsement a, Endorsement b) { return b < a; }
inline bool operator<=(Endorsement a, Endorsement b) { return !(b < a); }
inline bool operator>=(Endorsement a, Endorsement b) { return !(a < b); }

enum class Status { active, defeated, suspended };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::active: return "active";
    case Status::defeated: return "defeated";
    case Status::suspended: return "suspended";
  }
  return "?";
}

enum class Rule {
  quality,
  air,
  siir,
  msis,
  belief_persistence,
  intention_persistence,
  transfer_denial,
  upgrade,
  denial,
  denial_implicature,
  deliberation,
  authority_transfer,
};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::quality: return "quality";
    case Rule::air: return "air";
    case Rule::siir: return "siir";
    case Rule::msis: return "msis";
    case Rule::belief_persistence: return "belief-persistence";
    case Rule::intention_persistence: return "intention-persistence";
    case Rule::transfer_denial: return "transfer-denial";
    case Rule::upgrade: return "upgrade";
    case Rule::denial: return "denial";
    case Rule::denial_implicature: return "denial-implicature";
    case Rule::deliberation: return "deliberation";
    case Rule::authority_transfer: return "authority-transfer";
  }
  return "?";
}

enum class Assumption { attend, hear, realize, license, accept };

inline constexpr std::array<Assumption, 5> kAssumptions = {
    Assumption::attend, Assumption::hear, Assumption::realize, Assumption::license,
    Assumption::accept};

inline const char* to_string(Assumption a) {
  switch (a) {
    case Assumption::attend: return "attend";
    case Assumption::hear: return "hear";
    case Assumption::realize: return "realize";
    case Assumption::license: return "license";
    case Assumption::accept: return "accept";
  }
  return "?";
}

/// The assumptions underlying acceptance of one utterance by its addressee.
struct AssumptionSet {
  int utterance = 0;
  std::array<Endorsement, 5> level{Endorsement::hypothesis, Endorsement::hypothesis,
                                   Endorsement::hypothesis, Endorsement::hypothesis,
                                   Endorsement::hypothesis};

  Endorsement& operator[](Assumption a) { return level[static_cast<std::size_t>(a)]; }
  Endorsement operator[](Assumption a) const { return level[static_cast<std::size_t>(a)]; }
};

/// A supporting link: another supposition, or one assumption of an
/// utterance's assumption set.
struct SupportRef {
  enum class Kind { supposition, assumption } kind = Kind::supposition;
  int id = 0;  // supposition id, or utterance index for assumptions
  Assumption slot = Assumption::attend;

  static SupportRef of(int supposition) { return {Kind::supposition, supposition, {}}; }
  static SupportRef of(int utterance, Assumption a) { return {Kind::assumption, utterance, a}; }

  std::string str() const {
    if (kind == Kind::supposition) return "s" + std::to_string(id);
    return "u" + std::to_string(id) + "." + to_string(slot);
  }
};

struct Supposition {
  int id = 0;
  Proposition content;
  Endorsement endorsement = Endorsement::hypothesis;
  Endorsement ceiling = Endorsement::linguistic;  // strength of the rule itself
  std::set<Symbol> population;
  std::vector<SupportRef> support;
  Rule rule = Rule::quality;
  Status status = Status::active;
  int origin = 0;
  std::optional<int> defeater;
  // Mutually supposed content: each member of the population is taken to
  // believe it as well.
  bool shared = false;
};

/// Thrown when a rule is dispatched on an utterance that does not meet its
/// preconditions.
class RulePreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CommonGround {
 public:
  explicit CommonGround(ScaleRegistry scales = ScaleRegistry::builtin(), AxiomSet axioms = {})
      : scales_(std::move(scales)), axioms_(std::move(axioms)) {}

  const ScaleRegistry& scales() const { return scales_; }
  const AxiomSet& axioms() const { return axioms_; }

  const std::vector<Supposition>& suppositions() const { return suppositions_; }
  const Supposition& at(int id) const { return suppositions_.at(static_cast<std::size_t>(id)); }
  const std::map<int, AssumptionSet>& assumption_sets() const { return assumption_sets_; }
  const std::vector<std::pair<int, int>>& conflicts() const { return conflicts_; }
  const std::vector<std::string>& notes() const { return notes_; }

  /// Adds a supposition and returns its id. The endorsement is derived from
  /// the ceiling and the support set.
  int add(Proposition content, Endorsement ceiling, Rule rule, std::vector<SupportRef> support,
          std::set<Symbol> population, int origin, bool shared = false) {
    Supposition s{static_cast<int>(suppositions_.size()), std::move(content),
                  Endorsement::hypothesis, ceiling, std::move(population), std::move(support),
                  rule, Status::active, origin, std::nullopt, shared};
    s.endorsement = weakest_link(s);
    suppositions_.push_back(std::move(s));
    return suppositions_.back().id;
  }

  AssumptionSet& assumptions_for(int utterance) {
    auto it = assumption_sets_.find(utterance);
    if (it == assumption_sets_.end()) {
      AssumptionSet a;
      a.utterance = utterance;
      it = assumption_sets_.emplace(utterance, a).first;
    }
    return it->second;
  }

  bool has_assumptions(int utterance) const { return assumption_sets_.count(utterance) > 0; }

  Endorsement weakest_link(const Supposition& s) const {
    Endorsement e = s.ceiling;
    for (const auto& r : s.support) {
      Endorsement x = r.kind == SupportRef::Kind::supposition
                          ? suppositions_.at(static_cast<std::size_t>(r.id)).endorsement
                          : assumption_sets_.at(r.id)[r.slot];
      e = std::min(e, x);
    }
    return e;
  }

  /// Re-derives every endorsement from its support. Supports always point to
  /// earlier ids, so one ascending pass reaches the fixpoint.
  void recompute() {
    for (auto& s : suppositions_) s.endorsement = weakest_link(s);
  }

  /// The propositions a supposition commits its population to.
  std::vector<Proposition> expansion(const Supposition& s) const {
    std::vector<Proposition> out{s.content};
    if (s.shared)
      for (const auto& a : s.population) out.push_back(Proposition::bel(a, s.content));
    return out;
  }

  bool conflicting(const Supposition& a, const Supposition& b) const {
    auto pa = expansion(a), pb = expansion(b);
    pa.insert(pa.end(), pb.begin(), pb.end());
    return Closure(pa, axioms_, scales_).contradictory();
  }

  /// True if p is inconsistent with some active supposition endorsed at
  /// least `floor`.
  bool contradicted(const Proposition& p, Endorsement floor) const {
    for (const auto& s : suppositions_) {
      if (s.status != Status::active || s.endorsement < floor) continue;
      auto ps = expansion(s);
      ps.push_back(p);
      if (Closure(ps, axioms_, scales_).contradictory()) return true;
    }
    return false;
  }

  void note(std::string n) { notes_.push_back(std::move(n)); }

  /// Strength-based defeat, processed from the strongest level down. A
  /// supposition inconsistent with a surviving stronger one is defeated;
  /// conflicting pairs at the same level are both suspended. The result does
  /// not depend on id order.
  void resolve() {
    recompute();
    for (Endorsement level :
         {Endorsement::linguistic, Endorsement::default_, Endorsement::hypothesis}) {
      std::vector<int> tier;
      for (const auto& s : suppositions_)
        if (s.status == Status::active && s.endorsement == level) tier.push_back(s.id);
      std::vector<int> survivors;
      for (int id : tier) {
        auto& s = suppositions_[static_cast<std::size_t>(id)];
        std::optional<int> by;
        for (const auto& t : suppositions_) {
          if (t.status != Status::active || t.endorsement <= level) continue;
          if (!conflicting(s, t)) continue;
          const Supposition* cur = by ? &suppositions_[static_cast<std::size_t>(*by)] : nullptr;
          if (!cur || t.endorsement > cur->endorsement) by = t.id;
        }
        if (by) {
          s.status = Status::defeated;
          s.defeater = by;
          note("s" + std::to_string(id) + " defeated by s" + std::to_string(*by));
        } else {
          survivors.push_back(id);
        }
      }
      std::set<int> suspend;
      for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
          const auto& a = suppositions_[static_cast<std::size_t>(survivors[i])];
          const auto& b = suppositions_[static_cast<std::size_t>(survivors[j])];
          if (!conflicting(a, b)) continue;
          suspend.insert(a.id);
          suspend.insert(b.id);
          conflicts_.emplace_back(a.id, b.id);
          note("s" + std::to_string(a.id) + " and s" + std::to_string(b.id) +
               " suspended (equal strength)");
        }
      for (int id : suspend) suppositions_[static_cast<std::size_t>(id)].status = Status::suspended;
    }
  }

  nlohmann::json snapshot() const {
    nlohmann::json sups = nlohmann::json::array();
    for (const auto& s : suppositions_) {
      nlohmann::json support = nlohmann::json::array();
      for (const auto& r : s.support) support.push_back(r.str());
      nlohmann::json j{{"id", s.id},
                       {"content", s.content.str()},
                       {"endorsement", to_string(s.endorsement)},
                       {"ceiling", to_string(s.ceiling)},
                       {"rule", to_string(s.rule)},
                       {"status", to_string(s.status)},
                       {"origin", s.origin},
                       {"shared", s.shared},
                       {"population", s.population},
                       {"support", support}};
      j["defeater"] = s.defeater ? nlohmann::json(*s.defeater) : nlohmann::json(nullptr);
      sups.push_back(std::move(j));
    }
    nlohmann::json assumptions = nlohmann::json::array();
    for (const auto& [idx, a] : assumption_sets_) {
      nlohmann::json j{{"utterance", idx}};
      for (auto slot : kAssumptions) j[to_string(slot)] = to_string(a[slot]);
      assumptions.push_back(std::move(j));
    }
    nlohmann::json conflicts = nlohmann::json::array();
    for (const auto& [a, b] : conflicts_) conflicts.push_back({a, b});
    return {{"suppositions", sups}, {"assumptions", assumptions}, {"conflicts", conflicts}};
  }

 private:
  ScaleRegistry scales_;
  AxiomSet axioms_;
  std::vector<Supposition> suppositions_;
  std::map<int, AssumptionSet> assumption_sets_;
  std::vector<std::pair<int, int>> conflicts_;
  std::vector<std::string> notes_;
};

// ---------------------------------------------------------------------------
// Content helpers

/// What an utterance puts forward: a present-tense self-belief report
/// contributes its body, a denied one the denied body; otherwise the
/// logical form itself.
inline Proposition claim(const UtteranceEvent& u) {
  if (!u.lf) throw std::invalid_argument("claim: utterance has no logical form");
  const Proposition& p = *u.lf;
  if (p.is(Kind::bel) && p.agent() == u.speaker && !p.time()) return p.body();
  if (p.is(Kind::neg) && p.body().is(Kind::bel) && p.body().agent() == u.speaker &&
      !p.body().time())
    return Proposition::negate(p.body().body());
  return p;
}

/// The content AIR adds for u: the claim, or for a proposal the addressee's
/// intention to perform the proposed action.
inline Proposition air_content(const UtteranceEvent& u) {
  if (u.act == SpeechAct::proposal) return Proposition::intend(u.addressee, claim(u));
  return claim(u);
}

inline std::set<Symbol> population_of(const UtteranceEvent& u) { return {u.speaker, u.addressee}; }

/// Id of the quality supposition recorded for utterance `index`, if any.
inline std::optional<int> quality_of(const CommonGround& g, int index) {
  for (const auto& s : g.suppositions())
    if (s.rule == Rule::quality && s.origin == index) return s.id;
  return std::nullopt;
}

inline std::optional<int> air_of(const CommonGround& g, int index) {
  for (const auto& s : g.suppositions())
    if (s.rule == Rule::air && s.origin == index) return s.id;
  return std::nullopt;
}

namespace detail {

inline std::vector<SupportRef> quality_support(const CommonGround& g, const UtteranceEvent& u) {
  auto q = quality_of(g, u.index);
  if (!q) return {};
  return {SupportRef::of(*q)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rules

/// A speaker believes what they assert and intends what they propose.
inline std::optional<int> quality_assert(CommonGround& g, const UtteranceEvent& u) {
  if (!u.asserts_or_proposes() || !u.lf) return std::nullopt;
  Proposition c = u.act == SpeechAct::proposal ? Proposition::intend(u.speaker, claim(u))
                                               : Proposition::bel(u.speaker, claim(u));
  return g.add(c, Endorsement::linguistic, Rule::quality, {}, population_of(u), u.index);
}

/// Acceptance inference: the content becomes mutually supposed, supported
/// by every assumption of the utterance's (initially hypothetical) set.
inline std::optional<int> air_apply(CommonGround& g, const UtteranceEvent& u) {
  if (!u.asserts_or_proposes() || !u.lf) return std::nullopt;
  g.assumptions_for(u.index);
  std::vector<SupportRef> support;
  for (auto a : kAssumptions) support.push_back(SupportRef::of(u.index, a));
  return g.add(air_content(u), Endorsement::linguistic, Rule::air, std::move(support),
               population_of(u), u.index, /*shared=*/true);
}

struct SiirResult {
  std::optional<int> belief;   // ¬Bel(S, p_j)
  std::optional<int> content;  // ¬p_j
  std::string note;
};

/// Scalar implicature: having affirmed `u`, its speaker implicates not
/// believing the higher or alternate `p_j`, and by MSIS ¬p_j becomes
/// mutually supposed. Both steps are defaults and are blocked by contrary
/// default or linguistic suppositions (never by hypotheses). Precondition
/// failures leave the ground unchanged and explain why in the note.
inline SiirResult siir_apply(CommonGround& g, const UtteranceEvent& u, const Proposition& pj,
                             const Scale& scale, int origin) {
  SiirResult r;
  if (!u.lf) {
    r.note = "no implicature: utterance has no content";
    g.note(r.note);
    return r;
  }
  Proposition pi = claim(u);
  if (!affirm(u.speaker, Expression{pi}, Proposition::bel(u.speaker, pi))) {
    r.note = "no implicature: U" + std::to_string(u.index) + " does not affirm its content";
    g.note(r.note);
    return r;
  }
  auto rank = rank_sentences(pi, pj, scale);
  if (rank != SentenceRank::higher && rank != SentenceRank::alternate) {
    r.note = std::string("no implicature: ") + pj.str() + " is " + to_string(rank) +
             " on scale " + scale.id();
    g.note(r.note);
    return r;
  }
  Proposition not_bel = Proposition::negate(Proposition::bel(u.speaker, pj));
  Proposition not_pj = Proposition::negate(pj);
  if (g.contradicted(not_bel, Endorsement::default_) ||
      g.contradicted(not_pj, Endorsement::default_)) {
    r.note = "no implicature: " + not_bel.str() + " cancelled by context";
    g.note(r.note);
    return r;
  }
  r.belief = g.add(not_bel, Endorsement::default_, Rule::siir, detail::quality_support(g, u),
                   population_of(u), origin);
  r.content = g.add(not_pj, Endorsement::default_, Rule::msis, {SupportRef::of(*r.belief)},
                    population_of(u), origin);
  r.note = "implicature " + not_bel.str() + " on scale " + scale.id();
  return r;
}

/// The response form: u2 affirms a lower or alternate value than u1.
inline SiirResult siir_apply(CommonGround& g, const UtteranceEvent& u1, const UtteranceEvent& u2,
                             const Scale& scale) {
  if (!u1.lf) throw RulePreconditionError("siir_apply: first utterance has no content");
  return siir_apply(g, u2, claim(u1), scale, u2.index);
}

struct DenialResult {
  int denial = 0;
  std::optional<int> remainder;
};

/// u2 denies u1's content or one of its conjuncts. The denial is added at
/// linguistic strength and the undenied remainder as a default implicature
/// of partial acceptance.
inline DenialResult denial_partial_acceptance(CommonGround& g, const UtteranceEvent& u1,
                                              const UtteranceEvent& u2) {
  if (!u1.lf || !u2.lf || !u2.lf->is(Kind::neg))
    throw RulePreconditionError("denial_partial_acceptance: response is not a denial");
  Proposition core = claim(u1);
  Proposition denied = u2.lf->body();
  auto parts = conjuncts(core);
  std::vector<Proposition> rest;
  bool found = denied == core;
  for (const auto& c : parts) {
    if (c == denied) {
      found = true;
      continue;
    }
    rest.push_back(c);
  }
  if (!found)
    throw RulePreconditionError("denial_partial_acceptance: " + denied.str() +
                                " is not part of " + core.str());
  DenialResult r;
  r.denial = g.add(*u2.lf, Endorsement::linguistic, Rule::denial,
                   detail::quality_support(g, u2), population_of(u2), u2.index);
  if (denied == core || rest.empty()) {
    g.note("no partial acceptance: entire content denied");
    return r;
  }
  r.remainder = g.add(Proposition::conj(rest), Endorsement::default_, Rule::denial_implicature,
                      detail::quality_support(g, u2), population_of(u2), u2.index,
                      /*shared=*/true);
  return r;
}

/// ¬Bel(B, R(S,U1)) at the given strength: B's response shows B does not
/// take on the content of U1.
inline int transfer_denial(CommonGround& g, const UtteranceEvent& u1, const UtteranceEvent& u2,
                           Endorsement strength) {
  if (!u1.lf) throw RulePreconditionError("transfer_denial: first utterance has no content");
  return g.add(Proposition::negate(Proposition::bel(u2.speaker, air_content(u1))), strength,
               Rule::transfer_denial, detail::quality_support(g, u2), population_of(u2),
               u2.index);
}

namespace detail {

inline bool past_attitude(const Proposition& p, const Symbol& speaker) {
  return (p.is(Kind::bel) || p.is(Kind::intend)) && p.agent() == speaker && p.time();
}

inline Proposition current(const Proposition& p) {
  return p.is(Kind::bel) ? Proposition::bel(p.agent(), p.body())
                         : Proposition::intend(p.agent(), p.body(), p.degree());
}

/// Present-time versions of the speaker's past-time attitudes in p; a
/// negated past attitude persists negated.
inline void past_attitudes(const Proposition& p, const Symbol& speaker,
                           std::vector<Proposition>& out) {
  if (past_attitude(p, speaker)) {
    out.push_back(current(p));
    return;
  }
  if (p.is(Kind::neg) && past_attitude(p.body(), speaker)) {
    out.push_back(Proposition::negate(current(p.body())));
    return;
  }
  if (p.is(Kind::atom)) return;
  for (const auto& m : p.members()) past_attitudes(m, speaker, out);
}

}  // namespace detail

/// Belief and intention persistence: a past attitude reported by the
/// speaker is taken to hold now, as a default.
inline std::vector<int> persistence_apply(CommonGround& g, const UtteranceEvent& u) {
  if (!u.cues.attitude_tense)
    throw RulePreconditionError("persistence_apply: U" + std::to_string(u.index) +
                                " has no attitude tense annotation");
  std::vector<int> out;
  if (*u.cues.attitude_tense != Tense::past || !u.lf) return out;
  std::vector<Proposition> current;
  detail::past_attitudes(*u.lf, u.speaker, current);
  for (const auto& c : current) {
    const Proposition& att = c.is(Kind::neg) ? c.body() : c;
    Rule rule = att.is(Kind::bel) ? Rule::belief_persistence : Rule::intention_persistence;
    out.push_back(g.add(c, Endorsement::default_, rule, {}, population_of(u), u.index));
  }
  if (out.empty()) g.note("no persistence: U" + std::to_string(u.index) + " has no past attitude");
  return out;
}

/// A rejection by deliberation: the responder does not (or, for a refusal,
/// explicitly will not) adopt the proposed action.
inline int deliberation_reject(CommonGround& g, const UtteranceEvent& u1,
                               const UtteranceEvent& u2, Endorsement strength) {
  if (!u1.lf || u1.act != SpeechAct::proposal)
    throw RulePreconditionError("deliberation_reject: first utterance is not a proposal");
  return g.add(Proposition::negate(Proposition::intend(u2.speaker, claim(u1))), strength,
               Rule::deliberation, detail::quality_support(g, u2), population_of(u2), u2.index);
}

/// A reported authority's claim transfers to the responder as a default.
inline int authority_transfer(CommonGround& g, const UtteranceEvent& u2,
                              const Proposition& content) {
  return g.add(Proposition::bel(u2.speaker, content), Endorsement::default_,
               Rule::authority_transfer, {}, population_of(u2), u2.index);
}

enum class UpgradeKind { prompt, repetition, paraphrase, inference, implicit };

inline const char* to_string(UpgradeKind k) {
  switch (k) {
    case UpgradeKind::prompt: return "prompt";
    case UpgradeKind::repetition: return "repetition";
    case UpgradeKind::paraphrase: return "paraphrase";
    case UpgradeKind::inference: return "inference";
    case UpgradeKind::implicit: return "implicit";
  }
  return "?";
}

/// How many leading assumptions (attend, hear, realize, license) a response
/// type raises to linguistic.
inline int linguistic_prefix(UpgradeKind k) {
  switch (k) {
    case UpgradeKind::prompt: return 1;
    case UpgradeKind::repetition: return 2;
    case UpgradeKind::paraphrase: return 3;
    case UpgradeKind::inference: return 4;
    case UpgradeKind::implicit: return 0;
  }
  throw std::invalid_argument("unknown response class");
}

/// Acceptance evidence raises the prior utterance's assumptions; dependent
/// suppositions follow by weakest link.
inline void upgrade_on_response(CommonGround& g, int prior, UpgradeKind kind) {
  if (!g.has_assumptions(prior))
    throw RulePreconditionError("upgrade_on_response: U" + std::to_string(prior) +
                                " has no assumption set");
  auto& a = g.assumptions_for(prior);
  int n = linguistic_prefix(kind);
  for (int i = 0; i < 5; ++i) {
    Endorsement target = i < n ? Endorsement::linguistic : Endorsement::default_;
    a.level[static_cast<std::size_t>(i)] = std::max(a.level[static_cast<std::size_t>(i)], target);
  }
  g.recompute();
  g.note(std::string("upgrade U") + std::to_string(prior) + " by " + to_string(kind));
}

}  // namespace cground
