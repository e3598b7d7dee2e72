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
/// Per-utterance update of a dialogue's common ground, with a trace of the
/// suppositions each utterance adds.

#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cground/classifier.hpp"
#include "cground/ground.hpp"

namespace cground {

struct TraceRow {
  int utterance = 0;
  int supposition = 0;
  std::string content;  // display label
  Endorsement endorsement = Endorsement::hypothesis;
  Rule rule = Rule::quality;
  std::string rule_detail;
};

inline const char* rule_display(Rule r) {
  switch (r) {
    case Rule::quality: return "Quality";
    case Rule::air: return "AIR";
    case Rule::siir: return "SIIR";
    case Rule::msis: return "MSIS";
    case Rule::belief_persistence: return "Belief Persistence";
    case Rule::intention_persistence: return "Intention Persistence";
    case Rule::transfer_denial: return "Transfer Denial";
    case Rule::upgrade: return "Upgrade";
    case Rule::denial: return "Denial";
    case Rule::denial_implicature: return "Denial Implicature";
    case Rule::deliberation: return "Deliberation";
    case Rule::authority_transfer: return "Authority Transfer";
  }
  return "?";
}

/// Dispatches the ground rule matching a classified response. Throws
/// RulePreconditionError if the classification does not license the rule.
inline void dispatch(CommonGround& g, const UtteranceEvent& u1, const UtteranceEvent& u2,
                     const ResponseClassification& c) {
  if (c.major == Major::acceptance) {
    upgrade_on_response(g, u1.index, acceptance_subtype_to_upgrade(c));
    return;
  }
  if (c.major != Major::rejection || !c.rejection) return;
  switch (*c.rejection) {
    case RejectionType::denial:
      denial_partial_acceptance(g, u1, u2);
      break;
    case RejectionType::contradiction:
    case RejectionType::implicit_denial:
      transfer_denial(g, u1, u2, Endorsement::linguistic);
      break;
    case RejectionType::deny_belief_transfer:
      transfer_denial(g, u1, u2, Endorsement::default_);
      break;
    case RejectionType::inconsistent_past_belief:
      persistence_apply(g, u2);
      break;
    case RejectionType::contradictory_authority:
      if (!c.authority_content)
        throw RulePreconditionError("authority_transfer: no reported content");
      authority_transfer(g, u2, *c.authority_content);
      break;
    case RejectionType::refusal:
      deliberation_reject(g, u1, u2, Endorsement::linguistic);
      break;
    case RejectionType::precondition_denial:
    case RejectionType::conflicting_intentions:
      if (u2.cues.attitude_tense) persistence_apply(g, u2);
      deliberation_reject(g, u1, u2, Endorsement::default_);
      break;
    case RejectionType::negative_consequence:
    case RejectionType::negative_evaluation:
      deliberation_reject(g, u1, u2, Endorsement::default_);
      break;
    case RejectionType::implicature_rejection: {
      if (!c.scale) throw RulePreconditionError("siir_apply: no salient scale");
      if (c.reversed_scale)
        siir_apply(g, u1, claim(u2), *c.scale, u2.index);
      else
        siir_apply(g, u1, u2, *c.scale);
      break;
    }
  }
}

/// One dialogue's state: ground, history, classifications and trace.
class Session {
 public:
  explicit Session(ScaleRegistry scales = ScaleRegistry::builtin(), AxiomSet axioms = {})
      : ground_(std::move(scales), std::move(axioms)) {}

  const CommonGround& ground() const { return ground_; }
  const std::vector<UtteranceEvent>& history() const { return history_; }
  const std::vector<TraceRow>& trace() const { return trace_; }
  const std::vector<std::pair<int, ResponseClassification>>& classifications() const {
    return classifications_;
  }

  /// Quality, then (for a response in the attitude locus) classification and
  /// the matching upgrade or rejection rules, then AIR, then defeat.
  std::optional<ResponseClassification> process(const UtteranceEvent& u) {
    if (!history_.empty() && u.index <= history_.back().index)
      throw std::invalid_argument("process_utterance: utterance U" + std::to_string(u.index) +
                                  " is out of order");
    const std::size_t first = ground_.suppositions().size();
    const std::size_t first_note = ground_.notes().size();
    std::optional<ResponseClassification> cls;
    try {
      quality_assert(ground_, u);
      if (!history_.empty()) {
        const auto& prev = history_.back();
        if (attitude_locus(u, prev).in_locus && prev.asserts_or_proposes()) {
          cls = classify(u, prev, ground_.scales(), ground_.axioms());
          dispatch(ground_, prev, u, *cls);
          classifications_.emplace_back(u.index, *cls);
        }
      }
      air_apply(ground_, u);
      ground_.resolve();
    } catch (...) {
      history_.push_back(u);
      emit(u, first, first_note);
      throw;
    }
    history_.push_back(u);
    emit(u, first, first_note);
    return cls;
  }

  /// Display label: contents an utterance put forward render as R(S,Uk).
  std::string label(const Proposition& p) const {
    for (const auto& h : history_)
      if (h.lf && h.asserts_or_proposes() && air_content(h) == p)
        return "R(S,U" + std::to_string(h.index) + ")";
    switch (p.kind()) {
      case Kind::neg: return "¬" + label(p.body());
      case Kind::bel: {
        std::string s = "Bel(" + p.agent() + "," + label(p.body());
        if (p.time()) s += "," + std::to_string(*p.time());
        return s + ")";
      }
      case Kind::intend: {
        std::string s = "Intend(" + p.agent() + "," + label(p.body());
        if (p.time()) s += "," + std::to_string(*p.time());
        return s + ")";
      }
      default: return p.str();
    }
  }

  const std::vector<std::string>& notes() const { return notes_; }

 private:
  void emit(const UtteranceEvent& u, std::size_t first, std::size_t first_note) {
    const auto& sups = ground_.suppositions();
    for (std::size_t i = first; i < sups.size(); ++i) {
      const auto& s = sups[i];
      TraceRow row;
      row.utterance = u.index;
      row.supposition = s.id;
      row.content = label(s.content);
      row.endorsement = s.endorsement;
      row.rule = s.rule;
      row.rule_detail = rule_display(s.rule);
      if (s.rule == Rule::siir) {
        if (const auto* scale = siir_scale(u)) row.rule_detail += ", " + scale_label(*scale);
      }
      trace_.push_back(std::move(row));
    }
    for (std::size_t i = first_note; i < ground_.notes().size(); ++i)
      notes_.push_back("U" + std::to_string(u.index) + ": " + ground_.notes()[i]);
  }

  const Scale* siir_scale(const UtteranceEvent& u) const {
    for (auto it = classifications_.rbegin(); it != classifications_.rend(); ++it)
      if (it->first == u.index && it->second.scale) return &*it->second.scale;
    return nullptr;
  }

  static std::string scale_label(const Scale& s) {
    if (s.kind() == ScaleKind::conjunctive) return "(P, P∧Q)";
    return s.id();
  }

  CommonGround ground_;
  std::vector<UtteranceEvent> history_;
  std::vector<TraceRow> trace_;
  std::vector<std::pair<int, ResponseClassification>> classifications_;
  std::vector<std::string> notes_;
};

/// Free-function form of Session::process.
inline std::optional<ResponseClassification> process_utterance(Session& s, const UtteranceEvent& u) {
  return s.process(u);
}

inline std::string trace_text(const std::vector<TraceRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows)
    out << "U" << r.utterance << "\t" << r.content << "\t" << to_string(r.endorsement) << "\t"
        << r.rule_detail << "\n";
  return out.str();
}

inline nlohmann::json trace_json(const std::vector<TraceRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"utterance", r.utterance},
                   {"supposition", r.supposition},
                   {"content", r.content},
                   {"endorsement", to_string(r.endorsement)},
                   {"rule", to_string(r.rule)},
                   {"rule_detail", r.rule_detail}});
  return out;
}

}  // namespace cground
