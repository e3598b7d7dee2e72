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
/// JSON transcripts: one dialogue per file.
///
/// Top level: `dialogue_id`, `participants`, `utterances`, and optionally
/// `first_index` (default 1), `source`, `scales` and `axioms`. Each
/// utterance carries `index`, `speaker`, `addressee`, `text`, `speech_act`,
/// and optionally `lf`, `focus`, `metrical_labels`, `boundary_tone`,
/// `contour`, `cues` and `gold`.

#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cground/classifier.hpp"
#include "cground/engine.hpp"
#include "cground/scales.hpp"
#include "cground/utterance.hpp"

namespace cground {

struct GoldLabel {
  Major major = Major::unrelated;
  std::string subtype;
};

struct Transcript {
  std::string dialogue_id;
  std::vector<Symbol> participants;
  int first_index = 1;
  std::string source;
  std::vector<Scale> scales;
  AxiomSet axioms;
  std::vector<UtteranceEvent> utterances;
  std::map<int, GoldLabel> gold;
};

class TranscriptError : public std::runtime_error {
 public:
  TranscriptError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline Major major_from_string(const std::string& s) {
  for (Major m : {Major::acceptance, Major::rejection, Major::echo, Major::unrelated})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("bad major class '" + s + "'");
}

inline bool valid_subtype(Major m, const std::string& s) {
  if (m == Major::acceptance) {
    for (auto a : {AcceptanceType::prompt, AcceptanceType::repetition, AcceptanceType::paraphrase,
                   AcceptanceType::inference_explicit, AcceptanceType::implicit})
      if (s == to_string(a)) return true;
    return false;
  }
  if (m == Major::rejection) {
    for (int i = 0; i <= static_cast<int>(RejectionType::conflicting_intentions); ++i)
      if (s == to_string(static_cast<RejectionType>(i))) return true;
    return false;
  }
  return s.empty();
}

namespace detail {

using nlohmann::json;

class Reader {
 public:
  Reader(const json& j, std::string where) : j_(j), where_(std::move(where)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw TranscriptError(where_ + (field.empty() ? "" : "/" + field), what);
  }

  void only(std::initializer_list<const char*> keys) const {
    if (!j_.is_object()) fail("", "expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j_.items())
      if (!allowed.count(k)) fail(k, "unknown field");
  }

  bool has(const char* k) const { return j_.contains(k) && !j_.at(k).is_null(); }

  const json& at(const char* k) const {
    if (!has(k)) fail(k, "missing required field");
    return j_.at(k);
  }

  std::string str(const char* k) const {
    const auto& v = at(k);
    if (!v.is_string()) fail(k, "expected a string");
    return v.get<std::string>();
  }

  int integer(const char* k) const {
    const auto& v = at(k);
    if (!v.is_number_integer()) fail(k, "expected an integer");
    return v.get<int>();
  }

  bool boolean(const char* k) const {
    const auto& v = at(k);
    if (!v.is_boolean()) fail(k, "expected a boolean");
    return v.get<bool>();
  }

  const json& array(const char* k) const {
    const auto& v = at(k);
    if (!v.is_array()) fail(k, "expected an array");
    return v;
  }

  Proposition lf(const char* k) const { return lf_text(str(k), k); }

  Proposition lf_text(const std::string& text, const std::string& field) const {
    try {
      return parse_lf(text);
    } catch (const ParseError& e) {
      fail(field, std::string("logical form: ") + e.what());
    }
  }

  template <typename E>
  E enumerated(const char* k) const {
    try {
      return enum_from_string<E>(str(k));
    } catch (const std::invalid_argument& e) {
      fail(k, e.what());
    }
  }

  std::string sub(const std::string& field) const { return where_ + "/" + field; }

 private:
  const json& j_;
  std::string where_;
};

inline Cues read_cues(const json& j, const std::string& where) {
  Reader r(j, where);
  r.only({"attitude_verb_class", "attitude_verb_tense", "attribution_source", "doubt_marker",
          "evaluation_polarity", "presuppositions", "goal_id"});
  Cues c;
  if (r.has("attitude_verb_class")) c.attitude_verb = r.enumerated<AttitudeVerb>("attitude_verb_class");
  if (r.has("attitude_verb_tense")) c.attitude_tense = r.enumerated<Tense>("attitude_verb_tense");
  if (r.has("attribution_source")) c.attribution_source = r.str("attribution_source");
  if (r.has("doubt_marker")) c.doubt_marker = r.boolean("doubt_marker");
  if (r.has("evaluation_polarity")) c.evaluation = r.enumerated<Polarity>("evaluation_polarity");
  if (r.has("presuppositions")) {
    const auto& ps = r.array("presuppositions");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::string field = "presuppositions/" + std::to_string(i);
      if (!ps[i].is_string()) r.fail(field, "expected a string");
      c.presuppositions.push_back(r.lf_text(ps[i].get<std::string>(), field));
    }
  }
  if (r.has("goal_id")) c.goal_id = r.str("goal_id");
  return c;
}

inline UtteranceEvent read_utterance(const json& j, const std::string& where,
                                     const std::string& dialogue, std::optional<GoldLabel>& gold) {
  Reader r(j, where);
  r.only({"index", "speaker", "addressee", "text", "lf", "speech_act", "focus",
          "metrical_labels", "boundary_tone", "contour", "cues", "gold"});
  UtteranceEvent u;
  u.dialogue_id = dialogue;
  u.index = r.integer("index");
  u.speaker = r.str("speaker");
  u.addressee = r.str("addressee");
  u.text = r.str("text");
  u.act = r.enumerated<SpeechAct>("speech_act");
  if (r.has("lf")) u.lf = r.lf("lf");
  if (r.has("focus")) {
    const auto& fs = r.array("focus");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::string field = "focus/" + std::to_string(i);
      if (!fs[i].is_array()) r.fail(field, "expected an array of integers");
      Path p;
      for (const auto& step : fs[i]) {
        if (!step.is_number_integer()) r.fail(field, "expected an array of integers");
        p.push_back(step.get<int>());
      }
      if (!u.lf) r.fail(field, "focus given without a logical form");
      if (!path_resolves(*u.lf, p)) r.fail(field, "focus path does not resolve");
      u.focus.push_back(std::move(p));
    }
  }
  if (r.has("metrical_labels")) {
    const auto& ms = r.array("metrical_labels");
    if (ms.size() != u.focus.size()) r.fail("metrical_labels", "length differs from focus");
    for (const auto& m : ms) {
      if (m.is_null()) {
        u.metrical.emplace_back();
      } else if (m.is_string()) {
        try {
          u.metrical.emplace_back(enum_from_string<Metrical>(m.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          r.fail("metrical_labels", e.what());
        }
      } else {
        r.fail("metrical_labels", "expected strings or nulls");
      }
    }
  }
  if (r.has("boundary_tone")) u.tone = r.enumerated<BoundaryTone>("boundary_tone");
  if (r.has("contour")) u.contour = r.enumerated<Contour>("contour");
  if (r.has("cues")) u.cues = read_cues(r.at("cues"), r.sub("cues"));
  if (u.asserts_or_proposes() && !u.lf) r.fail("lf", "assertions and proposals need a logical form");
  if (r.has("gold")) {
    Reader g(r.at("gold"), r.sub("gold"));
    g.only({"major", "subtype"});
    GoldLabel label;
    try {
      label.major = major_from_string(g.str("major"));
    } catch (const std::invalid_argument& e) {
      g.fail("major", e.what());
    }
    if (g.has("subtype")) label.subtype = g.str("subtype");
    if (!valid_subtype(label.major, label.subtype))
      g.fail("subtype", "'" + label.subtype + "' does not fit major class");
    gold = label;
  }
  return u;
}

}  // namespace detail

inline Transcript transcript_from_json(const nlohmann::json& j, const std::string& where = "") {
  detail::Reader r(j, where);
  r.only({"dialogue_id", "participants", "first_index", "source", "scales", "axioms",
          "utterances"});
  Transcript t;
  t.dialogue_id = r.str("dialogue_id");
  for (const auto& p : r.array("participants")) {
    if (!p.is_string()) r.fail("participants", "expected strings");
    t.participants.push_back(p.get<std::string>());
  }
  if (r.has("first_index")) t.first_index = r.integer("first_index");
  if (t.first_index < 1) r.fail("first_index", "must be >= 1");
  if (r.has("source")) t.source = r.str("source");
  if (r.has("scales")) {
    const auto& ss = r.array("scales");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      try {
        t.scales.push_back(scale_from_json(ss[i]));
      } catch (const std::exception& e) {
        r.fail("scales/" + std::to_string(i), e.what());
      }
    }
  }
  if (r.has("axioms")) {
    const auto& as = r.array("axioms");
    for (std::size_t i = 0; i < as.size(); ++i) {
      std::string field = "axioms/" + std::to_string(i);
      detail::Reader a(as[i], r.sub(field));
      a.only({"antecedent", "excludes"});
      t.axioms.push_back({a.lf("antecedent"), a.lf("excludes")});
    }
  }
  const auto& us = r.array("utterances");
  if (us.empty()) r.fail("utterances", "empty turn list");
  std::set<Symbol> people(t.participants.begin(), t.participants.end());
  for (std::size_t i = 0; i < us.size(); ++i) {
    std::string field = "utterances/" + std::to_string(i);
    std::optional<GoldLabel> gold;
    auto u = detail::read_utterance(us[i], r.sub(field), t.dialogue_id, gold);
    if (u.index != t.first_index + static_cast<int>(i))
      r.fail(field + "/index", "indices must be contiguous from " + std::to_string(t.first_index));
    if (!people.count(u.speaker)) r.fail(field + "/speaker", "not a participant");
    if (!people.count(u.addressee)) r.fail(field + "/addressee", "not a participant");
    if (gold) t.gold[u.index] = *gold;
    t.utterances.push_back(std::move(u));
  }
  return t;
}

inline Transcript parse_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw TranscriptError(path, e.what());
  }
  return transcript_from_json(j, path);
}

inline nlohmann::json transcript_to_json(const Transcript& t) {
  using nlohmann::json;
  json out{{"dialogue_id", t.dialogue_id}, {"participants", t.participants}};
  if (t.first_index != 1) out["first_index"] = t.first_index;
  if (!t.source.empty()) out["source"] = t.source;
  if (!t.scales.empty()) {
    json ss = json::array();
    for (const auto& s : t.scales) ss.push_back(scale_to_json(s));
    out["scales"] = ss;
  }
  if (!t.axioms.empty()) {
    json as = json::array();
    for (const auto& a : t.axioms)
      as.push_back({{"antecedent", a.antecedent.str()}, {"excludes", a.excluded.str()}});
    out["axioms"] = as;
  }
  json us = json::array();
  for (const auto& u : t.utterances) {
    json j{{"index", u.index},
           {"speaker", u.speaker},
           {"addressee", u.addressee},
           {"text", u.text},
           {"speech_act", to_string(u.act)}};
    if (u.lf) j["lf"] = u.lf->str();
    if (!u.focus.empty()) j["focus"] = u.focus;
    if (!u.metrical.empty()) {
      json ms = json::array();
      for (const auto& m : u.metrical) ms.push_back(m ? json(to_string(*m)) : json(nullptr));
      j["metrical_labels"] = ms;
    }
    if (u.tone != BoundaryTone::unknown) j["boundary_tone"] = to_string(u.tone);
    if (u.contour != Contour::unknown) j["contour"] = to_string(u.contour);
    json c = json::object();
    const auto& cues = u.cues;
    if (cues.attitude_verb) c["attitude_verb_class"] = to_string(*cues.attitude_verb);
    if (cues.attitude_tense) c["attitude_verb_tense"] = to_string(*cues.attitude_tense);
    if (cues.attribution_source) c["attribution_source"] = *cues.attribution_source;
    if (cues.doubt_marker) c["doubt_marker"] = true;
    if (cues.evaluation) c["evaluation_polarity"] = to_string(*cues.evaluation);
    if (!cues.presuppositions.empty()) {
      json ps = json::array();
      for (const auto& p : cues.presuppositions) ps.push_back(p.str());
      c["presuppositions"] = ps;
    }
    if (cues.goal_id) c["goal_id"] = *cues.goal_id;
    if (!c.empty()) j["cues"] = c;
    if (auto it = t.gold.find(u.index); it != t.gold.end()) {
      json g{{"major", to_string(it->second.major)}};
      if (!it->second.subtype.empty()) g["subtype"] = it->second.subtype;
      j["gold"] = g;
    }
    us.push_back(std::move(j));
  }
  out["utterances"] = us;
  return out;
}

/// The base registry extended with the transcript's inline scales.
inline ScaleRegistry registry_for(const Transcript& t, ScaleRegistry base) {
  for (const auto& s : t.scales) base.add(s);
  return base;
}

struct GoldCheck {
  int index = 0;
  GoldLabel expected;
  std::string got_major;
  std::string got_subtype;
  bool match = false;
};

struct Analysis {
  Session session;
  std::vector<GoldCheck> checks;
  bool all_match() const {
    for (const auto& c : checks)
      if (!c.match) return false;
    return true;
  }
};

/// Runs a whole transcript through a fresh session and compares the
/// classifications with any gold labels.
inline Analysis analyze_transcript(const Transcript& t, const ScaleRegistry& base) {
  Analysis a{Session(registry_for(t, base), t.axioms), {}};
  std::map<int, ResponseClassification> got;
  for (const auto& u : t.utterances)
    if (auto c = a.session.process(u)) got[u.index] = *c;
  for (const auto& [index, gold] : t.gold) {
    GoldCheck c{index, gold, "unrelated", "", false};
    if (auto it = got.find(index); it != got.end()) {
      c.got_major = to_string(it->second.major);
      c.got_subtype = it->second.subtype();
    }
    c.match = c.got_major == to_string(gold.major) && c.got_subtype == gold.subtype;
    a.checks.push_back(std::move(c));
  }
  return a;
}

}  // namespace cground
