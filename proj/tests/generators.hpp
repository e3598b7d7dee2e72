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


// Random inputs shared by the property tests and the acceptance runner.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "cground/cground.hpp"

namespace cground::testgen {

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[rng() % v.size()];
}

inline bool chance(std::mt19937& rng, int percent) { return static_cast<int>(rng() % 100) < percent; }

inline Endorsement random_endorsement(std::mt19937& rng) {
  return static_cast<Endorsement>(rng() % 3);
}

struct CancellationCase {
  CommonGround ground;
  UtteranceEvent utterance;
  Proposition pj;
  Scale scale;
  bool blocking_expected = false;
  std::string describe;
};

/// A response affirming a lower or alternate scalar value, against a context
/// of random suppositions. Some contradict the implicature (the content p_j,
/// the speaker's belief in it, or p_j as shared content); the rest are
/// consistent with it.
inline CancellationCase cancellation_case(std::mt19937& rng) {
  const int n = 2 + static_cast<int>(rng() % 3);
  std::vector<std::string> items;
  for (int i = 0; i < n; ++i) items.push_back("v" + std::to_string(i));
  const bool ordered = chance(rng, 60);
  Scale scale = ordered ? Scale::chain("s", ScaleKind::entailment, items)
                        : Scale::antichain("s", ScaleKind::ad_hoc, items);
  // In a chain items[0] is highest: u takes a lower item, p_j a higher one.
  std::size_t lo = 1 + rng() % static_cast<std::size_t>(n - 1);
  std::size_t hi = ordered ? rng() % lo : (lo + 1 + rng() % static_cast<std::size_t>(n - 1)) % n;
  const std::string pred = chance(rng, 50) ? "rate" : "grade";

  CancellationCase c{CommonGround(ScaleRegistry{}), {}, Proposition::atom(pred, {"x", items[hi]}),
                     scale, false, ""};
  c.utterance.index = 2;
  c.utterance.speaker = "B";
  c.utterance.addressee = "A";
  c.utterance.lf = Proposition::atom(pred, {"x", items[lo]});
  if (chance(rng, 70)) quality_assert(c.ground, c.utterance);

  const Proposition& pj = c.pj;
  for (int k = 0, m = static_cast<int>(rng() % 5); k < m; ++k) {
    Endorsement e = random_endorsement(rng);
    bool blocking = false;
    bool shared = false;
    Proposition p = pj;
    switch (rng() % 9) {
      case 0: blocking = true; break;
      case 1: p = Proposition::bel("B", pj); blocking = true; break;
      case 2: shared = true; blocking = true; break;
      case 3: p = Proposition::negate(pj); break;
      case 4: p = Proposition::bel("A", pj); break;
      case 5: p = Proposition::bel("B", pj, 0); break;
      case 6: p = Proposition::negate(Proposition::bel("B", pj)); break;
      case 7: p = Proposition::atom("weather", {"fine"}); break;
      default: p = Proposition::atom(pred, {"y", items[hi]}); break;
    }
    c.ground.add(p, e, Rule::air, {}, {"A", "B"}, 1, shared);
    if (blocking && e >= Endorsement::default_) c.blocking_expected = true;
    c.describe += std::string(" ") + (shared ? "shared " : "") + p.str() + "@" + to_string(e);
  }
  return c;
}

struct SupSpec {
  Proposition content;
  Endorsement ceiling;
  bool shared;
};

inline Proposition random_literal(std::mt19937& rng) {
  static const std::vector<Proposition> pool{
      parse_lf("(p x)"), parse_lf("(q x)"), parse_lf("(r x)"),
      parse_lf("(bel A (p x))"), parse_lf("(bel B (q x))")};
  Proposition p = pick(rng, pool);
  return chance(rng, 40) ? Proposition::negate(p) : p;
}

inline std::vector<SupSpec> random_suppositions(std::mt19937& rng) {
  std::vector<SupSpec> out;
  for (int i = 0, n = 2 + static_cast<int>(rng() % 7); i < n; ++i) {
    Proposition c = random_literal(rng);
    if (chance(rng, 15)) c = Proposition::conj({c, random_literal(rng)});
    out.push_back({c, random_endorsement(rng), chance(rng, 30)});
  }
  return out;
}

inline Path random_focus(std::mt19937& rng, const Proposition& lf) {
  if (lf.is(Kind::conj)) {
    Path p{static_cast<int>(rng() % lf.members().size())};
    if (chance(rng, 30) && lf.members()[static_cast<std::size_t>(p[0])].is(Kind::atom)) {
      const auto& a = lf.members()[static_cast<std::size_t>(p[0])];
      p.push_back(static_cast<int>(rng() % (a.args().size() + 1)));
    }
    return p;
  }
  if (lf.is(Kind::atom) && !lf.args().empty() && chance(rng, 60))
    return {static_cast<int>(rng() % (lf.args().size() + 1))};
  return {};
}

inline Proposition random_content(std::mt19937& rng, const Symbol& speaker) {
  static const std::vector<Proposition> atoms{
      parse_lf("(p x)"),          parse_lf("(q x)"),          parse_lf("(r x)"),
      parse_lf("(like she it)"),  parse_lf("(love she it)"),  parse_lf("(dont-mind she it)"),
      parse_lf("(in a-man yard)"), parse_lf("(in something yard)")};
  Proposition a = pick(rng, atoms);
  switch (rng() % 6) {
    case 0: return Proposition::negate(a);
    case 1: return Proposition::conj({a, pick(rng, atoms)});
    case 2: return Proposition::bel(speaker, a, chance(rng, 50) ? std::optional<int>(0) : std::nullopt);
    default: return a;
  }
}

/// A short random dialogue exercising every speech act and cue.
inline Transcript random_dialogue(std::mt19937& rng, int serial) {
  static const std::vector<Proposition> actions{
      parse_lf("(buy we apples)"), parse_lf("(buy we bananas)"), parse_lf("(buy we oranges)")};
  Transcript t;
  t.dialogue_id = "generated-" + std::to_string(serial);
  t.participants = {"A", "B"};
  if (chance(rng, 50)) t.axioms.push_back({parse_lf("(q x)"), parse_lf("(p x)")});
  if (chance(rng, 30)) t.axioms.push_back({parse_lf("(r x)"), parse_lf("(buy we apples)")});
  Symbol speaker = "A";
  for (int i = 0, n = 3 + static_cast<int>(rng() % 6); i < n; ++i) {
    UtteranceEvent u;
    u.dialogue_id = t.dialogue_id;
    u.index = i + 1;
    if (i > 0 && chance(rng, 75)) speaker = speaker == "A" ? "B" : "A";
    u.speaker = speaker;
    u.addressee = speaker == "A" ? "B" : "A";
    u.text = "generated";
    unsigned act = rng() % 20;
    if (act < 10) {
      u.act = SpeechAct::assertion;
      u.lf = random_content(rng, u.speaker);
    } else if (act < 14) {
      u.act = SpeechAct::proposal;
      u.lf = pick(rng, actions);
    } else if (act < 17) {
      u.act = SpeechAct::question;
      u.lf = random_content(rng, u.speaker);
    } else {
      u.act = SpeechAct::prompt;
    }
    if (u.act == SpeechAct::assertion && chance(rng, 10))
      u.lf = Proposition::negate(Proposition::intend(u.speaker, pick(rng, actions)));
    if (u.act == SpeechAct::assertion && chance(rng, 8)) {
      u.lf = Proposition::say("C", u.speaker, random_content(rng, "C"), u.index);
      u.cues.attribution_source = "C";
    }
    if (u.lf && chance(rng, 50)) u.focus.push_back(random_focus(rng, *u.lf));
    u.tone = static_cast<BoundaryTone>(rng() % 4);
    u.contour = static_cast<Contour>(rng() % 5);
    if (chance(rng, 30)) u.cues.attitude_tense = chance(rng, 60) ? Tense::past : Tense::present;
    if (chance(rng, 20)) u.cues.attitude_verb = static_cast<AttitudeVerb>(rng() % 3);
    u.cues.doubt_marker = chance(rng, 10);
    if (chance(rng, 10)) u.cues.evaluation = Polarity::negative;
    if (chance(rng, 25)) u.cues.goal_id = "g";
    if (chance(rng, 10)) u.cues.presuppositions.push_back(random_content(rng, u.speaker));
    t.utterances.push_back(std::move(u));
  }
  return t;
}

}  // namespace cground::testgen
