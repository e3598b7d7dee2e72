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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cground/proposition.hpp"

namespace cground {

enum class SpeechAct { assertion, proposal, question, prompt };
enum class BoundaryTone { high, mid, low, unknown };
enum class Contour { fall_rise, downstep, sustained, plain, unknown };
enum class Metrical { weak, strong };
enum class AttitudeVerb { think, know, consider };
enum class Tense { past, present };
enum class Polarity { positive, negative };

/// Symbolic annotations an analyst attaches to an utterance.
struct Cues {
  std::optional<AttitudeVerb> attitude_verb;
  std::optional<Tense> attitude_tense;
  std::optional<Symbol> attribution_source;
  bool doubt_marker = false;
  std::optional<Polarity> evaluation;
  std::vector<Proposition> presuppositions;
  std::optional<std::string> goal_id;
};

struct UtteranceEvent {
  std::string dialogue_id;
  int index = 0;
  Symbol speaker;
  Symbol addressee;
  std::string text;
  std::optional<Proposition> lf;  // absent for contentless prompts
  SpeechAct act = SpeechAct::assertion;
  std::vector<Path> focus;
  std::vector<std::optional<Metrical>> metrical;  // parallel to focus, or empty
  BoundaryTone tone = BoundaryTone::unknown;
  Contour contour = Contour::unknown;
  Cues cues;

  bool asserts_or_proposes() const {
    return act == SpeechAct::assertion || act == SpeechAct::proposal;
  }
};

// String conversions shared by the transcript reader and the reports.

inline const char* to_string(SpeechAct a) {
  switch (a) {
    case SpeechAct::assertion: return "assert";
    case SpeechAct::proposal: return "propose";
    case SpeechAct::question: return "question";
    case SpeechAct::prompt: return "prompt";
  }
  return "?";
}

inline const char* to_string(BoundaryTone t) {
  switch (t) {
    case BoundaryTone::high: return "high";
    case BoundaryTone::mid: return "mid";
    case BoundaryTone::low: return "low";
    case BoundaryTone::unknown: return "unknown";
  }
  return "?";
}

inline const char* to_string(Contour c) {
  switch (c) {
    case Contour::fall_rise: return "fall-rise";
    case Contour::downstep: return "downstep";
    case Contour::sustained: return "sustained";
    case Contour::plain: return "plain";
    case Contour::unknown: return "unknown";
  }
  return "?";
}

inline const char* to_string(Metrical m) { return m == Metrical::weak ? "weak" : "strong"; }

inline const char* to_string(AttitudeVerb v) {
  switch (v) {
    case AttitudeVerb::think: return "think";
    case AttitudeVerb::know: return "know";
    case AttitudeVerb::consider: return "consider";
  }
  return "?";
}

inline const char* to_string(Tense t) { return t == Tense::past ? "past" : "present"; }
inline const char* to_string(Polarity p) { return p == Polarity::positive ? "positive" : "negative"; }

template <typename E>
E enum_from_string(const std::string& s);

#define CGROUND_ENUM_PARSER(E, ...)                                        \
  template <>                                                              \
  inline E enum_from_string<E>(const std::string& s) {                     \
    for (E v : {__VA_ARGS__})                                              \
      if (s == to_string(v)) return v;                                     \
    throw std::invalid_argument("bad " #E " value '" + s + "'");           \
  }

CGROUND_ENUM_PARSER(SpeechAct, SpeechAct::assertion, SpeechAct::proposal,
                    SpeechAct::question, SpeechAct::prompt)
CGROUND_ENUM_PARSER(BoundaryTone, BoundaryTone::high, BoundaryTone::mid,
                    BoundaryTone::low, BoundaryTone::unknown)
CGROUND_ENUM_PARSER(Contour, Contour::fall_rise, Contour::downstep, Contour::sustained,
                    Contour::plain, Contour::unknown)
CGROUND_ENUM_PARSER(Metrical, Metrical::weak, Metrical::strong)
CGROUND_ENUM_PARSER(AttitudeVerb, AttitudeVerb::think, AttitudeVerb::know,
                    AttitudeVerb::consider)
CGROUND_ENUM_PARSER(Tense, Tense::past, Tense::present)
CGROUND_ENUM_PARSER(Polarity, Polarity::positive, Polarity::negative)

#undef CGROUND_ENUM_PARSER

}  // namespace cground
