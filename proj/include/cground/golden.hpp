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
/// Reference tables the engine is expected to reproduce.

#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cground/engine.hpp"

namespace cground::golden {

/// Suppositions added by the two pajamas utterances, in trace order.
inline std::vector<TraceRow> rejection_implicatures() {
  auto row = [](int u, const char* c, Endorsement e, Rule r, const char* detail) {
    TraceRow t;
    t.utterance = u;
    t.content = c;
    t.endorsement = e;
    t.rule = r;
    t.rule_detail = detail;
    return t;
  };
  return {
      row(1, "Bel(A,R(S,U1))", Endorsement::linguistic, Rule::quality, "Quality"),
      row(1, "R(S,U1)", Endorsement::hypothesis, Rule::air, "AIR"),
      row(2, "Bel(B,R(S,U2))", Endorsement::linguistic, Rule::quality, "Quality"),
      row(2, "¬Bel(B,R(S,U1))", Endorsement::default_, Rule::siir, "SIIR, (P, P∧Q)"),
      row(2, "¬R(S,U1)", Endorsement::default_, Rule::msis, "MSIS"),
      row(2, "R(S,U2)", Endorsement::hypothesis, Rule::air, "AIR"),
  };
}

/// Assumption endorsements of U_i after each type of acceptance response.
inline std::map<UpgradeKind, AssumptionSet> upgrade_table() {
  std::map<UpgradeKind, AssumptionSet> out;
  auto set = [&](UpgradeKind k, int linguistic) {
    AssumptionSet a;
    for (int i = 0; i < 5; ++i)
      a.level[static_cast<std::size_t>(i)] =
          i < linguistic ? Endorsement::linguistic : Endorsement::default_;
    out[k] = a;
  };
  set(UpgradeKind::prompt, 1);
  set(UpgradeKind::repetition, 2);
  set(UpgradeKind::paraphrase, 3);
  set(UpgradeKind::inference, 4);
  set(UpgradeKind::implicit, 0);
  return out;
}

/// The assumptions of utterance 26 after the repetition in 27. License is
/// not listed in the reference table.
inline std::map<Assumption, Endorsement> delta_u26() {
  return {{Assumption::attend, Endorsement::linguistic},
          {Assumption::hear, Endorsement::linguistic},
          {Assumption::realize, Endorsement::default_},
          {Assumption::accept, Endorsement::default_}};
}

inline std::vector<std::string> names() {
  return {"rejection-implicatures", "upgrade-table", "delta-u26"};
}

inline std::string render(const std::string& name) {
  std::ostringstream out;
  if (name == "rejection-implicatures") return trace_text(rejection_implicatures());
  if (name == "upgrade-table") {
    for (const auto& [kind, a] : upgrade_table()) {
      out << to_string(kind);
      for (auto slot : kAssumptions) out << "\t" << to_string(slot) << "=" << to_string(a[slot]);
      out << "\n";
    }
    return out.str();
  }
  if (name == "delta-u26") {
    for (const auto& [slot, e] : delta_u26()) out << to_string(slot) << "\t" << to_string(e) << "\n";
    return out.str();
  }
  throw std::invalid_argument("unknown golden table '" + name + "'");
}

}  // namespace cground::golden
