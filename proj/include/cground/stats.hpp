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
/// IRU distribution counts over a transcript corpus and 2x2 chi-square.

#pragma once

#include <algorithm>
#include <array>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cground/info_structure.hpp"
#include "cground/transcript.hpp"

namespace cground {

struct ContingencyTable {
  std::array<std::array<long, 2>, 2> cells{};
  std::array<std::string, 2> rows{"r0", "r1"};
  std::array<std::string, 2> cols{"c0", "c1"};
};

/// Pearson chi-square without continuity correction (df = 1).
inline double chi_square(const ContingencyTable& t) {
  std::array<double, 2> row{}, col{};
  double n = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long c = t.cells[i][j];
      if (c < 0) throw std::invalid_argument("chi_square: negative cell");
      row[i] += c;
      col[j] += c;
      n += c;
    }
  for (int k = 0; k < 2; ++k)
    if (row[k] == 0 || col[k] == 0) throw std::invalid_argument("chi_square: zero marginal");
  double x = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double e = row[i] * col[j] / n;
      double d = t.cells[i][j] - e;
      x += d * d / e;
    }
  return x;
}

/// Row 0 counts attitude IRUs (adjacent to an antecedent said by the other
/// speaker), row 1 all other IRUs.
struct IruCounts {
  std::array<std::array<int, 3>, 2> relation{};  // repetition, paraphrase, inference
  std::array<std::array<int, 4>, 2> tone{};      // high, mid, low, unknown

  IruCounts& operator+=(const IruCounts& o) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 3; ++c) relation[r][c] += o.relation[r][c];
      for (int c = 0; c < 4; ++c) tone[r][c] += o.tone[r][c];
    }
    return *this;
  }

  bool operator==(const IruCounts& o) const {
    return relation == o.relation && tone == o.tone;
  }

  int total(int row) const {
    int n = 0;
    for (int c : relation[row]) n += c;
    return n;
  }
};

inline IruCounts count_irus(const Transcript& t, const ScaleRegistry& base) {
  ScaleRegistry registry = registry_for(t, base);
  IruCounts out;
  for (std::size_t i = 0; i < t.utterances.size(); ++i) {
    const auto& u = t.utterances[i];
    std::vector<UtteranceEvent> history(t.utterances.begin(),
                                        t.utterances.begin() + static_cast<long>(i));
    auto ant = detect_iru(u, history, registry, t.axioms);
    if (!ant) continue;
    const auto& antecedent = t.utterances[static_cast<std::size_t>(*ant - t.first_index)];
    bool attitude = i > 0 && *ant == history.back().index && history.back().speaker != u.speaker;
    int row = attitude ? 0 : 1;
    out.relation[row][static_cast<int>(iru_relation(u, antecedent, registry, t.axioms))]++;
    out.tone[row][static_cast<int>(u.tone)]++;
  }
  return out;
}

enum class Grouping { mid_vs_low, high_vs_rest };

inline Grouping grouping_from_string(const std::string& s) {
  if (s == "mid-vs-low") return Grouping::mid_vs_low;
  if (s == "high-vs-rest") return Grouping::high_vs_rest;
  throw std::invalid_argument("unknown grouping '" + s + "'");
}

inline const char* to_string(Grouping g) {
  return g == Grouping::mid_vs_low ? "mid-vs-low" : "high-vs-rest";
}

/// Tone table for a grouping. Unknown tones are left out; "rest" is mid
/// plus low.
inline ContingencyTable tone_table(const IruCounts& c, Grouping g) {
  ContingencyTable t;
  t.cols = {"attitude", "non-attitude"};
  for (int r = 0; r < 2; ++r) {
    const auto& tone = c.tone[r];
    if (g == Grouping::mid_vs_low) {
      t.cells[0][r] = tone[1];
      t.cells[1][r] = tone[2];
    } else {
      t.cells[0][r] = tone[0];
      t.cells[1][r] = tone[1] + tone[2];
    }
  }
  t.rows = g == Grouping::mid_vs_low ? std::array<std::string, 2>{"mid", "low"}
                                     : std::array<std::string, 2>{"high", "mid+low"};
  return t;
}

struct CorpusStats {
  std::vector<std::pair<std::string, IruCounts>> dialogues;  // sorted by file name
  IruCounts total;
};

inline CorpusStats corpus_stats(const std::string& dir, const ScaleRegistry& base) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  if (files.empty()) throw std::runtime_error("empty corpus: " + dir);
  std::sort(files.begin(), files.end());
  CorpusStats s;
  for (const auto& f : files) {
    auto t = parse_transcript(f.string());
    auto c = count_irus(t, base);
    s.total += c;
    s.dialogues.emplace_back(f.filename().string(), c);
  }
  return s;
}

inline std::string stats_text(const CorpusStats& s, Grouping g) {
  std::ostringstream out;
  const char* rows[] = {"attitude", "non-attitude"};
  out << "IRU relation      repetition paraphrase inference total\n";
  for (int r = 0; r < 2; ++r)
    out << std::left << std::setw(18) << rows[r] << std::right << std::setw(10)
        << s.total.relation[r][0] << std::setw(11) << s.total.relation[r][1] << std::setw(10)
        << s.total.relation[r][2] << std::setw(6) << s.total.total(r) << "\n";
  out << "\nFinal tone        high  mid  low unknown\n";
  for (int r = 0; r < 2; ++r)
    out << std::left << std::setw(18) << rows[r] << std::right << std::setw(4)
        << s.total.tone[r][0] << std::setw(5) << s.total.tone[r][1] << std::setw(5)
        << s.total.tone[r][2] << std::setw(8) << s.total.tone[r][3] << "\n";
  auto t = tone_table(s.total, g);
  out << "\nchi-square (" << to_string(g) << ", df=1): ";
  try {
    out << std::fixed << std::setprecision(3) << chi_square(t) << "\n";
  } catch (const std::invalid_argument& e) {
    out << "undefined (" << e.what() << ")\n";
  }
  out << "dialogues: " << s.dialogues.size() << "\n";
  return out.str();
}

inline nlohmann::json stats_json(const CorpusStats& s, Grouping g) {
  using nlohmann::json;
  auto counts = [](const IruCounts& c) {
    json j;
    const char* rows[] = {"attitude", "non_attitude"};
    for (int r = 0; r < 2; ++r) {
      j[rows[r]] = {{"repetition", c.relation[r][0]},
                    {"paraphrase", c.relation[r][1]},
                    {"inference", c.relation[r][2]},
                    {"tone", {{"high", c.tone[r][0]},
                              {"mid", c.tone[r][1]},
                              {"low", c.tone[r][2]},
                              {"unknown", c.tone[r][3]}}}};
    }
    return j;
  };
  json per = json::array();
  for (const auto& [name, c] : s.dialogues) per.push_back({{"file", name}, {"counts", counts(c)}});
  auto t = tone_table(s.total, g);
  json chi = {{"grouping", to_string(g)}, {"table", t.cells}, {"rows", t.rows}, {"cols", t.cols}};
  try {
    chi["statistic"] = chi_square(t);
  } catch (const std::invalid_argument& e) {
    chi["statistic"] = nullptr;
    chi["error"] = e.what();
  }
  return {{"total", counts(s.total)}, {"dialogues", per}, {"chi_square", chi}};
}

}  // namespace cground
