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

// cground: analyze transcripts, compute corpus statistics, validate input,
// and print reference tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cground/cground.hpp"

namespace {

using cground::ScaleRegistry;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kMismatch = 2;

ScaleRegistry base_registry() {
  ScaleRegistry r = ScaleRegistry::builtin();
  if (const char* path = std::getenv("CGROUND_SCALES"); path && *path)
    cground::load_scale_file(r, path);
  return r;
}

int run_analyze(const std::string& path, bool strict, const std::string& format,
                const std::string& snapshot_path) {
  auto t = cground::parse_transcript(path);
  auto a = cground::analyze_transcript(t, base_registry());
  const auto& s = a.session;

  if (format == "json") {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& [idx, c] : s.classifications())
      cls.push_back({{"utterance", idx}, {"major", cground::to_string(c.major)},
                     {"subtype", c.subtype()}, {"confidence_cues", c.confidence_cues}});
    nlohmann::json gold = nlohmann::json::array();
    for (const auto& g : a.checks)
      gold.push_back({{"utterance", g.index},
                      {"expected", std::string(cground::to_string(g.expected.major)) +
                                       (g.expected.subtype.empty() ? "" : "/" + g.expected.subtype)},
                      {"got", g.got_major + (g.got_subtype.empty() ? "" : "/" + g.got_subtype)},
                      {"match", g.match}});
    nlohmann::json out{{"dialogue_id", t.dialogue_id},
                       {"classifications", cls},
                       {"trace", cground::trace_json(s.trace())},
                       {"notes", s.notes()},
                       {"gold", gold}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dialogue " << t.dialogue_id << "\n\n# classifications\n";
    for (const auto& [idx, c] : s.classifications()) {
      std::cout << "U" << idx << "\t" << cground::to_string(c.major);
      if (!c.subtype().empty()) std::cout << "/" << c.subtype();
      for (const auto& cue : c.confidence_cues) std::cout << "\t[" << cue << "]";
      std::cout << "\n";
    }
    std::cout << "\n# trace\n" << cground::trace_text(s.trace());
    if (!s.notes().empty()) {
      std::cout << "\n# notes\n";
      for (const auto& n : s.notes()) std::cout << n << "\n";
    }
    if (!a.checks.empty()) {
      std::cout << "\n# gold\n";
      for (const auto& g : a.checks) {
        std::cout << "U" << g.index << "\t" << (g.match ? "ok" : "MISMATCH") << "\texpected "
                  << cground::to_string(g.expected.major)
                  << (g.expected.subtype.empty() ? "" : "/" + g.expected.subtype) << "\tgot "
                  << g.got_major << (g.got_subtype.empty() ? "" : "/" + g.got_subtype) << "\n";
      }
    }
  }

  if (!snapshot_path.empty()) {
    std::ofstream out(snapshot_path);
    if (!out) throw std::runtime_error("cannot write " + snapshot_path);
    out << s.ground().snapshot().dump(2) << "\n";
  }
  return strict && !a.all_match() ? kMismatch : kOk;
}

int run_stats(const std::string& dir, const std::string& grouping, const std::string& format) {
  auto g = cground::grouping_from_string(grouping);
  auto s = cground::corpus_stats(dir, base_registry());
  if (format == "json")
    std::cout << cground::stats_json(s, g).dump(2) << "\n";
  else
    std::cout << cground::stats_text(s, g);
  return kOk;
}

int run_check(const std::string& path) {
  auto t = cground::parse_transcript(path);
  auto registry = cground::registry_for(t, base_registry());
  (void)registry;
  std::cout << path << ": ok (" << t.utterances.size() << " utterances)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common-ground analysis of annotated dialogue transcripts"};
  app.require_subcommand(1);

  std::string file, dir, format = "text", snapshot, grouping = "mid-vs-low", name;
  bool strict = false;

  auto* analyze = app.add_subcommand("analyze", "Classify responses and trace the common ground");
  analyze->add_option("file", file, "Transcript JSON")->required();
  analyze->add_flag("--strict", strict, "Exit 2 if any gold label disagrees");
  analyze->add_option("--trace-format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--snapshot", snapshot, "Write the final ground as JSON");

  std::string stats_format = "text";
  auto* stats = app.add_subcommand("stats", "IRU distribution and chi-square over a corpus");
  stats->add_option("dir", dir, "Directory of transcript JSON files")->required();
  stats->add_option("--grouping", grouping, "mid-vs-low or high-vs-rest")
      ->check(CLI::IsMember({"mid-vs-low", "high-vs-rest"}));
  stats->add_option("--format", stats_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Validate a transcript");
  check->add_option("file", file, "Transcript JSON")->required();

  auto* golden = app.add_subcommand("golden", "Print a reference table");
  golden->add_option("name", name, "rejection-implicatures, upgrade-table or delta-u26")
      ->required()
      ->check(CLI::IsMember(cground::golden::names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*analyze) return run_analyze(file, strict, format, snapshot);
    if (*stats) return run_stats(dir, grouping, stats_format);
    if (*check) return run_check(file);
    if (*golden) {
      std::cout << cground::golden::render(name);
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "cground: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
