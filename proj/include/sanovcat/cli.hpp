#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sanovcat/report.hpp"

namespace sanovcat::cli {

inline const std::vector<std::string> kCommands = {
    "verify-n4",      "build-theta",      "verify-theta",        "verify-lemmas",
    "search-words",   "check-applicable", "automorphism-report", "all"};

struct RunConfig {
  std::string command;
  std::uint64_t seed = 42;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Random triples for the triple scans (lemmas, associativity); 0 means
  /// exhaustive over all 1024^3.
  std::size_t sample = 0;
  std::size_t oracle_samples = 100'000;
  std::size_t identity_samples = 2'000;
  std::size_t collection_words = 10'000;
  std::size_t box_samples = 100'000;
  std::size_t naturality_samples = 16;
  std::string stage = "full";
  std::optional<int> alpha;
  std::string word;
  std::string expr;
  std::string json_path;
  std::string export_path;
  std::string format = "raw";
};

nlohmann::json config_json(const RunConfig& c);

/// Report document: {command, config, checks}.
nlohmann::json report_json(const RunConfig& c, const Report& r);

/// Runs one command, printing the summary to out and diagnostics to err.
/// Returns 0 iff every check passed, 1 on a failed check, 2 on bad input.
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

}  // namespace sanovcat::cli
