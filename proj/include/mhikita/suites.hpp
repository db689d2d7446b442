#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhikita/hypertoric.hpp"

namespace mh {

inline constexpr const char* kArtifactVersion = "0.3.0";

struct RunConfig {
  std::string suite;
  std::vector<std::uint32_t> primes{3, 5};
  int N = 6;
  int M = 4;
  std::vector<std::string> inputs;  // built-in names or gauge files; empty = every applicable built-in
  std::string fixture;              // restricted-axioms only: "weyl" or "weyl-corrupted"
  std::string structure;            // pcurvature-lin only: optional structure data file for the Gale dual
  int jobs = 1;
  bool timings = false;
};

struct InputSpec {
  std::string name;
  bool sl2 = false;
  GaugeData gauge;
};

struct CheckResult {
  std::string cell;       // "t-star-p1 p=3"
  std::string id;         // stable within the suite
  std::string statement;  // which property the check exercises
  std::string status;     // pass, fail, skipped
  std::string detail;
  std::string witness;    // set on failure
};

struct SuiteReport {
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  std::map<std::string, double> cell_seconds;
  bool passed() const;
};

std::vector<std::string> suite_names();
std::vector<std::string> builtin_input_names();  // t-star-a1, t-star-p1, sqed-3, sl2-springer

// gauge text: "name", "iota" (n lines of k integers), "pi" (n-k lines of n integers),
// "chi" and "sigma" lines; '#' comments. InputError on anything malformed.
GaugeData parse_gauge(const std::string& text, const std::string& fallback_name);
InputSpec resolve_input(const std::string& ref);

// InputError for an invalid config; everything below that is reported as checks
void validate_config(const RunConfig& cfg);
SuiteReport run_suite(const RunConfig& cfg);

nlohmann::json report_json(const SuiteReport& r);
nlohmann::json error_json(const RunConfig& cfg, const std::string& kind, const std::string& message);
// empty string when the document matches the report layout
std::string validate_report(const nlohmann::json& j);
std::string dump_report(const nlohmann::json& j);  // two-space indent, trailing newline

}  // namespace mh
