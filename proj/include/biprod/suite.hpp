#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "biprod/instances.hpp"

namespace biprod::cli {

enum class ReportFormat { Text, Json };

struct SuiteConfig {
  std::string instance = "finrel";
  std::int64_t max_size = 2;
  std::int64_t samples = 50;
  std::uint64_t seed = 1;
  ReportFormat format = ReportFormat::Text;
};

enum class Status { Passed, Failed, Unsupported };

struct CheckRecord {
  std::string suite;
  std::vector<std::string> objects;
  Status status;
  std::string failure;  // failing equation or error; empty when passed
  std::size_t equations = 0;
};

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unsupported = 0;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  Summary summary;
  std::chrono::milliseconds duration{0};

  bool all_passed() const { return summary.failed == 0; }
};

// Runs, in order: cones, nullary, distributors, interchange,
// interchange-inverse, idempotents, comparison, biproduct, semiadditive,
// naturality. Object tuples are exhausted over the instance universe;
// morphism-level laws use `samples` draws from a generator seeded with `seed`.
// Suites that need a zero object are reported once as unsupported when the
// instance has none.
Result<Report> run_suite(const SuiteConfig& config);

// Runs against an already constructed instance; `config.instance` is echoed
// only.
Report run_suite(const Instance& instance, const SuiteConfig& config);

std::string to_string(ReportFormat format);
std::string to_string(Status status);

// Both renderings depend only on config and records, so identical runs give
// identical bytes. Timing is appended only when `include_timing` is set.
std::string render_text(const Report& report, bool include_timing = false);
std::string render_json(const Report& report, bool include_timing = false);

// 0 when every check passed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace biprod::cli
