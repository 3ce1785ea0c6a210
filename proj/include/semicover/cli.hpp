#pragma once

#include "semicover/cone_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace semicover {

struct RunConfig {
  std::string subcommand;
  std::string model;
  std::string presentation;
  std::string fixture;
  std::string table;
  std::string cone_a;
  std::string cone_b;
  std::string suite;
  int radius = 6;
  int max_depth = 8;
  std::uint64_t seed = 42;
  std::string output;
  std::string format = "json";
  bool reduce = false;
  bool exhaustive = false;
  /// Exhaustive order cap; $SEMICOVER_CAP when unset.
  std::optional<int> cap;
};

struct RunResult {
  int exit_code = 0;
  Json report;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;

/// Runs one subcommand. Library errors from failed checks become exit 1
/// reports with their witness; input errors propagate as exceptions.
RunResult run(const RunConfig& config);

/// lemmas, roundtrip or finite. Throws UnknownSuite.
Json verify_suite(const std::string& name, std::uint64_t seed, int radius, int cap);

/// Text view of a report; every ball-local verdict reads "at radius r".
std::string render_text(const Json& report);

/// Parses argv, runs, writes the report. Returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Json verdict_json(const Verdict& v, const GroupModel& model);

}  // namespace semicover
