#pragma once

// Subcommand bodies of the divcodes tool. Each writes its primary output to
// `out`, diagnostics to `err`, and returns the process exit code.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>

namespace divcodes::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct JobConfig {
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;
  std::optional<std::size_t> delta;
  std::optional<std::size_t> v;
  std::optional<std::size_t> variant;
  std::string family;
  std::string input;
  std::string out;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  bool verify = false;
  std::size_t greedy = 0;
};

int cmd_check(const JobConfig& job, std::ostream& out, std::ostream& err);
int cmd_classify(const JobConfig& job, std::ostream& out, std::ostream& err);
int cmd_construct(const JobConfig& job, std::ostream& out, std::ostream& err);
int cmd_spread(const JobConfig& job, std::ostream& out, std::ostream& err);
int cmd_bounds(const JobConfig& job, std::ostream& out, std::ostream& err);
int cmd_lengths(const JobConfig& job, std::ostream& out, std::ostream& err);

/// "1..6, 9..13" style rendering of an ascending list.
std::string format_ranges(const std::set<std::size_t>& values);

}  // namespace divcodes::cli
