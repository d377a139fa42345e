#pragma once

// Command dispatch and report rendering for the ringelhall executable.

#include <optional>
#include <string>

#include "ringelhall/config.hpp"
#include "ringelhall/verify.hpp"

namespace ringelhall {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct Command {
  std::string name;            ///< classify | hall-table | cartan | roots | sv | verify
  std::optional<int> height;   ///< roots
  std::string suite = "all";   ///< verify: hopf | pairing | composition | sv | kac | character | all
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  ///< report or table, for stdout
  std::string error;   ///< diagnostic, for stderr
};

CommandResult run_command(const Command& cmd, const Config& config);

CheckReport run_suite(const std::string& suite, const Config& config);

/// JSON: {"suite", "config_digest", "checks": [{"name", "status", "witness"}], "overall"}.
std::string emit_report(const CheckReport& report, OutputFormat format, const std::string& config_digest);

}  // namespace ringelhall
