#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gitq/serialize.hpp"

namespace gitq::cli {

enum class Status { Ok, Wall, Empty, Error };
std::string_view to_string(Status s);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

struct CommandResult {
  Status status = Status::Ok;
  Json payload;
  std::vector<std::string> diagnostics;
  int exit_code = kExitOk;
  /// What the tool prints on stdout (JSON document or text summary).
  std::string output;
};

/// Runs one subcommand; `args` excludes the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace gitq::cli
