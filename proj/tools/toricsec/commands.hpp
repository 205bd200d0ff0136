#pragma once

#include <string>
#include <vector>

#include "workspace.hpp"

namespace toricsec::cli {

/// Exit statuses of every command.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

struct CommandRequest {
  std::string command;
  /// Positional operands after the workspace (collection, divisor or
  /// fibration names, depending on the command).
  std::vector<std::string> operands;
  int n = 0;                 // construct-beilinson
  std::string fiber;         // fiber collection (optional; defaults to (O))
  std::string base;          // base collection
  std::string twist;         // construct-fibration twist divisor (optional; defaults to 0)
  std::string ample;         // twist-search ample divisor (optional; searched if empty)
  Int k_max = 10;
  unsigned threads = 1;
  bool json = false;
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output;
  std::string error;
};

const std::vector<std::string>& known_commands();

/// Runs one command against a parsed workspace (null only for
/// construct-beilinson). Never throws: every failure maps to an exit code.
CommandResult run_command(const WorkspaceDocument* workspace, const CommandRequest& request);

}  // namespace toricsec::cli
