#pragma once

namespace kinetics {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,   // model/config parse or validation failure
  kExitSimFailure = 2,   // a simulation failed at runtime
  kExitUsage = 64,       // bad flags
};

/// Entry point behind the `kinetics` binary; separated so tests can invoke
/// the CLI in-process.
int run_cli(int argc, const char* const* argv);

}  // namespace kinetics
