#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dawn/sssp.hpp"

namespace dawn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kVerifyFailed = 3,
};

struct Hooks {
  /// Forwarded to VerifyOptions::tamper by the verify subcommand.
  std::function<void(SsspResult&)> verify_tamper;
};

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace dawn::cli
