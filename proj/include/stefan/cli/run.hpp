#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stefan/cli/config.hpp"

namespace stefan::cli {

enum class Command { Solve, Certify, Oracle, Sweep, VerifyPde };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitInvalidConfig = 3;
inline constexpr int kExitHypothesisFailure = 4;

struct RunOptions {
  std::optional<std::string> out_dir;  // overrides outputs.dir
  unsigned workers = 1;
  std::optional<std::size_t> grid;  // overrides numerics.grid
  bool quiet = false;
};

/// Executes one command and writes its artifacts; returns the exit status.
/// Diagnostics go to `err`, summaries to `out` unless quiet.
int run(const RunConfig& config, Command command, const RunOptions& options, std::ostream& out,
        std::ostream& err);

/// Command-line entry point.
int main(int argc, char** argv);

}  // namespace stefan::cli
