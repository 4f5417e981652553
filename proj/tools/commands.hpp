#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace explab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

struct CommandOptions {
  /// verify-lemmas selection; empty means every lemma check.
  std::vector<std::string> checks;
};

/// Lemma checks run by `verify-lemmas --all`, in manifest order.
const std::vector<std::string>& lemma_check_names();

/// Runs one subcommand, writing manifest.json (and the command's data
/// files) under config.out and the main result JSON to `out`. Returns the
/// exit status; library errors propagate.
int run_command(const std::string& command, const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err);

}  // namespace explab::cli
