#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "explab/kleinian.hpp"
#include "explab/quotient.hpp"
#include "explab/series.hpp"

namespace explab::cli {

/// Every tunable of a run. Values come from defaults, then a JSON config
/// file, then command-line flags.
struct RunConfig {
  // Group: the symmetric Schottky family (k, t) unless explicit generators
  // ("Re a Im a Re b Im b" per matrix) are given.
  int k = 2;
  double t = 3.0;
  std::vector<std::string> generators;
  std::string hom = "abelian";
  std::string h0 = "abAB";
  std::vector<std::string> H{"abAB", "aaBAAb"};
  std::string injection_case = "free";
  int L = 10;
  double s = 0.5;
  std::vector<double> s_grid{0.3, 0.5, 0.7};
  int n_window = 20;
  std::optional<RadiusWindow> window;
  double bin_width = kDefaultBinWidth;
  double tol = 1e-4;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20120101;
  int workers = 0;  // 0: EXPLAB_WORKERS or hardware concurrency
  std::string out = "explab-out";
  int orbit_csv_max_length = 8;

  MarkedGroup group() const;
  QuotientHom homomorphism() const;
  int resolved_workers() const;
  void validate() const;

  nlohmann::ordered_json to_json() const;
  /// Strict: unknown keys and mistyped values raise ConfigError naming the key.
  static RunConfig from_json(const nlohmann::json& j, RunConfig base);
  /// Reads a JSON file; an empty (or whitespace-only) file means defaults.
  static RunConfig from_file(const std::filesystem::path& path, RunConfig base);
};

inline RunConfig config_from_json(const nlohmann::json& j) { return RunConfig::from_json(j, RunConfig{}); }
inline RunConfig config_from_file(const std::filesystem::path& path) { return RunConfig::from_file(path, RunConfig{}); }

/// Applies "schottky:k=2,t=3" or "generators:<m1>;<m2>;..." to the config.
void apply_group_spec(RunConfig& config, const std::string& spec);
std::string group_spec(const RunConfig& config);

}  // namespace explab::cli
