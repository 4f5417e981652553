#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "explab/errors.hpp"

using namespace explab;
using namespace explab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Critical exponents of normal subgroups of Schottky groups"};
  app.require_subcommand(1, 1);

  std::optional<std::string> config_file, group, hom, h0, H, injection_case, out;
  std::optional<int> L, workers, n_window;
  std::optional<double> s;
  std::optional<std::uint64_t> samples, seed;
  app.add_option("--config", config_file, "JSON run configuration");
  app.add_option("--group", group, "schottky:k=2,t=3 or generators:m1;m2;...");
  app.add_option("--hom", hom, "trivial | abelian | mod2 | mod:N:i1,i2,...");
  app.add_option("--h0", h0, "kernel element, e.g. abAB");
  app.add_option("--H", H, "malnormal subgroup generators h1,h2");
  app.add_option("--case", injection_case, "injection-scan case: free | malnormal");
  app.add_option("--L", L, "word-length cutoff");
  app.add_option("--s", s, "series exponent");
  app.add_option("--n-window", n_window, "power window for the per-coset check");
  app.add_option("--samples", samples, "random cases for the projection check");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--workers", workers, "worker threads (default: EXPLAB_WORKERS, else all cores)");
  app.add_option("--out", out, "output directory");

  CommandOptions options;
  bool all = false;
  const std::vector<std::string> names{"estimate-delta", "subgroup-delta", "verify-lemmas", "fiber-stats",
                                       "injection-scan", "report"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "verify-lemmas") {
      sub->add_flag("--all", all, "run every lemma check");
      sub->add_option("--check", options.checks, "run one named check (repeatable)")
          ->check(CLI::IsMember(lemma_check_names()));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  if (all) options.checks.clear();

  try {
    RunConfig config;
    if (config_file) config = RunConfig::from_file(*config_file, config);
    if (group) apply_group_spec(config, *group);
    if (hom) config.hom = *hom;
    if (h0) config.h0 = *h0;
    if (H) {
      const auto comma = H->find(',');
      if (comma == std::string::npos) throw ConfigError("flag --H: expected h1,h2");
      config.H = {H->substr(0, comma), H->substr(comma + 1)};
    }
    if (injection_case) config.injection_case = *injection_case;
    if (L) config.L = *L;
    if (s) config.s = *s;
    if (n_window) config.n_window = *n_window;
    if (samples) config.samples = *samples;
    if (seed) config.seed = *seed;
    if (workers) config.workers = *workers;
    if (out) config.out = *out;
    return run_command(app.get_subcommands().front()->get_name(), config, options, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "explab: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "explab: invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "explab: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
