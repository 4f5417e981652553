#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "explab/errors.hpp"
#include "explab/maps.hpp"
#include "explab/report.hpp"
#include "explab/stallings.hpp"
#include "explab/verify.hpp"

namespace explab::cli {

namespace {

namespace fs = std::filesystem;

struct Run {
  const RunConfig& config;
  MarkedGroup group;
  QuotientHom phi;
  int workers;
  Json manifest;
  Json delta = Json::object();
  bool pass = true;
  std::string failure;

  Run(const RunConfig& c)
      : config(c), group(c.group()), phi(c.homomorphism()), workers(c.resolved_workers()) {
    manifest["tool"] = "explab";
    manifest["config"] = c.to_json();
    manifest["group"] = group.description();
    manifest["outputs"] = Json::array();
    manifest["checks"] = Json::object();
    manifest["results"] = Json::object();
  }

  fs::path path(const std::string& name) {
    manifest["outputs"].push_back(name);
    return fs::path(config.out) / name;
  }

  void fail(const std::string& what) {
    if (pass) failure = what;
    pass = false;
  }

  void add_check(const CheckReport& report) {
    manifest["checks"][report.name] = to_json(report);
    if (!report.pass) fail(report.name + " failed at " + report.witness);
  }
};

ReducedWord word(const std::string& key, const std::string& text) {
  try {
    return ReducedWord::parse(text);
  } catch (const InvalidArgument& e) {
    throw ConfigError("config key '" + key + "': " + e.what());
  }
}

Json estimate_delta(Run& run) {
  const auto& c = run.config;
  const LayerPressure pressure_fn(run.group, c.L, run.workers);
  const DeltaEstimate by_pressure = delta_via_pressure(pressure_fn, c.tol);
  const OrbitSample sample = sample_orbit(run.group, c.L, run.workers);
  const DeltaEstimate by_counting = delta_via_counting(sample, c.window, c.bin_width);
  run.delta["pressure_root"] = to_json(by_pressure);
  run.delta["counting_regression"] = to_json(by_counting);

  std::ofstream csv(run.path("orbit.csv"), std::ios::binary);
  if (!csv) throw Error("cannot write orbit.csv");
  write_orbit_csv(csv, orbit_enumerate(run.group, std::min(c.L, c.orbit_csv_max_length)));

  Json result;
  result["pressure_root"] = to_json(by_pressure);
  result["counting_regression"] = to_json(by_counting);
  result["estimator_gap"] = std::abs(by_pressure.value - by_counting.value);
  run.manifest["results"]["estimate_delta"] = result;
  return result;
}

Json subgroup_delta_section(Run& run) {
  const auto& c = run.config;
  const DeltaEstimate delta_hat = subgroup_delta(run.group, run.phi, c.L, c.window, run.workers);
  const CheckReport bound = check_theorem_bound(run.group, run.phi, c.L, run.workers);
  Json result;
  result["hom"] = run.phi.label();
  result["delta_hat"] = to_json(delta_hat);
  result["delta"] = bound.params.at("delta");
  result["half_delta_minus_slack"] = 0.5 * bound.params.at("delta") - kTheoremEstimatorSlack;
  run.delta["subgroup"] = result;
  run.manifest["results"]["subgroup_delta"] = result;
  run.add_check(bound);
  return result;
}

CheckReport run_lemma_check(Run& run, const std::string& name) {
  const auto& c = run.config;
  const ReducedWord h = word("h0", c.h0);
  if (name == "triangle_conjugation") return check_triangle_conjugation(run.group, h, c.L, run.workers);
  if (name == "projection_cosine") return check_projection_cosine(c.samples, c.seed);
  if (name == "lemma1_coset") return check_lemma1_coset(run.group, h, c.s, c.L, c.n_window);
  if (name == "main_chain") return check_main_chain(run.group, run.phi, h, c.s, c.L, run.workers);
  throw ConfigError("unknown check '" + name + "'");
}

Json verify_section(Run& run, const std::vector<std::string>& names, bool stop_on_failure) {
  Json result = Json::object();
  for (const auto& name : names) {
    const CheckReport report = run_lemma_check(run, name);
    result[name] = to_json(report);
    run.add_check(report);
    if (stop_on_failure && !run.pass) break;
  }
  return result;
}

// Per-coset and main-chain checks across the configured s grid; the main
// chain slack is expected to grow with s.
Json s_grid_section(Run& run) {
  const auto& c = run.config;
  const ReducedWord h = word("h0", c.h0);
  Json result = Json::array();
  double previous = -std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (double s : c.s_grid) {
    CheckReport lemma = check_lemma1_coset(run.group, h, s, c.L, c.n_window);
    CheckReport chain = check_main_chain(run.group, run.phi, h, s, c.L, run.workers);
    const std::string tag = "[s=" + nlohmann::json(s).dump() + "]";
    lemma.name += tag;
    chain.name += tag;
    run.add_check(lemma);
    run.add_check(chain);
    result.push_back({{"s", s}, {"lemma1_coset", lemma.worst_slack}, {"main_chain", chain.worst_slack}});
    monotone = monotone && chain.worst_slack > previous;
    previous = chain.worst_slack;
  }
  run.manifest["results"]["s_grid"] = {{"slacks", result}, {"main_chain_slack_increasing", monotone}};
  return result;
}

Json fiber_section(Run& run) {
  const FiberReport report = fiber_statistics(&run.group, word("h0", run.config.h0), run.phi, run.config.L);
  const Json result = to_json(report);
  write_json(run.path("fiber.json"), result);
  run.manifest["results"]["fiber_stats"] = result;
  if (!report.bound_holds() || report.images_outside_kernel > 0) {
    run.fail("fiber bound " + std::to_string(report.declared_bound) + " exceeded (max fiber " +
             std::to_string(report.max_fiber) + ")");
  }
  return result;
}

Json injection_section(Run& run) {
  const auto& c = run.config;
  InjectionReport report;
  if (c.injection_case == "free") {
    report = injectivity_scan_free(word("h0", c.h0), run.group.rank(), c.L, run.phi);
  } else {
    const auto H = SubgroupGraph::build(run.group.rank(), {word("H", c.H[0]), word("H", c.H[1])});
    report = injectivity_scan_malnormal(H, c.L, run.phi);
  }
  const Json result = to_json(report);
  write_json(run.path("injection.json"), result);
  run.manifest["results"]["injection_scan"] = result;
  if (!report.ok()) run.fail("injection scan " + report.map_name + " found collisions or kernel failures");
  return result;
}

}  // namespace

const std::vector<std::string>& lemma_check_names() {
  static const std::vector<std::string> names{"triangle_conjugation", "projection_cosine", "lemma1_coset", "main_chain"};
  return names;
}

int run_command(const std::string& command, const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
  config.validate();
  Run run(config);
  run.manifest["command"] = command;
  fs::create_directories(config.out);

  Json printed;
  if (command == "estimate-delta") {
    printed = estimate_delta(run);
  } else if (command == "subgroup-delta") {
    printed = subgroup_delta_section(run);
  } else if (command == "verify-lemmas") {
    printed = verify_section(run, options.checks.empty() ? lemma_check_names() : options.checks, false);
  } else if (command == "fiber-stats") {
    printed = fiber_section(run);
  } else if (command == "injection-scan") {
    printed = injection_section(run);
  } else if (command == "report") {
    // Stages stop at the first failing check so its witness heads the manifest.
    estimate_delta(run);
    if (run.pass) subgroup_delta_section(run);
    if (run.pass) verify_section(run, lemma_check_names(), true);
    if (run.pass) s_grid_section(run);
    if (run.pass) fiber_section(run);
    if (run.pass) injection_section(run);
    printed = run.manifest["checks"];
  } else {
    throw ConfigError("unknown command '" + command + "'");
  }

  if (!run.delta.empty()) write_json(run.path("delta.json"), run.delta);
  run.manifest["pass"] = run.pass;
  if (!run.pass) run.manifest["failure"] = run.failure;
  run.manifest["outputs"].push_back("manifest.json");
  write_json(fs::path(config.out) / "manifest.json", run.manifest);

  out << dump_json(printed);
  if (!run.pass) {
    err << "explab: " << run.failure << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace explab::cli
