#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "explab/errors.hpp"
#include "explab/parallel.hpp"

namespace explab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

template <class T>
T get_number(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) bad_key(key, "expected an integer, got " + v.dump());
    if constexpr (std::is_unsigned_v<T>) {
      if (v.get<std::int64_t>() < 0) bad_key(key, "expected a non-negative integer");
    }
  } else {
    if (!v.is_number()) bad_key(key, "expected a number, got " + v.dump());
  }
  return v.get<T>();
}

std::string get_string(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_string()) bad_key(key, "expected a string, got " + v.dump());
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_array()) bad_key(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) bad_key(key, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<double> get_numbers(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_array()) bad_key(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) bad_key(key, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

int parse_int(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) bad_key(key, "expected an integer, got '" + text + "'");
  return v;
}

double parse_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) bad_key(key, "expected a number, got '" + text + "'");
  return v;
}

std::string shortest(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

void apply_group_spec(RunConfig& config, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "schottky") {
    int k = config.k;
    double t = config.t;
    std::stringstream fields(rest);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) bad_key("group", "expected key=value in '" + field + "'");
      const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "k") {
        k = parse_int(value, "group.k");
      } else if (key == "t") {
        t = parse_double(value, "group.t");
      } else {
        bad_key("group", "unknown field '" + key + "'");
      }
    }
    config.k = k;
    config.t = t;
    config.generators.clear();
  } else if (kind == "generators") {
    std::vector<std::string> gens;
    std::stringstream fields(rest);
    std::string field;
    while (std::getline(fields, field, ';')) gens.push_back(field);
    if (gens.size() < 2) bad_key("group", "need at least two generator matrices");
    config.generators = gens;
    config.k = static_cast<int>(gens.size());
  } else {
    bad_key("group", "expected 'schottky:k=..,t=..' or 'generators:m1;m2;...', got '" + spec + "'");
  }
}

std::string group_spec(const RunConfig& config) {
  if (config.generators.empty()) return "schottky:k=" + std::to_string(config.k) + ",t=" + shortest(config.t);
  std::string out = "generators:";
  for (std::size_t i = 0; i < config.generators.size(); ++i) {
    if (i) out += ';';
    out += config.generators[i];
  }
  return out;
}

MarkedGroup RunConfig::group() const {
  if (generators.empty()) return MarkedGroup::schottky_symmetric(k, t);
  std::vector<Isometry> mats;
  for (const auto& g : generators) {
    try {
      mats.push_back(Isometry::parse(g));
    } catch (const InvalidArgument& e) {
      bad_key("generators", e.what());
    }
  }
  return MarkedGroup::from_generators(std::move(mats));
}

QuotientHom RunConfig::homomorphism() const {
  try {
    return QuotientHom::parse(hom, k);
  } catch (const InvalidArgument& e) {
    bad_key("hom", e.what());
  }
}

int RunConfig::resolved_workers() const { return workers > 0 ? workers : default_worker_count(); }

void RunConfig::validate() const {
  if (k < 2 || k > kMaxRank) bad_key("k", "rank must lie in [2, " + std::to_string(kMaxRank) + "]");
  if (!(t > 0.0)) bad_key("t", "must be positive");
  if (L < 1) bad_key("L", "must be positive");
  if (L > 20) bad_key("L", "must be at most 20");
  if (!(s > 0.0)) bad_key("s", "must be positive");
  for (double x : s_grid) {
    if (!(x > 0.0)) bad_key("s_grid", "values must be positive");
  }
  if (n_window < 1) bad_key("n_window", "must be positive");
  if (!(bin_width > 0.0)) bad_key("bin_width", "must be positive");
  if (!(tol > 0.0)) bad_key("tol", "must be positive");
  if (samples < 1) bad_key("samples", "must be positive");
  if (workers < 0) bad_key("workers", "must be >= 0");
  if (orbit_csv_max_length < 0) bad_key("orbit_csv_max_length", "must be >= 0");
  if (window && !(window->hi > window->lo)) bad_key("window", "need lo < hi");
  if (injection_case != "free" && injection_case != "malnormal") bad_key("case", "expected 'free' or 'malnormal'");
  if (H.size() != 2) bad_key("H", "expected exactly two words");
  auto check_word = [](const std::string& key, const std::string& w) {
    try {
      (void)ReducedWord::parse(w);
    } catch (const InvalidArgument& e) {
      bad_key(key, e.what());
    }
  };
  check_word("h0", h0);
  for (const auto& w : H) check_word("H", w);
  (void)homomorphism();
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["t"] = t;
  if (!generators.empty()) j["generators"] = generators;
  j["hom"] = hom;
  j["h0"] = h0;
  j["H"] = H;
  j["case"] = injection_case;
  j["L"] = L;
  j["s"] = s;
  j["s_grid"] = s_grid;
  j["n_window"] = n_window;
  if (window) j["window"] = {window->lo, window->hi};
  j["bin_width"] = bin_width;
  j["tol"] = tol;
  j["samples"] = samples;
  j["seed"] = seed;
  j["workers"] = workers;
  j["out"] = out;
  j["orbit_csv_max_length"] = orbit_csv_max_length;
  return j;
}

RunConfig RunConfig::from_json(const json& j, RunConfig c) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"group", "k", "t", "generators", "hom", "h0", "H", "case", "L", "s",
                                           "s_grid", "n_window", "window", "bin_width", "tol", "samples", "seed",
                                           "workers", "out", "orbit_csv_max_length"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  if (j.contains("group") && (j.contains("k") || j.contains("t") || j.contains("generators"))) {
    throw ConfigError("config key 'group' conflicts with 'k', 't' or 'generators'");
  }
  if (j.contains("group")) apply_group_spec(c, get_string(j, "group"));
  if (j.contains("k")) c.k = get_number<int>(j, "k");
  if (j.contains("t")) c.t = get_number<double>(j, "t");
  if (j.contains("generators")) {
    c.generators = get_strings(j, "generators");
    c.k = static_cast<int>(c.generators.size());
  }
  if (j.contains("hom")) c.hom = get_string(j, "hom");
  if (j.contains("h0")) c.h0 = get_string(j, "h0");
  if (j.contains("H")) c.H = get_strings(j, "H");
  if (j.contains("case")) c.injection_case = get_string(j, "case");
  if (j.contains("L")) c.L = get_number<int>(j, "L");
  if (j.contains("s")) c.s = get_number<double>(j, "s");
  if (j.contains("s_grid")) c.s_grid = get_numbers(j, "s_grid");
  if (j.contains("n_window")) c.n_window = get_number<int>(j, "n_window");
  if (j.contains("window")) {
    const auto w = get_numbers(j, "window");
    if (w.size() != 2) bad_key("window", "expected [lo, hi]");
    c.window = RadiusWindow{w[0], w[1]};
  }
  if (j.contains("bin_width")) c.bin_width = get_number<double>(j, "bin_width");
  if (j.contains("tol")) c.tol = get_number<double>(j, "tol");
  if (j.contains("samples")) c.samples = get_number<std::uint64_t>(j, "samples");
  if (j.contains("seed")) c.seed = get_number<std::uint64_t>(j, "seed");
  if (j.contains("workers")) c.workers = get_number<int>(j, "workers");
  if (j.contains("out")) c.out = get_string(j, "out");
  if (j.contains("orbit_csv_max_length")) c.orbit_csv_max_length = get_number<int>(j, "orbit_csv_max_length");
  return c;
}

RunConfig RunConfig::from_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return base;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return from_json(j, std::move(base));
}

}  // namespace explab::cli
