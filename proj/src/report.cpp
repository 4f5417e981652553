#include "explab/report.hpp"

#include <cmath>
#include <fstream>

#include "explab/errors.hpp"

namespace explab {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json number_map(const std::map<std::string, double>& values) {
  Json out = Json::object();
  for (const auto& [key, value] : values) out[key] = number(value);
  return out;
}

}  // namespace

Json to_json(const DeltaEstimate& estimate) {
  Json out;
  out["value"] = number(estimate.value);
  out["method"] = std::string(to_string(estimate.method));
  out["cutoff"] = estimate.cutoff;
  out["residual"] = number(estimate.residual);
  out["bracket"] = Json::array({number(estimate.bracket[0]), number(estimate.bracket[1])});
  out["diagnostics"] = number_map(estimate.diagnostics);
  return out;
}

Json to_json(const SeriesEstimate& estimate) {
  Json out;
  out["s"] = estimate.s;
  out["cutoff"] = estimate.cutoff;
  out["log_sum"] = number(estimate.log_sum);
  Json layers = Json::array();
  for (double v : estimate.per_length) layers.push_back(number(v));
  out["per_length"] = std::move(layers);
  return out;
}

Json to_json(const CheckReport& report) {
  Json out;
  out["name"] = report.name;
  out["cases"] = report.cases;
  out["worst_slack"] = number(report.worst_slack);
  out["tolerance"] = report.tolerance;
  out["pass"] = report.pass;
  out["params"] = number_map(report.params);
  out["witness"] = report.witness;
  out["notes"] = report.notes;
  return out;
}

Json to_json(const FiberReport& report) {
  Json out;
  out["h"] = report.h.to_string();
  out["max_length"] = report.max_length;
  out["cosets"] = report.cosets;
  Json histogram = Json::object();
  for (const auto& [size, count] : report.histogram) histogram[std::to_string(size)] = count;
  out["histogram"] = std::move(histogram);
  out["max_fiber"] = report.max_fiber;
  out["declared_bound"] = report.declared_bound;
  out["images_outside_kernel"] = report.images_outside_kernel;
  out["bound_holds"] = report.bound_holds();
  return out;
}

Json to_json(const InjectionReport& report) {
  constexpr std::size_t kListed = 20;
  Json out;
  out["map"] = report.map_name;
  out["max_length"] = report.max_length;
  out["scanned"] = report.scanned;
  out["collision_count"] = report.collisions.size();
  Json collisions = Json::array();
  for (std::size_t i = 0; i < std::min(kListed, report.collisions.size()); ++i) {
    collisions.push_back(Json::array({report.collisions[i].first.to_string(), report.collisions[i].second.to_string()}));
  }
  out["collisions"] = std::move(collisions);
  out["kernel_failure_count"] = report.kernel_failures.size();
  Json failures = Json::array();
  for (std::size_t i = 0; i < std::min(kListed, report.kernel_failures.size()); ++i) {
    failures.push_back(report.kernel_failures[i].to_string());
  }
  out["kernel_failures"] = std::move(failures);
  out["max_image_length"] = report.max_image_length;
  out["length_formula_failures"] = report.length_formula_failures;
  out["ok"] = report.ok();
  return out;
}

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << dump_json(value);
}

}  // namespace explab
