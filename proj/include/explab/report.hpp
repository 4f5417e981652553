#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "explab/maps.hpp"
#include "explab/series.hpp"
#include "explab/verify.hpp"

namespace explab {

using Json = nlohmann::ordered_json;

Json to_json(const DeltaEstimate& estimate);
Json to_json(const SeriesEstimate& estimate);
Json to_json(const CheckReport& report);
Json to_json(const FiberReport& report);
Json to_json(const InjectionReport& report);

/// Two-space indented JSON with a trailing newline. Non-finite numbers are
/// written as null.
std::string dump_json(const Json& value);
void write_json(const std::filesystem::path& path, const Json& value);

}  // namespace explab
