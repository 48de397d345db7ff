#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mp4/parameters.hpp"

namespace mp4io {

inline constexpr int kSchemaVersion = 1;

// Parses a scenario document. Structural problems (wrong types, unknown or
// missing keys, unparsable labels) throw mp4::Error with category schema and
// a JSON path such as "$.cuspidal[0].local.v3.eps".
mp4::Scenario scenario_from_json(const nlohmann::json& doc);
mp4::Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json scenario_to_json(const mp4::Scenario& scenario);

mp4::Sign parse_sign(const nlohmann::json& value, const std::string& path);
mp4::Rational parse_rational(const nlohmann::json& value, const std::string& path);
nlohmann::json rational_to_json(const mp4::Rational& r);

}  // namespace mp4io
