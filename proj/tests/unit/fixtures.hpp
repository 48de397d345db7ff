#pragma once

#include <string>

#include "mp4io/scenario_json.hpp"

inline mp4::Scenario fixture(const std::string& name) {
  return mp4io::load_scenario(std::string(MP4_SCENARIO_DIR) + "/" + name);
}
