#pragma once

#include <string>
#include <vector>

#include "mp4/descriptor.hpp"
#include "mp4/parameters.hpp"

namespace mp4 {

enum class ResidualFamily { p1_principal, p1_sk, p1_hps, p2, b_principal, b_hps };
std::string_view to_string(ResidualFamily f);

struct ResidualConstituent {
  ResidualFamily family;
  std::string support;         // "P1", "P2" or "B"
  std::string source;          // the Mp₂ or GL₂ datum it is built from, if any
  AParameter parameter;        // near-equivalence class
  ParamType type;              // classify(parameter)
  std::vector<RepDescriptor> local;  // per scenario place, normalized
};

// The residual spectrum generated by the scenario's declared characters
// (residual_characters, or all declared elements), Mp₂ data and GL₂ data.
// The scenario must already be valid.
std::vector<ResidualConstituent> residual_spectrum(const Scenario& scenario);

// True when both parameters have the same summands up to order and
// equality of quadratic characters.
bool same_parameter(const Scenario& scenario, const AParameter& x, const AParameter& y);

}  // namespace mp4
