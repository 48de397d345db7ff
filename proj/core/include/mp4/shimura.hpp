#pragma once

#include <string>
#include <vector>

#include "mp4/descriptor.hpp"

namespace mp4 {

// One row of the local Shimura correspondence for Mp(W₂) ↔ SO(V₂^±) at a
// nonarchimedean place, with symbolic names (a, b, ρ₀, …) as in the table.
struct ShimuraEntry {
  std::string label;   // "(+)" or "(+,-)"
  RepDescriptor mp;    // member of Π_{φ,ψ}(Mp(W₂))
  Sign so_space = Sign::plus;
  RepDescriptor so;    // member of Π_φ(SO(V₂^so_space)), group-qualified
};

struct ShimuraRow {
  std::string tag;  // e.g. "chi_a(x)S4", "rho0+chi_a(x)S2"
  std::vector<ShimuraEntry> entries;
};

const std::vector<ShimuraRow>& shimura_table();
const ShimuraRow& shimura_row(const std::string& tag);

enum class ShimuraDirection { mp_to_so, so_to_mp };

// Throws RowNotFound for an unknown tag or label.
RepDescriptor shimura_correspondence(const std::string& tag, ShimuraDirection direction,
                                     const std::string& label);

// The entry on the other side of a given descriptor (structural match).
RepDescriptor shimura_transfer(const std::string& tag, ShimuraDirection direction,
                               const RepDescriptor& source);

// True when the row pairs its Mp-column bijectively with SO⁺ ⊔ SO⁻.
bool shimura_row_is_bijective(const ShimuraRow& row);

}  // namespace mp4
