#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mp4/parameters.hpp"

namespace mp4 {

// One symplectic irreducible constituent of a tempered summand at a place.
struct TemperedSlot {
  int summand = 0;
  std::string key;
};

// The localization φ_v with the local data the packet tables consume.
struct LocalParam {
  Place place;
  ParamType type = ParamType::tempered;

  // Saito-Kurokawa (ρ_v, χ_a) and Soudry (ρ_v).
  std::optional<LocalRhoShape> rho;
  std::string rho_name;
  // SK: the class of χ_a. HPS: a and b. Principal: a.
  SquareClass a;
  SquareClass b;
  std::string a_name;
  std::string b_name;
  // SK local signs ε(1/2, ρ_v), ε(1/2, ρ_v × χ_a).
  Sign rho_root = Sign::plus;
  Sign rho_twisted_root = Sign::plus;

  // Tempered: the local shape of each summand and the symplectic slots.
  std::vector<LocalRhoShape> tempered_shapes;
  std::vector<std::string> tempered_names;
  std::vector<TemperedSlot> slots;
};

struct Localization {
  LocalParam param;
  ComponentGroup group;
  // image[i] is ι_v(a_i) as a bitmask over the local basis.
  std::vector<std::uint32_t> image;
};

Localization localize(const Scenario& scenario, const ClassifiedParameter& phi,
                      const Place& place);

std::vector<Localization> localize_all(const Scenario& scenario, const ClassifiedParameter& phi);

// Characters of g respecting its relations, lexicographic with + before -.
std::vector<F2Character> local_characters(const ComponentGroup& g);

// η_v ∘ ι_v as a character of the global S_φ.
F2Character pullback(const Localization& loc, const F2Character& eta_v);

}  // namespace mp4
