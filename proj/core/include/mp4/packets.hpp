#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mp4/descriptor.hpp"
#include "mp4/localization.hpp"

namespace mp4 {

struct PacketEntry {
  F2Character label;
  RepDescriptor member;
  bool in_L_packet = false;
  // False when the shape lies outside the encoded tables; member is then an
  // opaque tag.
  bool supported = true;
};

struct LocalPacket {
  Place place;
  ParamType type = ParamType::tempered;
  std::vector<PacketEntry> entries;

  const PacketEntry& at(const F2Character& label) const;
};

// One entry per character of the local component group, in the order of
// local_characters().
LocalPacket local_packet(const Localization& loc);

// The (ε, ε′) attached to the SK member with label (ε₁, ε₂). For reducible
// ρ_v, ε = ε₁.
struct QuaternionData {
  Sign eps = Sign::plus;
  Sign eps_prime = Sign::plus;
  friend bool operator==(const QuaternionData&, const QuaternionData&) = default;
};

QuaternionData sk_quaternion_data(Sign e1, Sign e2, Sign rho_root, Sign rho_twisted_root,
                                  Sign chi_a_minus_one, bool rho_reducible);
QuaternionData hps_quaternion_data(Sign e1, Sign e2, Sign chi_ab_minus_one);

// A representation of O(V₁^ε): the ε′-extension of σ₀ from SO(V₁^ε).
struct O3Rep {
  Sign space_eps = Sign::plus;
  bool trivial_on_SO = false;
  Sign extension = Sign::plus;  // σ(-1)
  Sign root = Sign::plus;       // ε(1/2, σ)
};

// Nonvanishing of θ(σ) on Mp(W_rank), rank ∈ {1, 2}.
bool theta_o3_nonvanishing(const O3Rep& sigma, int target_rank);

// Independent check of the vanishing entries through the theta lift from
// O(V₁^ε): defined for SK labels (ε₁, -) and every HPS label (including the
// Soudry places with ρ_v = χ_a ⊕ χ_b). Returns nullopt elsewhere.
std::optional<bool> theta_route_nonzero(const LocalParam& lp, const F2Character& label);

RepDescriptor elementary_weil(int n, Sign parity, const std::string& twist = "1");

// Langlands quotient attached to the L-parameter φ_φ of a nontempered
// parameter, built directly from its exponents.
RepDescriptor l_packet_descriptor(const LocalParam& lp);

// Members of the Mp₂ packet of a 2-dimensional symplectic ρ_v (relative to ψ).
RepDescriptor mp2_member(const LocalRhoShape& rho, const std::string& rho_name, Sign label);

}  // namespace mp4
