#pragma once

#include <cstdint>
#include <vector>

#include "mp4/packets.hpp"

namespace mp4 {

// η = ⊗ η_v, one component per scenario place (declaration order).
struct AdelicCharacter {
  std::vector<F2Character> components;
  friend bool operator==(const AdelicCharacter&, const AdelicCharacter&) = default;
};

struct Constituent {
  AdelicCharacter eta;
  std::vector<RepDescriptor> local_members;  // per place
  int multiplicity = 0;
  bool nonvanishing = true;
};

// Everything the multiplicity formula needs, computed once per scenario.
struct GlobalPacket {
  const Scenario* scenario = nullptr;
  ClassifiedParameter phi;
  ComponentGroup group;
  F2Character eps_tilde;
  std::vector<Localization> locals;
  std::vector<LocalPacket> packets;
};

// Validates the scenario and builds the local data for its parameter.
GlobalPacket make_global_packet(const Scenario& scenario);

F2Character diagonal_pullback(const GlobalPacket& gp, const AdelicCharacter& eta);
int multiplicity(const GlobalPacket& gp, const AdelicCharacter& eta);

// Constituents with m_η = 1 and no vanishing local member, ordered by
// (place id, character index). With include_vanishing, η with m_η = 1 but a
// zero local member are listed too (nonvanishing = false).
std::vector<Constituent> enumerate_constituents(const GlobalPacket& gp,
                                                bool include_vanishing = false);

// Independent count by exhaustive iteration over all η. Throws
// ScenarioTooLarge above kBruteForcePlaceCap places.
inline constexpr std::size_t kBruteForcePlaceCap = 6;
std::uint64_t brute_force_count(const GlobalPacket& gp);

}  // namespace mp4
