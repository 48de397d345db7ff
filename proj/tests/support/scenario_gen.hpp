#pragma once

#include <random>

#include "mp4/parameters.hpp"

namespace mp4test {

struct GenOptions {
  int min_places = 1;
  int max_places = 5;
  bool allow_complex = true;
  // Restrict every place to this kind when set.
  std::optional<mp4::PlaceKind> only_kind;
};

// A random valid scenario whose parameter has the requested type. Local
// shapes, signs and square classes are drawn at random; reciprocity and the
// root-number products hold by construction.
mp4::Scenario random_scenario(std::mt19937_64& rng, mp4::ParamType type,
                              const GenOptions& options = {});

// Random places (ids v0, v1, ...) for which the built-in elements satisfy
// reciprocity.
std::vector<mp4::Place> random_places(std::mt19937_64& rng, int count, const GenOptions& options);

// A random element satisfying reciprocity against all elements given.
mp4::GlobalElement random_element(std::mt19937_64& rng, const std::string& name,
                                  const std::vector<mp4::Place>& places,
                                  const std::vector<mp4::GlobalElement>& others);

}  // namespace mp4test
