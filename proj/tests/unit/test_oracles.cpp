#include <doctest.h>

#include "hilbert_oracle.hpp"
#include "mp4/multiplicity.hpp"
#include "scenario_gen.hpp"

using namespace mp4;

TEST_SUITE("oracles") {
  TEST_CASE("Serre's formulas on classic values") {
    CHECK(mp4test::hilbert_int(-1, -1, 0) == -1);
    CHECK(mp4test::hilbert_int(-1, -1, 2) == -1);
    CHECK(mp4test::hilbert_int(2, 5, 5) == -1);
    CHECK(mp4test::hilbert_int(3, 3, 3) == -1);
    CHECK(mp4test::hilbert_int(3, 5, 2) == 1);
    CHECK(mp4test::hilbert_int(3, 7, 2) == -1);
  }

  TEST_CASE("generated scenarios are valid, have the requested type and count by brute force") {
    std::mt19937_64 rng(7);
    for (auto type : {ParamType::principal, ParamType::howe_ps, ParamType::saito_kurokawa,
                      ParamType::soudry, ParamType::tempered}) {
      for (int i = 0; i < 6; ++i) {
        const auto sc = mp4test::random_scenario(rng, type, {1, 4});
        CHECK_NOTHROW(validate_scenario(sc));
        const auto gp = make_global_packet(sc);
        CHECK(gp.phi.type == type);
        CHECK(enumerate_constituents(gp).size() == brute_force_count(gp));
      }
    }
  }

  TEST_CASE("only_kind restricts the places") {
    std::mt19937_64 rng(11);
    mp4test::GenOptions opts{3, 3, false, PlaceKind::odd_1mod4};
    const auto places = mp4test::random_places(rng, 3, opts);
    for (const auto& p : places) CHECK(p.kind == PlaceKind::odd_1mod4);
  }
}
