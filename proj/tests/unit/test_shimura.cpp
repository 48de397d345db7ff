#include <doctest.h>

#include <set>

#include "mp4/error.hpp"
#include "mp4/shimura.hpp"

using namespace mp4;

TEST_SUITE("shimura") {
  TEST_CASE("every row is a bijection onto SO(V+) and SO(V-)") {
    for (const auto& row : shimura_table()) CHECK_MESSAGE(shimura_row_is_bijective(row), row.tag);
  }

  TEST_CASE("round trips in both directions") {
    for (const auto& row : shimura_table()) {
      for (const auto& e : row.entries) {
        const auto so = shimura_correspondence(row.tag, ShimuraDirection::mp_to_so, e.label);
        CHECK(equivalent(shimura_transfer(row.tag, ShimuraDirection::so_to_mp, so), e.mp));
        const auto mp = shimura_correspondence(row.tag, ShimuraDirection::so_to_mp, e.label);
        CHECK(equivalent(shimura_transfer(row.tag, ShimuraDirection::mp_to_so, mp), e.so));
      }
    }
  }

  TEST_CASE("the SO group of each entry carries its space sign") {
    for (const auto& row : shimura_table()) {
      for (const auto& e : row.entries) {
        const std::string want = e.so_space == Sign::plus ? "SO(V2+):" : "SO(V2-):";
        CHECK(render(e.so).rfind(want, 0) == 0);
      }
    }
  }

  TEST_CASE("the trivial-character S4 row swaps the Steinberg signs") {
    CHECK(render(shimura_correspondence("1(x)S4", ShimuraDirection::so_to_mp, "+")) == "St~^-_{1,psi}");
    CHECK(render(shimura_correspondence("chi_a(x)S4", ShimuraDirection::so_to_mp, "+")) ==
          "St~^+_{chi_a,psi}");
  }

  TEST_CASE("unknown rows and labels") {
    CHECK_THROWS_AS(shimura_row("nope"), Error);
    CHECK_THROWS_AS(shimura_correspondence("phi0+phi0", ShimuraDirection::mp_to_so, "+,-"), Error);
    CHECK_THROWS_AS(shimura_transfer("phi0+phi0", ShimuraDirection::mp_to_so, named("x")), Error);
  }
}
