#include <doctest.h>

#include "lemma_oracle.hpp"
#include "mp4/error.hpp"
#include "mp4/reducibility.hpp"

using namespace mp4;
using Kind = Mp2Inducing::Kind;

TEST_SUITE("reducibility") {
  TEST_CASE("induction from P1 agrees with the case-by-case oracle on the whole grid") {
    int reducible = 0;
    for (const auto& [chi, pi] : mp4test::mp_p1_grid()) {
      const auto want = mp4test::lemma_mp_p1(chi, pi);
      const auto got = mp4test::verdict_of(reduce_mp_p1(chi, pi));
      CHECK(got.constituents == want.constituents);
      CHECK(got.direct_sum == want.direct_sum);
      reducible += want.lemma_case != 0;
    }
    CHECK(reducible > 0);
  }

  TEST_CASE("induction from P2 agrees with the case-by-case oracle on the whole grid") {
    for (const auto& tau : mp4test::mp_p2_grid()) {
      const auto want = mp4test::lemma_mp_p2(tau);
      const auto got = mp4test::verdict_of(reduce_mp_p2(tau));
      CHECK(got.constituents == want.constituents);
      CHECK(got.direct_sum == want.direct_sum);
    }
  }

  TEST_CASE("selected composition series") {
    const auto r = reduce_mp_p1({"u", true, Rational(3, 2)}, {Kind::odd_weil, "u"});
    REQUIRE(r.constituents.size() == 2);
    CHECK(render(r.constituents[0]) == "St~^-_{chi_u,psi}");
    CHECK(render(r.constituents[1]) == "J_{P1,psi}(chi_u|.|^{3/2}, omega^-_{W1,psi_u})");
    const auto t = reduce_mp_p2({GL2Inducing::Kind::steinberg, "1", true, true, Rational(0)});
    CHECK(t.direct_sum);
    CHECK(render(t.constituents[0]) == "pi_gen,psi(st_1)");
    CHECK(reduce_mp_p1({"u", true, Rational(1)}, {Kind::odd_weil, "u"}).irreducible);
  }

  TEST_CASE("SO oracles") {
    const auto q1 = reduce_so_plus_q1({"p", true, Rational(3, 2)}, {SOPlusInducing::Kind::steinberg, "p"});
    REQUIRE(q1.constituents.size() == 2);
    CHECK(render(q1.constituents[0]) == "SO(V2+):St^+_{chi_p}");
    CHECK(reduce_so_minus_q1({"p", true, Rational(1, 2)}, {true, "p"}).irreducible);
    CHECK_FALSE(reduce_so_minus_q1({"p", true, Rational(1, 2)}, {true, "u"}).irreducible);
    CHECK(reduce_so_plus_q2({GL2Inducing::Kind::supercuspidal, "tau", true, true, Rational(0)}).direct_sum);
  }

  TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(reduce_mp_p1({"1", true, Rational(1, 2)}, {}, PlaceKind::real), Error);
    CHECK_THROWS_AS(reduce_mp_p2({GL2Inducing::Kind::steinberg, "1", true, true, Rational(-1)}), Error);
    try {
      reduce_so_plus_q2({}, PlaceKind::complex);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::unsupported);
    }
  }
}
