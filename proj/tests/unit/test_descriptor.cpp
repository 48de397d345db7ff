#include <doctest.h>

#include "mp4/descriptor.hpp"

using namespace mp4;

TEST_SUITE("descriptor") {
  TEST_CASE("elementary Weil representations of rank 2 expand to Langlands quotients") {
    CHECK(render(normalize(omega(2, Sign::plus, "u"))) == "J_{B,psi}(chi_u|.|^{3/2}, chi_u|.|^{1/2})");
    CHECK(render(normalize(omega(2, Sign::minus, "1"))) == "J_{P1,psi}(|.|^{3/2}, omega^-_{W1,psi})");
    CHECK(render(normalize(omega(1, Sign::minus, "p"))) == "omega^-_{W1,psi_p}");
  }

  TEST_CASE("nested Mp2 quotients merge when exponents stay ordered") {
    const auto inner = quotient("", {segment("chi_u", Rational(1, 2))}, {}, "Mp2");
    const auto outer = quotient("", {segment("1", Rational(3, 2))}, {inner});
    CHECK(render(normalize(outer)) == "J_{B,psi}(|.|^{3/2}, chi_u|.|^{1/2})");
    // a larger inner exponent stays nested
    const auto big = quotient("", {segment("chi_u", Rational(3, 2))}, {}, "Mp2");
    const auto kept = quotient("", {segment("1", Rational(1, 2))}, {big});
    CHECK(render(normalize(kept)) == "J_{P1,psi}(|.|^{1/2}, Mp2:J_{B,psi}(chi_u|.|^{3/2}))");
  }

  TEST_CASE("segments sort by exponent, then name") {
    const auto a = quotient("", {segment("chi_u", Rational(1, 2)), segment("1", Rational(1, 2))});
    const auto b = quotient("", {segment("1", Rational(1, 2)), segment("chi_u", Rational(1, 2))});
    CHECK(equivalent(a, b));
    CHECK(render(normalize(a)) == "J_{B,psi}(|.|^{1/2}, chi_u|.|^{1/2})");
  }

  TEST_CASE("zero propagates") {
    CHECK(normalize(quotient("", {segment("1", Rational(1, 2))}, {zero()})).is_zero());
    ThetaLiftDesc t;
    t.source = {zero()};
    CHECK(normalize(t).is_zero());
    CHECK(render(normalize(direct_sum({zero(), named("b"), named("a")}))) == "a (+) b");
  }

  TEST_CASE("parabolic labels are recomputed") {
    CHECK(render(normalize(quotient("X", {segment("tau", Rational(1, 2), 2)}))) ==
          "J_{P2,psi}(tau|det|^{1/2})");
    CHECK(render(normalize(quotient("Q1", {segment("1", Rational(1, 2))}, {named("s")}, "SO(V2+)", ""))) ==
          "SO(V2+):J_{Q1}(|.|^{1/2}, s)");
  }

  TEST_CASE("limits of discrete series render their lowest K-type") {
    CHECK(render(LimitOrDiscreteSeriesReal{{7, -3}}) == "pi_Lambda(7/2,-3/2)");
  }
}
