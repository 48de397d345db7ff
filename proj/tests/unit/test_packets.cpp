#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "mp4/multiplicity.hpp"

using namespace mp4;

namespace {

const Sign P = Sign::plus;
const Sign M = Sign::minus;

LocalPacket packet_at(const Scenario& sc, const std::string& id) {
  const auto phi = classify(sc, *sc.parameter);
  return local_packet(localize(sc, phi, sc.place(id)));
}

std::string member(const LocalPacket& p, std::vector<Sign> label) {
  return render(normalize(p.at(F2Character{std::move(label)}).member));
}

}  // namespace

TEST_SUITE("packets") {
  TEST_CASE("HPS: only the (-,-) member at a real place with chi_a(-1) != chi_b(-1) vanishes") {
    const auto sc = fixture("howe_ps.json");
    const auto inf = packet_at(sc, "inf");
    CHECK(member(inf, {M, M}) == "0");
    CHECK(member(inf, {P, P}) == "J_{B,psi}(|.|^{1/2}, chi_-1|.|^{1/2})");
    for (const auto& id : {"2", "5", "13"}) {
      for (const auto& e : packet_at(sc, id).entries) CHECK_FALSE(e.member.is_zero());
    }
    CHECK(member(packet_at(sc, "5"), {M, P}) == "J_{P1,psi}(chi_p|.|^{1/2}, omega^-_{W1,psi})");
  }

  TEST_CASE("HPS at a complex place keeps the pair (+,+), (-,-) and kills (-,-)") {
    auto sc = fixture("howe_ps.json");
    sc.places.push_back({"c", PlaceKind::complex});
    for (auto& e : sc.elements) e.classes["c"] = make_class(PlaceKind::complex, 0);
    const auto c = packet_at(sc, "c");
    REQUIRE(c.entries.size() == 2);
    CHECK_FALSE(c.entries[0].member.is_zero());
    CHECK(c.entries[1].member.is_zero());
  }

  TEST_CASE("SK: Steinberg rho_v with chi_b = chi_a kills (+,-)") {
    const auto sc = fixture("saito_kurokawa.json");
    const auto five = packet_at(sc, "5");
    CHECK(member(five, {P, M}) == "0");
    CHECK(member(five, {P, P}) == "J_{P1,psi}(chi_p|.|^{1/2}, st~_{chi_p,psi})");
    CHECK(member(five, {M, P}) == "J_{P1,psi}(chi_p|.|^{1/2}, omega^-_{W1,psi_p})");
    CHECK(member(five, {M, M}) == "pi_ng,psi(st_chi_p)");
    for (const auto& id : {"inf", "2", "3"}) {
      for (const auto& e : packet_at(sc, id).entries) CHECK_FALSE(e.member.is_zero());
    }
  }

  TEST_CASE("SK at a real place: lowest K-types of the discrete series members") {
    const auto sc = fixture("saito_kurokawa.json");
    const auto inf = packet_at(sc, "inf");
    CHECK(member(inf, {P, M}) == "pi_Lambda(5/2,-1/2)");
    CHECK(member(inf, {M, M}) == "pi_Lambda(-5/2,-5/2)");
  }

  TEST_CASE("Mp2 packet members relative to psi") {
    const auto b = make_class(PlaceKind::odd_1mod4, 0b10);
    CHECK(render(normalize(mp2_member(SteinbergTwist{b}, "rho", P))) == "st~_{chi_p,psi}");
    CHECK(render(normalize(mp2_member(SteinbergTwist{b}, "rho", M))) == "omega^-_{W1,psi_p}");
    const auto one = make_class(PlaceKind::odd_1mod4, 0);
    // for the trivial character the labels swap
    CHECK(render(normalize(mp2_member(SteinbergTwist{one}, "rho", P))) == "omega^-_{W1,psi}");
    CHECK(render(normalize(mp2_member(SteinbergTwist{one}, "rho", M))) == "st~_{1,psi}");
  }

  TEST_CASE("the all-plus member is the L-packet member for nontempered types") {
    for (const auto& name : {"principal.json", "saito_kurokawa.json", "howe_ps.json", "soudry.json"}) {
      const auto sc = fixture(name);
      const auto gp = make_global_packet(sc);
      for (std::size_t i = 0; i < gp.locals.size(); ++i) {
        const auto& plus = gp.packets[i].entries.front();
        CHECK(plus.label == trivial_character(gp.locals[i].group));
        CHECK(plus.in_L_packet);
        CHECK(equivalent(plus.member, l_packet_descriptor(gp.locals[i].param)));
      }
    }
  }

  TEST_CASE("packets are multiplicity free") {
    for (const auto& name : {"principal.json", "saito_kurokawa.json", "howe_ps.json", "soudry.json",
                             "tempered.json"}) {
      const auto gp = make_global_packet(fixture(name));
      for (const auto& p : gp.packets) {
        std::set<std::string> seen;
        for (const auto& e : p.entries) {
          if (e.member.is_zero()) continue;
          CHECK_MESSAGE(seen.insert(render(normalize(e.member))).second, name, " ", p.place.id);
        }
      }
    }
  }

  TEST_CASE("theta-lift route agrees with the table zeros") {
    for (const auto& name : {"saito_kurokawa.json", "howe_ps.json", "soudry.json"}) {
      const auto gp = make_global_packet(fixture(name));
      for (std::size_t i = 0; i < gp.packets.size(); ++i) {
        for (const auto& e : gp.packets[i].entries) {
          const auto route = theta_route_nonzero(gp.locals[i].param, e.label);
          if (route) CHECK(*route == !e.member.is_zero());
        }
      }
    }
  }

  TEST_CASE("quaternion data of SK labels") {
    // irreducible rho_v: eps = eps1 eps(rho) eps(rho chi_a) chi_a(-1)
    CHECK(sk_quaternion_data(P, P, P, P, P, false) == QuaternionData{P, P});
    CHECK(sk_quaternion_data(M, P, P, P, P, false).eps == M);
    CHECK(sk_quaternion_data(P, P, P, P, P, true).eps == P);
    CHECK(hps_quaternion_data(M, M, P).eps == M);
  }

  TEST_CASE("principal packets have two members with the L-packet member first") {
    const auto gp = make_global_packet(fixture("principal.json"));
    for (const auto& p : gp.packets) {
      REQUIRE(p.entries.size() == 2);
      CHECK(p.entries[0].in_L_packet);
      CHECK_FALSE(p.entries[1].in_L_packet);
      CHECK_FALSE(p.entries[1].member.is_zero());
    }
  }
}
