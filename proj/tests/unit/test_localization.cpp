#include <doctest.h>

#include "fixtures.hpp"
#include "mp4/localization.hpp"

using namespace mp4;

namespace {

Localization local_at(const Scenario& sc, const std::string& id) {
  const auto phi = classify(sc, *sc.parameter);
  return localize(sc, phi, sc.place(id));
}

}  // namespace

TEST_SUITE("localization") {
  TEST_CASE("local characters are listed lexicographically, + before -") {
    ComponentGroup g{{"a1", "a2"}, {}};
    const auto cs = local_characters(g);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0].label() == "(+,+)");
    CHECK(cs[1].label() == "(+,-)");
    CHECK(cs[2].label() == "(-,+)");
    CHECK(cs[3].label() == "(-,-)");
    for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].index() == i);
  }

  TEST_CASE("relations cut the character list") {
    ComponentGroup g{{"a1", "a2"}, {0b11}};
    const auto cs = local_characters(g);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].label() == "(+,+)");
    CHECK(cs[1].label() == "(-,-)");
    ComponentGroup sk{{"a1", "a2"}, {0b01}};
    const auto ks = local_characters(sk);
    REQUIRE(ks.size() == 2);
    CHECK(ks[0].label() == "(+,+)");
    CHECK(ks[1].label() == "(+,-)");
  }

  TEST_CASE("SK with reducible rho forces eps1 = +") {
    const auto sc = fixture("saito_kurokawa.json");
    const auto at2 = local_at(sc, "2");
    CHECK(at2.group.relations == std::vector<std::uint32_t>{0b01});
    const auto at5 = local_at(sc, "5");
    CHECK(at5.group.relations.empty());
    CHECK(at5.param.rho_root == Sign::plus);
    CHECK(at5.param.rho_twisted_root == Sign::minus);
  }

  TEST_CASE("HPS identifies the generators where chi_a = chi_b") {
    auto sc = fixture("howe_ps.json");
    for (const auto& p : sc.places) CHECK(local_at(sc, p.id).group.relations.empty());
    sc.places.push_back({"c", PlaceKind::complex});
    for (auto& e : sc.elements) e.classes["c"] = make_class(PlaceKind::complex, 0);
    const auto c = local_at(sc, "c");
    CHECK(c.group.relations == std::vector<std::uint32_t>{0b11});
  }

  TEST_CASE("Soudry local groups follow the shape of rho_v") {
    const auto sc = fixture("soudry.json");
    const auto inf = local_at(sc, "inf");
    CHECK(inf.group.size() == 1);
    CHECK(inf.image == std::vector<std::uint32_t>{0b1});
    const auto two = local_at(sc, "2");
    CHECK(two.group.size() == 2);
    CHECK(two.image == std::vector<std::uint32_t>{0b11});
    const auto five = local_at(sc, "5");
    CHECK(five.group.size() == 0);
    CHECK(five.image == std::vector<std::uint32_t>{0});
  }

  TEST_CASE("tempered slots: one generator per symplectic irreducible constituent") {
    const auto sc = fixture("tempered.json");
    const auto three = local_at(sc, "3");
    // rho1 is a principal series at 3, rho2 is irreducible
    CHECK(three.group.size() == 1);
    CHECK(three.image == std::vector<std::uint32_t>{0, 0b1});
    const auto five = local_at(sc, "5");
    CHECK(five.group.size() == 2);
    CHECK(five.image == std::vector<std::uint32_t>{0b01, 0b10});
  }

  TEST_CASE("pullback composes with the localization map") {
    const auto sc = fixture("soudry.json");
    const auto two = local_at(sc, "2");
    const F2Character eta{{Sign::minus, Sign::plus}};
    CHECK(pullback(two, eta).values == std::vector<Sign>{Sign::minus});
    const F2Character both{{Sign::minus, Sign::minus}};
    CHECK(pullback(two, both).values == std::vector<Sign>{Sign::plus});
  }
}
