#include <doctest.h>

#include "fixtures.hpp"
#include "mp4/error.hpp"
#include "mp4/multiplicity.hpp"

using namespace mp4;
using nlohmann::json;

namespace {

json minimal() {
  return json::parse(R"({
    "schema_version": 1,
    "places": [{"id": "inf", "kind": "real"}, {"id": "2", "kind": "nonarch-dyadic"}],
    "elements": [{"name": "a", "classes": {"inf": "1", "2": "5"}}],
    "parameter": [{"summand": "a", "d": 4}]
  })");
}

std::string schema_message(const json& doc) {
  try {
    mp4io::scenario_from_json(doc);
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::schema) return e.what();
    return std::string("non-schema error: ") + e.what();
  }
  return "no error";
}

}  // namespace

TEST_SUITE("scenario_json") {
  TEST_CASE("a minimal document loads") {
    const auto sc = mp4io::scenario_from_json(minimal());
    CHECK(sc.places.size() == 2);
    CHECK(sc.parameter->summands.size() == 1);
    CHECK_NOTHROW(validate_scenario(sc));
  }

  TEST_CASE("schema errors carry a JSON path") {
    auto doc = minimal();
    doc["schema_version"] = 2;
    CHECK(schema_message(doc).find("$.schema_version") != std::string::npos);

    doc = minimal();
    doc["places"][1]["colour"] = "red";
    CHECK(schema_message(doc).find("$.places[1].colour: unknown key") != std::string::npos);

    doc = minimal();
    doc["elements"][0]["classes"]["2"] = "7";
    CHECK(schema_message(doc).find("$.elements[0].classes.2") != std::string::npos);

    doc = minimal();
    doc.erase("places");
    CHECK(schema_message(doc).find("missing required key 'places'") != std::string::npos);

    doc = minimal();
    doc["parameter"][0]["d"] = "four";
    CHECK(schema_message(doc).find("$.parameter[0].d") != std::string::npos);
  }

  TEST_CASE("an undeclared place is a validation error") {
    auto doc = minimal();
    doc["elements"][0]["classes"]["3"] = "1";
    try {
      mp4io::scenario_from_json(doc);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::validation);
      CHECK(e.code() == "UnknownPlace");
    }
  }

  TEST_CASE("signs and rationals") {
    CHECK(mp4io::parse_sign("+", "$") == Sign::plus);
    CHECK(mp4io::parse_sign("-1", "$") == Sign::minus);
    CHECK(mp4io::parse_sign(-1, "$") == Sign::minus);
    CHECK_THROWS_AS(mp4io::parse_sign(0, "$"), Error);
    CHECK(mp4io::parse_rational("3/2", "$") == Rational(3, 2));
    CHECK(mp4io::parse_rational(2, "$") == Rational(2));
    CHECK_THROWS_AS(mp4io::parse_rational("x/2", "$"), Error);
    CHECK(mp4io::rational_to_json(Rational(1, 4)) == "1/4");
  }

  TEST_CASE("fixtures survive a round trip") {
    for (const auto& name : {"principal.json", "saito_kurokawa.json", "howe_ps.json", "soudry.json",
                             "tempered.json"}) {
      const auto sc = fixture(name);
      const auto back = mp4io::scenario_from_json(mp4io::scenario_to_json(sc));
      CHECK(mp4io::scenario_to_json(back) == mp4io::scenario_to_json(sc));
      CHECK(enumerate_constituents(make_global_packet(back)).size() ==
            enumerate_constituents(make_global_packet(sc)).size());
    }
  }

  TEST_CASE("malformed files are schema errors") {
    try {
      mp4io::load_scenario(std::string(MP4_SCENARIO_DIR) + "/does-not-exist.json");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::schema);
    }
  }
}
