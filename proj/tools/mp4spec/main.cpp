#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mp4/error.hpp"
#include "mp4/ktypes.hpp"
#include "mp4/multiplicity.hpp"
#include "mp4/reducibility.hpp"
#include "mp4/shimura.hpp"
#include "mp4io/report.hpp"
#include "mp4io/scenario_json.hpp"

namespace {

using nlohmann::json;

enum class Format { json, text };

int exit_code(mp4::ErrorCategory c) {
  switch (c) {
    case mp4::ErrorCategory::validation: return 2;
    case mp4::ErrorCategory::unsupported: return 3;
    case mp4::ErrorCategory::schema: return 4;
  }
  return 1;
}

mp4::Sign sign_arg(const std::string& text, const std::string& what) {
  return mp4io::parse_sign(json(text), what);
}

mp4::Rational rational_arg(const std::string& text, const std::string& what) {
  return mp4io::parse_rational(json(text), what);
}

struct ReduceArgs {
  std::string oracle;
  std::string chi = "1";
  bool chi_generic = false;
  std::string s = "0";
  std::string kind = "supercuspidal";
  std::string tag;
  bool self_dual = false;
  bool central_trivial = false;
  bool so_other = false;
  std::string place_kind = "nonarch-odd-1mod4";
};

json reducibility_json(const mp4::Reducibility& r) {
  json c = json::array();
  for (const auto& d : r.constituents) c.push_back(mp4io::descriptor_json(d));
  return {{"irreducible", r.irreducible}, {"direct_sum", r.direct_sum}, {"constituents", c}};
}

json run_reduce(const ReduceArgs& a) {
  const mp4::PlaceKind pk = mp4::parse_place_kind(a.place_kind);
  const mp4::Rational s = rational_arg(a.s, "--s");
  const mp4::GLCharacter chi{a.chi, !a.chi_generic, s};
  mp4::Reducibility r;
  if (a.oracle == "mp-p1") {
    mp4::Mp2Inducing pi;
    if (a.kind == "supercuspidal") {
      pi.kind = mp4::Mp2Inducing::Kind::supercuspidal;
    } else if (a.kind == "odd-weil") {
      pi.kind = mp4::Mp2Inducing::Kind::odd_weil;
    } else if (a.kind == "even-weil") {
      pi.kind = mp4::Mp2Inducing::Kind::even_weil;
    } else if (a.kind == "steinberg") {
      pi.kind = mp4::Mp2Inducing::Kind::steinberg;
    } else {
      throw mp4::schema_error("--kind: unknown Mp2 inducing kind '" + a.kind + "'");
    }
    pi.tag = a.tag;
    r = mp4::reduce_mp_p1(chi, pi, pk);
  } else if (a.oracle == "mp-p2" || a.oracle == "so-plus-q2") {
    mp4::GL2Inducing tau;
    if (a.kind == "supercuspidal") {
      tau.kind = mp4::GL2Inducing::Kind::supercuspidal;
    } else if (a.kind == "steinberg") {
      tau.kind = mp4::GL2Inducing::Kind::steinberg;
    } else {
      throw mp4::schema_error("--kind: unknown GL2 inducing kind '" + a.kind + "'");
    }
    tau.tag = a.tag;
    tau.self_dual = a.self_dual;
    tau.central_trivial = a.central_trivial;
    tau.s = s;
    r = a.oracle == "mp-p2" ? mp4::reduce_mp_p2(tau, pk) : mp4::reduce_so_plus_q2(tau, pk);
  } else if (a.oracle == "so-plus-q1") {
    mp4::SOPlusInducing sigma;
    if (a.kind == "supercuspidal") {
      sigma.kind = mp4::SOPlusInducing::Kind::supercuspidal;
    } else if (a.kind == "steinberg") {
      sigma.kind = mp4::SOPlusInducing::Kind::steinberg;
    } else {
      throw mp4::schema_error("--kind: unknown SO(V1+) inducing kind '" + a.kind + "'");
    }
    sigma.tag = a.tag;
    r = mp4::reduce_so_plus_q1(chi, sigma, pk);
  } else if (a.oracle == "so-minus-q1") {
    r = mp4::reduce_so_minus_q1(chi, {!a.so_other, a.tag.empty() ? "1" : a.tag}, pk);
  } else {
    throw mp4::schema_error("--oracle: unknown oracle '" + a.oracle + "'");
  }
  json out = reducibility_json(r);
  out["oracle"] = a.oracle;
  return out;
}

struct KTypeArgs {
  int p = 0;
  int q = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::string eps = "+";
  std::string delta = "+";
  std::vector<std::string> weights;
};

mp4::KTypeO ktype_o(const KTypeArgs& k) {
  mp4::KTypeO mu{k.p, k.q, k.a, sign_arg(k.eps, "--eps"), k.b, sign_arg(k.delta, "--delta")};
  mp4::validate(mu);
  return mp4::canonical(mu);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic A-packets and multiplicities for Mp4"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string scenario_path;
  Format format = Format::json;
  bool verbose = false;
  std::string place;
  app.add_option("--scenario", scenario_path, "Scenario JSON file");
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}));
  app.add_flag("--verbose", verbose, "Include vanishing tuples and extra detail");
  app.add_option("--place", place, "Place id");

  auto* validate = app.add_subcommand("validate", "Check reciprocity and sign products");
  auto* classify = app.add_subcommand("classify", "Parameter type and the character eps~");
  auto* group = app.add_subcommand("component-group", "S_phi, local groups and maps");
  auto* enumerate = app.add_subcommand("enumerate", "Constituents with multiplicity one");
  auto* packet = app.add_subcommand("packet", "Local packet table at a place");
  std::string packet_place;
  packet->add_option("place_id", packet_place, "Place id (or use --place)");

  auto* correspond = app.add_subcommand("correspond", "Local Shimura correspondence table");
  std::optional<std::string> row;
  std::string direction = "mp-to-so";
  std::optional<std::string> corr_label;
  correspond->add_option("--row", row, "Row tag, e.g. chi_a(x)S4");
  correspond->add_option("--direction", direction, "mp-to-so or so-to-mp")
      ->check(CLI::IsMember({"mp-to-so", "so-to-mp"}));
  correspond->add_option("--label", corr_label, "Entry label, e.g. (+,-)");

  auto* reduce = app.add_subcommand("reduce", "Reducibility of degenerate principal series");
  ReduceArgs ra;
  reduce->add_option("--oracle", ra.oracle, "mp-p1, mp-p2, so-plus-q1, so-plus-q2, so-minus-q1")
      ->required();
  reduce->add_option("--chi", ra.chi, "Character label");
  reduce->add_flag("--chi-generic", ra.chi_generic, "chi is not quadratic");
  reduce->add_option("--s", ra.s, "Exponent s (integer or p/q)");
  reduce->add_option("--kind", ra.kind, "Inducing representation kind");
  reduce->add_option("--tag", ra.tag, "Twist or name of the inducing representation");
  reduce->add_flag("--self-dual", ra.self_dual, "GL2 datum is self-dual");
  reduce->add_flag("--central-trivial", ra.central_trivial, "GL2 datum has trivial central character");
  reduce->add_flag("--so-other", ra.so_other, "SO(V1-) datum is not a character");
  reduce->add_option("--place-kind", ra.place_kind, "Place kind");

  auto* ktype = app.add_subcommand("ktype", "K-type degrees, joint harmonics and catalog");
  ktype->require_subcommand(1);
  KTypeArgs ka;
  auto add_o = [&](CLI::App* sub) {
    sub->add_option("--p", ka.p)->required();
    sub->add_option("--q", ka.q)->required();
    sub->add_option("--a", ka.a)->delimiter(',');
    sub->add_option("--b", ka.b)->delimiter(',');
    sub->add_option("--eps", ka.eps);
    sub->add_option("--delta", ka.delta);
  };
  auto* kdeg = ktype->add_subcommand("degree", "Degree of an O(p) x O(q) type");
  add_o(kdeg);
  auto* kharm = ktype->add_subcommand("harmonics", "Matching Mp(2n) type");
  add_o(kharm);
  kharm->add_option("--n", ka.n)->required();
  auto* kinv = ktype->add_subcommand("inverse", "Matching O(p) x O(q) type");
  kinv->add_option("--p", ka.p)->required();
  kinv->add_option("--q", ka.q)->required();
  kinv->add_option("--weights", ka.weights, "Half-integers, e.g. 5/2,1/2")->delimiter(',')->required();
  auto* kcat = ktype->add_subcommand("catalog", "Lowest K-types of real Mp4 representations");

  auto* residual = app.add_subcommand("residual", "Residual spectrum constituents");
  auto* exporter = app.add_subcommand("export-tables", "All tables as JSON");
  auto* selftest = app.add_subcommand("self-test", "Formula count against brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto emit = [&](const json& report) {
    if (format == Format::json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << mp4io::to_text(report);
    }
  };

  try {
    std::optional<mp4::Scenario> scenario;
    auto need_scenario = [&]() -> const mp4::Scenario& {
      if (!scenario) {
        if (scenario_path.empty()) throw mp4::schema_error("--scenario is required for this subcommand");
        scenario = mp4io::load_scenario(scenario_path);
      }
      return *scenario;
    };

    if (validate->parsed()) {
      emit(mp4io::validate_report(need_scenario()));
    } else if (classify->parsed()) {
      emit(mp4io::classify_report(need_scenario()));
    } else if (group->parsed()) {
      emit(mp4io::component_group_report(mp4::make_global_packet(need_scenario())));
    } else if (enumerate->parsed()) {
      emit(mp4io::enumerate_report(mp4::make_global_packet(need_scenario()), verbose));
    } else if (packet->parsed()) {
      const std::string id = packet_place.empty() ? place : packet_place;
      if (id.empty()) throw mp4::schema_error("packet needs a place id");
      emit(mp4io::packet_report(mp4::make_global_packet(need_scenario()), id));
    } else if (correspond->parsed()) {
      if (corr_label) {
        if (!row) throw mp4::schema_error("--label needs --row");
        const auto dir = direction == "mp-to-so" ? mp4::ShimuraDirection::mp_to_so
                                                 : mp4::ShimuraDirection::so_to_mp;
        emit({{"row", *row},
              {"direction", direction},
              {"label", *corr_label},
              {"image", mp4io::descriptor_json(mp4::shimura_correspondence(*row, dir, *corr_label))}});
      } else {
        emit(mp4io::shimura_report(row));
      }
    } else if (reduce->parsed()) {
      emit(run_reduce(ra));
    } else if (kdeg->parsed()) {
      const auto mu = ktype_o(ka);
      emit({{"ktype", mp4::to_string(mu)},
            {"degree", mp4::degree_o(mu)},
            {"k_prime", mp4::k_prime(mu)},
            {"l_prime", mp4::l_prime(mu)}});
    } else if (kharm->parsed()) {
      const auto mu = ktype_o(ka);
      const auto image = mp4::joint_harmonics(mu, ka.n);
      emit({{"ktype", mp4::to_string(mu)},
            {"n", ka.n},
            {"image", mp4::to_string(image)},
            {"degree", mp4::degree_o(mu)}});
    } else if (kinv->parsed()) {
      mp4::KTypeMp mu;
      for (const auto& w : ka.weights) {
        const mp4::Rational r = rational_arg(w, "--weights");
        if ((2 * r).denominator() != 1) throw mp4::schema_error("--weights: '" + w + "' is not a half-integer");
        mu.doubled.push_back(static_cast<int>((2 * r).numerator()));
      }
      mp4::validate(mu);
      emit({{"ktype", mp4::to_string(mu)}, {"image", mp4::to_string(mp4::joint_harmonics_inverse(mu, ka.p, ka.q))}});
    } else if (kcat->parsed()) {
      emit(mp4io::ktype_catalog_report());
    } else if (residual->parsed()) {
      emit(mp4io::residual_report(need_scenario()));
    } else if (exporter->parsed()) {
      emit(mp4io::export_tables(scenario_path.empty() ? nullptr : &need_scenario()));
    } else if (selftest->parsed()) {
      const json report = mp4io::self_test_report(mp4::make_global_packet(need_scenario()));
      emit(report);
      return report.at("pass").get<bool>() ? 0 : 1;
    }
  } catch (const mp4::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return exit_code(e.category());
  }
  return 0;
}
