#include "mp4io/report.hpp"

#include <sstream>

#include "mp4/error.hpp"
#include "mp4/ktypes.hpp"
#include "mp4/residual.hpp"
#include "mp4/shimura.hpp"

namespace mp4io {

using nlohmann::json;

namespace {

json character_json(const mp4::F2Character& c) { return c.label(); }

json group_json(const mp4::ComponentGroup& g) {
  json rel = json::array();
  for (auto r : g.relations) {
    std::string text;
    for (int i = 0; i < g.size(); ++i) {
      if (r & (1u << i)) text += (text.empty() ? "" : "+") + g.basis[i];
    }
    rel.push_back(text);
  }
  return {{"basis", g.basis}, {"relations", rel}, {"rank", g.rank()}};
}

json parameter_json(const mp4::ClassifiedParameter& phi) {
  json s = json::array();
  for (const auto& r : phi.summands) s.push_back(mp4::summand_label(r));
  return {{"type", std::string(mp4::display_name(phi.type))}, {"summands", s}};
}

json packet_json(const mp4::LocalPacket& lp) {
  json entries = json::array();
  for (const auto& e : lp.entries) {
    json j = {{"label", character_json(e.label)},
              {"member", descriptor_json(e.member)},
              {"zero", e.member.is_zero()},
              {"in_L_packet", e.in_L_packet}};
    if (!e.supported) j["supported"] = false;
    entries.push_back(j);
  }
  return {{"place", lp.place.id},
          {"kind", std::string(mp4::to_string(lp.place.kind))},
          {"type", std::string(mp4::display_name(lp.type))},
          {"entries", entries}};
}

void outline(const json& v, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << pad << k << ":\n";
        outline(x, depth + 1, out);
      } else {
        out << pad << k << ": " << (x.is_structured() ? x.dump() : scalar(x)) << "\n";
      }
    }
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& x : v) flat = flat && !x.is_structured();
    if (flat) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar(x);
      out << pad << line << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << pad << "- [" << i << "]\n";
      outline(v[i], depth + 1, out);
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

}  // namespace

json descriptor_json(const mp4::RepDescriptor& d) { return mp4::render(mp4::normalize(d)); }

json validate_report(const mp4::Scenario& scenario) {
  mp4::validate_scenario(scenario);
  const auto elements = scenario.all_elements();
  json pairs = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      pairs.push_back({{"a", elements[i].name},
                       {"b", elements[j].name},
                       {"product", mp4::value(mp4::hilbert_product(scenario.places, elements[i],
                                                                   elements[j]))}});
    }
  }
  json data = json::array();
  for (const auto& d : scenario.cuspidal) data.push_back(d.name);
  return {{"scenario", scenario.name},
          {"valid", true},
          {"reciprocity", pairs},
          {"data_checked", data}};
}

json classify_report(const mp4::Scenario& scenario) {
  const mp4::GlobalPacket gp = make_global_packet(scenario);
  json eps = json::object();
  for (int i = 0; i < gp.group.size(); ++i) eps[gp.group.basis[i]] = mp4::value(gp.eps_tilde.values[i]);
  json j = parameter_json(gp.phi);
  j["scenario"] = scenario.name;
  j["eps_tilde"] = eps;
  return j;
}

json component_group_report(const mp4::GlobalPacket& gp) {
  json local = json::array();
  for (const auto& loc : gp.locals) {
    json image = json::array();
    for (std::size_t i = 0; i < loc.image.size(); ++i) {
      std::string text;
      for (int k = 0; k < loc.group.size(); ++k) {
        if (loc.image[i] & (1u << k)) text += (text.empty() ? "" : "+") + loc.group.basis[k];
      }
      image.push_back({{"global", gp.group.basis[i]}, {"local", text.empty() ? "0" : text}});
    }
    local.push_back({{"place", loc.param.place.id}, {"group", group_json(loc.group)}, {"image", image}});
  }
  return {{"scenario", gp.scenario->name},
          {"parameter", parameter_json(gp.phi)},
          {"group", group_json(gp.group)},
          {"eps_tilde", character_json(gp.eps_tilde)},
          {"local", local}};
}

json enumerate_report(const mp4::GlobalPacket& gp, bool include_vanishing) {
  const auto constituents = enumerate_constituents(gp, include_vanishing);
  json places = json::array();
  for (const auto& loc : gp.locals) places.push_back(loc.param.place.id);
  json list = json::array();
  std::size_t nonvanishing = 0;
  for (const auto& c : constituents) {
    json eta = json::object();
    json members = json::object();
    for (std::size_t v = 0; v < gp.locals.size(); ++v) {
      const std::string& id = gp.locals[v].param.place.id;
      eta[id] = character_json(c.eta.components[v]);
      members[id] = descriptor_json(c.local_members[v]);
    }
    list.push_back({{"eta", eta},
                    {"members", members},
                    {"multiplicity", c.multiplicity},
                    {"nonvanishing", c.nonvanishing}});
    if (c.nonvanishing) ++nonvanishing;
  }
  return {{"scenario", gp.scenario->name},
          {"type", std::string(mp4::display_name(gp.phi.type))},
          {"places", places},
          {"count", nonvanishing},
          {"constituents", list}};
}

json packet_report(const mp4::GlobalPacket& gp, const std::string& place_id) {
  for (const auto& p : gp.packets) {
    if (p.place.id == place_id) return packet_json(p);
  }
  throw mp4::validation_error("UnknownPlace", "unknown place '" + place_id + "'");
}

json residual_report(const mp4::Scenario& scenario) {
  mp4::validate_scenario(scenario);
  json list = json::array();
  for (const auto& r : mp4::residual_spectrum(scenario)) {
    json summands = json::array();
    for (const auto& s : r.parameter.summands) summands.push_back({{"summand", s.datum}, {"d", s.d}});
    json local = json::object();
    for (std::size_t v = 0; v < scenario.places.size(); ++v) {
      local[scenario.places[v].id] = descriptor_json(r.local[v]);
    }
    json j = {{"family", std::string(mp4::to_string(r.family))},
              {"support", r.support},
              {"parameter", summands},
              {"type", std::string(mp4::display_name(r.type))},
              {"local", local}};
    if (!r.source.empty()) j["source"] = r.source;
    list.push_back(j);
  }
  return {{"scenario", scenario.name}, {"constituents", list}};
}

json self_test_report(const mp4::GlobalPacket& gp) {
  const std::size_t formula = enumerate_constituents(gp).size();
  const std::uint64_t oracle = brute_force_count(gp);
  return {{"scenario", gp.scenario->name},
          {"formula_count", formula},
          {"oracle_count", oracle},
          {"pass", formula == oracle}};
}

json shimura_report(const std::optional<std::string>& row) {
  json rows = json::array();
  for (const auto& r : mp4::shimura_table()) {
    if (row && r.tag != *row) continue;
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"label", e.label},
                         {"mp", descriptor_json(e.mp)},
                         {"so_space", mp4::to_string(e.so_space)},
                         {"so", descriptor_json(e.so)}});
    }
    rows.push_back({{"row", r.tag}, {"bijective", mp4::shimura_row_is_bijective(r)}, {"entries", entries}});
  }
  if (row && rows.empty()) mp4::shimura_row(*row);  // throws RowNotFound
  return {{"shimura", rows}};
}

json ktype_catalog_report() {
  using mp4::Sign;
  json ds = json::array();
  for (int a2 : {3, 5, 7}) {
    for (int b2 = 1; b2 <= a2; b2 += 2) {
      for (Sign e1 : {Sign::plus, Sign::minus}) {
        for (Sign e2 : {Sign::plus, Sign::minus}) {
          if (a2 == b2 && e1 != e2) continue;
          ds.push_back({{"a", mp4::to_string(mp4::Rational(a2, 2))},
                        {"b", mp4::to_string(mp4::Rational(b2, 2))},
                        {"label", "(" + mp4::to_string(e1) + "," + mp4::to_string(e2) + ")"},
                        {"lowest", mp4::to_string(mp4::lowest_discrete_series(a2, b2, e1, e2))}});
        }
      }
    }
  }
  json jp1 = json::array();
  for (int a2 : {-5, -3, -1, 1, 3, 5}) {
    for (Sign e : {Sign::plus, Sign::minus}) {
      jp1.push_back({{"a", mp4::to_string(mp4::Rational(a2, 2))},
                     {"chi_minus_one", mp4::to_string(e)},
                     {"lowest", mp4::to_string(mp4::lowest_jp1(a2, e))}});
    }
  }
  json jp2 = json::array();
  for (int a2 = 1; a2 <= 6; ++a2) {
    json types = json::array();
    for (const auto& t : mp4::lowest_jp2(a2)) types.push_back(mp4::to_string(t));
    jp2.push_back({{"a", mp4::to_string(mp4::Rational(a2, 2))}, {"lowest", types}});
  }
  json jb = json::array();
  for (Sign e1 : {Sign::plus, Sign::minus}) {
    for (Sign e2 : {Sign::plus, Sign::minus}) {
      jb.push_back({{"signs", "(" + mp4::to_string(e1) + "," + mp4::to_string(e2) + ")"},
                    {"lowest", mp4::to_string(mp4::lowest_jb(e1, e2))}});
    }
  }
  return {{"discrete_series", ds}, {"J_P1", jp1}, {"J_P2", jp2}, {"J_B", jb}};
}

json export_tables(const mp4::Scenario* scenario) {
  json out = shimura_report(std::nullopt);
  out["ktype_catalog"] = ktype_catalog_report();
  if (scenario) {
    const mp4::GlobalPacket gp = make_global_packet(*scenario);
    json packets = json::array();
    for (const auto& p : gp.packets) packets.push_back(packet_json(p));
    out["scenario"] = scenario->name;
    out["packets"] = packets;
  }
  return out;
}

std::string to_text(const json& report) {
  std::ostringstream out;
  outline(report, 0, out);
  return out.str();
}

}  // namespace mp4io
