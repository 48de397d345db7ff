#include "mp4/residual.hpp"

#include <algorithm>
#include <set>

#include "mp4/packets.hpp"

namespace mp4 {

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

// J_{B,ψ}(χ|·|^{1/2}) on Mp₂ or ω⁻_{W₁,ψ_a}, the local components of an Mp₂
// cuspidal representation with A-parameter χ ⊠ S₂.
RepDescriptor weil_type_component(const Mp2Weil& pi, const SquareClass& chi,
                                  const std::string& place_id) {
  if (std::find(pi.S.begin(), pi.S.end(), place_id) != pi.S.end()) {
    return omega(1, Sign::minus, label(chi));
  }
  return quotient("", {segment(character_name(chi), kHalf)}, {}, "Mp2");
}

std::vector<const GlobalElement*> residual_characters(const Scenario& scenario) {
  std::vector<const GlobalElement*> out;
  auto add = [&](const GlobalElement* e) {
    for (const auto* seen : out) {
      if (same_character(*seen, *e)) return;
    }
    out.push_back(e);
  };
  if (scenario.residual_characters) {
    for (const auto& name : *scenario.residual_characters) add(&scenario.element(name));
  } else {
    for (const auto& e : scenario.elements) add(&scenario.element(e.name));
  }
  return out;
}

}  // namespace

std::string_view to_string(ResidualFamily f) {
  switch (f) {
    case ResidualFamily::p1_principal: return "P1-pr";
    case ResidualFamily::p1_sk: return "P1-SK";
    case ResidualFamily::p1_hps: return "P1-HPS";
    case ResidualFamily::p2: return "P2";
    case ResidualFamily::b_principal: return "B-pr";
    case ResidualFamily::b_hps: return "B-HPS";
  }
  return "";
}

std::vector<ResidualConstituent> residual_spectrum(const Scenario& scenario) {
  std::vector<ResidualConstituent> out;
  const auto chars = residual_characters(scenario);
  auto emit = [&](ResidualFamily family, std::string support, std::string source,
                  AParameter parameter, std::vector<RepDescriptor> local) {
    for (auto& d : local) d = normalize(d);
    const ParamType type = classify(scenario, parameter).type;
    out.push_back({family, std::move(support), std::move(source), std::move(parameter), type,
                   std::move(local)});
  };

  // P1: Mp₂ cuspidal data of Weil type.
  for (const auto& pi : scenario.mp2_weil) {
    const GlobalElement& chi = scenario.element(pi.chi);
    std::vector<RepDescriptor> local;
    for (const auto& p : scenario.places) {
      const SquareClass& c = chi.at(p.id);
      local.push_back(quotient("", {segment(character_name(c), kThreeHalves)},
                               {weil_type_component(pi, c, p.id)}));
    }
    emit(ResidualFamily::p1_principal, "P1", pi.name, {{{pi.chi, 4}}}, std::move(local));
  }
  for (const auto* chi : chars) {
    for (const auto& pi : scenario.mp2_cuspidal) {
      const CuspidalDatum& rho = scenario.datum(pi.rho);
      auto it = rho.L_half_nonzero.find(chi->name);
      if (it == rho.L_half_nonzero.end() || !it->second) continue;
      std::vector<RepDescriptor> local;
      for (const auto& p : scenario.places) {
        local.push_back(quotient("", {segment(character_name(chi->at(p.id)), kHalf)},
                                 {mp2_member(shape_at(rho, p), rho.name, pi.labels.at(p.id))}));
      }
      emit(ResidualFamily::p1_sk, "P1", pi.name, {{{rho.name, 1}, {chi->name, 2}}}, std::move(local));
    }
  }
  for (const auto* chi1 : chars) {
    for (const auto& pi : scenario.mp2_weil) {
      const GlobalElement& chi2 = scenario.element(pi.chi);
      if (same_character(*chi1, chi2)) continue;
      const bool separated = std::all_of(pi.S.begin(), pi.S.end(), [&](const std::string& v) {
        return chi1->at(v) != chi2.at(v);
      });
      if (!separated) continue;
      std::vector<RepDescriptor> local;
      for (const auto& p : scenario.places) {
        local.push_back(quotient("", {segment(character_name(chi1->at(p.id)), kHalf)},
                                 {weil_type_component(pi, chi2.at(p.id), p.id)}));
      }
      emit(ResidualFamily::p1_hps, "P1", pi.name, {{{chi1->name, 2}, {pi.chi, 2}}},
           std::move(local));
    }
  }

  // P2: dihedral data with nontrivial quadratic central character.
  for (const auto& rho : scenario.cuspidal) {
    if (rho.gl_rank != 2 || !rho.dihedral || rho.duality != Duality::orthogonal) continue;
    const GlobalElement* central = scenario.find_element(rho.central_char);
    if (!central || same_character(*central, scenario.element("1"))) continue;
    AParameter parameter{{{rho.name, 2}}};
    const ClassifiedParameter phi = classify(scenario, parameter);
    std::vector<RepDescriptor> local;
    for (const auto& p : scenario.places) {
      local.push_back(l_packet_descriptor(localize(scenario, phi, p).param));
    }
    emit(ResidualFamily::p2, "P2", rho.name, std::move(parameter), std::move(local));
  }

  // B.
  for (const auto* chi : chars) {
    std::vector<RepDescriptor> local;
    for (const auto& p : scenario.places) {
      const std::string c = character_name(chi->at(p.id));
      local.push_back(quotient("", {segment(c, kThreeHalves), segment(c, kHalf)}));
    }
    emit(ResidualFamily::b_principal, "B", "", {{{chi->name, 4}}}, std::move(local));
  }
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = i + 1; j < chars.size(); ++j) {
      std::vector<RepDescriptor> local;
      for (const auto& p : scenario.places) {
        local.push_back(quotient("", {segment(character_name(chars[i]->at(p.id)), kHalf),
                                      segment(character_name(chars[j]->at(p.id)), kHalf)}));
      }
      emit(ResidualFamily::b_hps, "B", "", {{{chars[i]->name, 2}, {chars[j]->name, 2}}},
           std::move(local));
    }
  }
  return out;
}

bool same_parameter(const Scenario& scenario, const AParameter& x, const AParameter& y) {
  if (x.summands.size() != y.summands.size()) return false;
  auto same = [&](const Summand& a, const Summand& b) {
    if (a.d != b.d) return false;
    if (a.datum == b.datum) return true;
    const GlobalElement* ea = scenario.find_element(a.datum);
    const GlobalElement* eb = scenario.find_element(b.datum);
    return ea && eb && same_character(*ea, *eb);
  };
  std::vector<bool> used(y.summands.size(), false);
  for (const auto& a : x.summands) {
    bool found = false;
    for (std::size_t j = 0; j < y.summands.size() && !found; ++j) {
      if (!used[j] && same(a, y.summands[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace mp4
