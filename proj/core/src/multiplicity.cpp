#include "mp4/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mp4/error.hpp"

namespace mp4 {

namespace {

std::uint32_t as_mask(const F2Character& c) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == Sign::minus) m |= 1u << i;
  }
  return m;
}

struct LocalOption {
  const PacketEntry* entry;
  std::uint32_t pullback;  // Δ-component as a mask over the global basis
};

}  // namespace

GlobalPacket make_global_packet(const Scenario& scenario) {
  validate_scenario(scenario);
  if (!scenario.parameter) {
    throw validation_error("MissingParameter", "scenario '" + scenario.name + "' has no parameter");
  }
  GlobalPacket gp;
  gp.scenario = &scenario;
  gp.phi = classify(scenario, *scenario.parameter);
  gp.group = component_group(gp.phi);
  gp.eps_tilde = epsilon_tilde(gp.phi);
  gp.locals = localize_all(scenario, gp.phi);
  for (const auto& loc : gp.locals) gp.packets.push_back(local_packet(loc));
  return gp;
}

F2Character diagonal_pullback(const GlobalPacket& gp, const AdelicCharacter& eta) {
  if (eta.components.size() != gp.locals.size()) {
    throw validation_error("InvalidCharacter", "η needs one component per place");
  }
  F2Character out = trivial_character(gp.group);
  for (std::size_t v = 0; v < gp.locals.size(); ++v) {
    const F2Character local = pullback(gp.locals[v], eta.components[v]);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] * local.values[i];
  }
  return out;
}

int multiplicity(const GlobalPacket& gp, const AdelicCharacter& eta) {
  return diagonal_pullback(gp, eta) == gp.eps_tilde ? 1 : 0;
}

std::vector<Constituent> enumerate_constituents(const GlobalPacket& gp, bool include_vanishing) {
  const std::size_t n = gp.locals.size();
  const std::uint32_t states = 1u << gp.group.size();

  std::vector<std::vector<LocalOption>> options(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : gp.packets[v].entries) {
      if (!include_vanishing && e.member.is_zero()) continue;
      options[v].push_back({&e, as_mask(pullback(gp.locals[v], e.label))});
    }
  }

  // reachable[v][m]: places v..n-1 can contribute the pullback m.
  std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(states, false));
  reachable[n][0] = true;
  for (std::size_t v = n; v-- > 0;) {
    for (std::uint32_t m = 0; m < states; ++m) {
      if (!reachable[v + 1][m]) continue;
      for (const auto& o : options[v]) reachable[v][m ^ o.pullback] = true;
    }
  }

  std::vector<Constituent> out;
  const std::uint32_t target = as_mask(gp.eps_tilde);
  if (!reachable[0][target]) return out;

  std::vector<const PacketEntry*> chosen(n);
  auto dfs = [&](auto&& self, std::size_t v, std::uint32_t need) -> void {
    if (v == n) {
      Constituent c;
      c.multiplicity = 1;
      for (const PacketEntry* e : chosen) {
        c.eta.components.push_back(e->label);
        c.local_members.push_back(e->member);
        if (e->member.is_zero()) c.nonvanishing = false;
      }
      out.push_back(std::move(c));
      return;
    }
    for (const auto& o : options[v]) {
      const std::uint32_t rest = need ^ o.pullback;
      if (!reachable[v + 1][rest]) continue;
      chosen[v] = o.entry;
      self(self, v + 1, rest);
    }
  };
  dfs(dfs, 0, target);

  // Order by place id, then by character index.
  std::vector<std::size_t> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return gp.locals[a].param.place.id < gp.locals[b].param.place.id;
  });
  std::stable_sort(out.begin(), out.end(), [&](const Constituent& x, const Constituent& y) {
    for (std::size_t v : by_id) {
      const auto ix = x.eta.components[v].index();
      const auto iy = y.eta.components[v].index();
      if (ix != iy) return ix < iy;
    }
    return false;
  });
  return out;
}

std::uint64_t brute_force_count(const GlobalPacket& gp) {
  const std::size_t n = gp.locals.size();
  if (n > kBruteForcePlaceCap) {
    throw unsupported_error("ScenarioTooLarge", "brute force is capped at " +
                                                    std::to_string(kBruteForcePlaceCap) + " places");
  }
  std::vector<std::vector<F2Character>> chars(n);
  for (std::size_t v = 0; v < n; ++v) chars[v] = local_characters(gp.locals[v].group);

  std::uint64_t count = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    AdelicCharacter eta;
    for (std::size_t v = 0; v < n; ++v) eta.components.push_back(chars[v][idx[v]]);
    if (multiplicity(gp, eta) == 1) {
      bool nonzero = true;
      for (std::size_t v = 0; v < n && nonzero; ++v) {
        nonzero = !gp.packets[v].at(eta.components[v]).member.is_zero();
      }
      if (nonzero) ++count;
    }
    std::size_t v = 0;
    while (v < n && ++idx[v] == chars[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  return count;
}

}  // namespace mp4
