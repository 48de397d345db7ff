#include "mp4/localization.hpp"

#include "mp4/error.hpp"

namespace mp4 {

namespace {

std::vector<TemperedSlot> slots_of(int summand, const std::string& name,
                                   const LocalRhoShape& shape) {
  std::vector<TemperedSlot> out;
  if (const auto* s = std::get_if<IrreducibleSymplectic>(&shape)) {
    out.push_back({summand, s->key.empty() ? name : s->key});
  } else if (const auto* s = std::get_if<SteinbergTwist>(&shape)) {
    out.push_back({summand, "St(" + character_name(s->b) + ")"});
  } else if (const auto* s = std::get_if<RealDiscrete>(&shape)) {
    out.push_back({summand, "D_" + to_string(Rational(2 * s->kappa - 1, 2))});
  } else if (const auto* s = std::get_if<Constituents>(&shape)) {
    for (const auto& piece : s->pieces) {
      if (piece.symplectic) out.push_back({summand, piece.key});
    }
  }
  return out;
}

}  // namespace

Localization localize(const Scenario& scenario, const ClassifiedParameter& phi,
                      const Place& place) {
  Localization loc;
  LocalParam& lp = loc.param;
  lp.place = place;
  lp.type = phi.type;
  ComponentGroup& g = loc.group;

  switch (phi.type) {
    case ParamType::principal: {
      const auto& s = phi.summands[0];
      lp.a = s.element->at(place.id);
      lp.a_name = s.name;
      g.basis = {"a"};
      loc.image = {0b1};
      break;
    }
    case ParamType::saito_kurokawa: {
      const auto& rho = phi.summands[0];
      const auto& chi = phi.summands[1];
      lp.rho = shape_at(*rho.datum, place);
      lp.rho_name = rho.name;
      lp.a = chi.element->at(place.id);
      lp.a_name = chi.name;
      lp.rho_root = local_root(place, *lp.rho);
      lp.rho_twisted_root = local_twisted_root(place, *lp.rho, chi.name, lp.a);
      g.basis = {"a1", "a2"};
      if (!is_irreducible(*lp.rho)) g.relations.push_back(0b01);
      loc.image = {0b01, 0b10};
      break;
    }
    case ParamType::howe_ps: {
      lp.a = phi.summands[0].element->at(place.id);
      lp.b = phi.summands[1].element->at(place.id);
      lp.a_name = phi.summands[0].name;
      lp.b_name = phi.summands[1].name;
      g.basis = {"a1", "a2"};
      if (lp.a == lp.b) g.relations.push_back(0b11);
      loc.image = {0b01, 0b10};
      break;
    }
    case ParamType::soudry: {
      const auto& rho = phi.summands[0];
      lp.rho = shape_at(*rho.datum, place);
      lp.rho_name = rho.name;
      if (const auto* q = std::get_if<QuadraticPair>(&*lp.rho)) {
        lp.a = q->a;
        lp.b = q->b;
        lp.a_name = label(q->a);
        lp.b_name = label(q->b);
        g.basis = {"a1", "a2"};
        if (q->a == q->b) g.relations.push_back(0b11);
        loc.image = {0b11};
      } else if (std::holds_alternative<ReducibleOrthogonal>(*lp.rho)) {
        loc.image = {0};
      } else {
        g.basis = {"a1"};
        loc.image = {0b1};
      }
      break;
    }
    case ParamType::tempered: {
      loc.image.assign(phi.summands.size(), 0);
      for (std::size_t i = 0; i < phi.summands.size(); ++i) {
        const auto& s = phi.summands[i];
        lp.tempered_shapes.push_back(shape_at(*s.datum, place));
        lp.tempered_names.push_back(s.name);
        for (auto& slot : slots_of(static_cast<int>(i), s.name, lp.tempered_shapes.back())) {
          const auto bit = static_cast<std::uint32_t>(lp.slots.size());
          loc.image[i] |= 1u << bit;
          lp.slots.push_back(slot);
          g.basis.push_back(slot.key);
        }
      }
      // A constituent occurring twice contributes one generator.
      for (std::size_t j = 0; j < lp.slots.size(); ++j) {
        for (std::size_t k = j + 1; k < lp.slots.size(); ++k) {
          if (lp.slots[j].key == lp.slots[k].key) {
            g.relations.push_back((1u << j) | (1u << k));
            break;
          }
        }
      }
      break;
    }
  }
  (void)scenario;
  return loc;
}

std::vector<Localization> localize_all(const Scenario& scenario, const ClassifiedParameter& phi) {
  std::vector<Localization> out;
  out.reserve(scenario.places.size());
  for (const auto& place : scenario.places) out.push_back(localize(scenario, phi, place));
  return out;
}

std::vector<F2Character> local_characters(const ComponentGroup& g) {
  std::vector<F2Character> out;
  const int n = g.size();
  for (std::uint32_t idx = 0; idx < (1u << n); ++idx) {
    F2Character c;
    for (int i = 0; i < n; ++i) c.values.push_back(sign_of_bit((idx >> (n - 1 - i)) & 1u));
    if (c.respects(g)) out.push_back(std::move(c));
  }
  return out;
}

F2Character pullback(const Localization& loc, const F2Character& eta_v) {
  F2Character out;
  for (std::uint32_t img : loc.image) out.values.push_back(eta_v(img));
  return out;
}

}  // namespace mp4
