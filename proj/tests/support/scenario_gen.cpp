#include "scenario_gen.hpp"

#include <stdexcept>

#include "mp4/error.hpp"

namespace mp4test {

namespace {

using mp4::PlaceKind;
using mp4::Sign;

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Sign random_sign(std::mt19937_64& rng) { return coin(rng) ? Sign::plus : Sign::minus; }

bool reciprocal(const std::vector<mp4::Place>& places, const std::vector<mp4::GlobalElement>& es) {
  return !mp4::validate_reciprocity(places, es).has_value();
}

std::vector<mp4::GlobalElement> with_builtins(const std::vector<mp4::Place>& places,
                                              std::vector<mp4::GlobalElement> es) {
  es.insert(es.begin(), mp4::minus_one_element(places));
  es.insert(es.begin(), mp4::trivial_element(places));
  es.front().name = "1";
  es[1].name = "-1";
  return es;
}

// A symplectic GL₂ shape; twist is the SK character at this place, if any.
mp4::LocalRhoShape symplectic_shape(std::mt19937_64& rng, const mp4::Place& place,
                                    const std::string& twist_name,
                                    const std::optional<mp4::SquareClass>& twist,
                                    const std::string& key_prefix) {
  if (place.kind == PlaceKind::complex) return mp4::PrincipalSeries{};
  if (place.kind == PlaceKind::real) {
    if (coin(rng, 0.7)) return mp4::RealDiscrete{uniform(rng, 1, 4)};
    return mp4::PrincipalSeries{"mu_" + place.id, coin(rng) ? mp4::Rational(0) : mp4::Rational(1, 4),
                                random_sign(rng)};
  }
  switch (uniform(rng, 0, 2)) {
    case 0: {
      mp4::IrreducibleSymplectic s;
      s.eps = random_sign(rng);
      if (!twist_name.empty()) s.eps_twists[twist_name] = random_sign(rng);
      s.key = key_prefix + place.id;
      return s;
    }
    case 1: {
      if (twist && coin(rng)) return mp4::SteinbergTwist{*twist};
      return mp4::SteinbergTwist{pick(rng, mp4::all_classes(place.kind))};
    }
    default:
      return mp4::PrincipalSeries{"mu_" + place.id, coin(rng) ? mp4::Rational(0) : mp4::Rational(1, 4),
                                  random_sign(rng)};
  }
}

mp4::CuspidalDatum symplectic_datum(std::mt19937_64& rng, const std::string& name,
                                    const std::vector<mp4::Place>& places,
                                    const mp4::GlobalElement* twist) {
  mp4::CuspidalDatum d;
  d.name = name;
  d.gl_rank = 2;
  d.duality = mp4::Duality::symplectic;
  for (const auto& p : places) {
    std::optional<mp4::SquareClass> tw;
    if (twist) tw = twist->at(p.id);
    if (p.kind == PlaceKind::complex && coin(rng)) continue;  // use the default shape
    d.local[p.id] = symplectic_shape(rng, p, twist ? twist->name : "", tw, name + "_");
  }
  Sign root = Sign::plus;
  Sign twisted = Sign::plus;
  for (const auto& p : places) {
    const auto shape = mp4::shape_at(d, p);
    root = root * mp4::local_root(p, shape);
    if (twist) twisted = twisted * mp4::local_twisted_root(p, shape, twist->name, twist->at(p.id));
  }
  d.global_root = root;
  if (twist) d.twisted_roots[twist->name] = twisted;
  return d;
}

mp4::CuspidalDatum rank4_datum(std::mt19937_64& rng, const std::string& name,
                               const std::vector<mp4::Place>& places) {
  mp4::CuspidalDatum d;
  d.name = name;
  d.gl_rank = 4;
  d.duality = mp4::Duality::symplectic;
  Sign root = Sign::plus;
  for (const auto& p : places) {
    if (p.kind == PlaceKind::complex && coin(rng)) continue;
    if (mp4::is_nonarchimedean(p.kind) && coin(rng)) {
      mp4::IrreducibleSymplectic s;
      s.eps = random_sign(rng);
      s.key = name + "_" + p.id;
      d.local[p.id] = s;
    } else {
      mp4::Constituents c;
      const int symplectic = uniform(rng, 0, 2);
      for (int i = 0; i < symplectic; ++i) c.pieces.push_back({name + "_" + p.id + "_" + std::to_string(i), true});
      if (symplectic < 2) c.pieces.push_back({name + "_" + p.id + "_o", false});
      c.eps = random_sign(rng);
      d.local[p.id] = c;
    }
  }
  for (const auto& p : places) root = root * mp4::local_root(p, mp4::shape_at(d, p));
  d.global_root = root;
  return d;
}

mp4::CuspidalDatum orthogonal_datum(std::mt19937_64& rng, const std::string& name,
                                    const std::vector<mp4::Place>& places,
                                    const mp4::GlobalElement& central) {
  mp4::CuspidalDatum d;
  d.name = name;
  d.gl_rank = 2;
  d.duality = mp4::Duality::orthogonal;
  d.dihedral = true;
  d.central_char = central.name;
  for (const auto& p : places) {
    const mp4::SquareClass c = central.at(p.id);
    if (p.kind == PlaceKind::complex) continue;
    const int choice = uniform(rng, 0, 2);
    if (p.kind == PlaceKind::real) {
      if (c.bits != 0 && choice != 0) {
        d.local[p.id] = mp4::IrreducibleOrthogonalDihedral{"", uniform(rng, 1, 3)};
      } else {
        const auto a = pick(rng, mp4::all_classes(p.kind));
        d.local[p.id] = mp4::QuadraticPair{a, a * c};
      }
      continue;
    }
    if (choice == 0) {
      d.local[p.id] = mp4::IrreducibleOrthogonalDihedral{name + "_" + p.id, 0};
    } else if (choice == 1) {
      const auto a = pick(rng, mp4::all_classes(p.kind));
      d.local[p.id] = mp4::QuadraticPair{a, a * c};
    } else if (c.trivial()) {
      d.local[p.id] = mp4::ReducibleOrthogonal{"nu_" + p.id};
    } else {
      const auto a = pick(rng, mp4::all_classes(p.kind));
      d.local[p.id] = mp4::QuadraticPair{a, a * c};
    }
  }
  return d;
}

mp4::Scenario attempt(std::mt19937_64& rng, mp4::ParamType type, const GenOptions& options) {
  mp4::Scenario sc;
  sc.name = "random-" + std::string(mp4::to_string(type));
  sc.places = random_places(rng, uniform(rng, options.min_places, options.max_places), options);

  auto builtins = with_builtins(sc.places, {});
  auto add_element = [&](const std::string& name) -> const mp4::GlobalElement& {
    auto known = builtins;
    known.insert(known.end(), sc.elements.begin(), sc.elements.end());
    sc.elements.push_back(random_element(rng, name, sc.places, known));
    return sc.elements.back();
  };
  auto summand_name = [&](const mp4::GlobalElement& e) {
    for (const auto& b : builtins) {
      if (mp4::same_character(b, e)) return b.name;
    }
    return e.name;
  };

  mp4::AParameter phi;
  switch (type) {
    case mp4::ParamType::principal: {
      const auto& a = add_element("a");
      phi.summands = {{summand_name(a), 4}};
      break;
    }
    case mp4::ParamType::howe_ps: {
      const auto& a = add_element("a");
      const std::string an = summand_name(a);
      const auto b = add_element("b");
      const std::string bn = summand_name(b);
      phi.summands = {{an, 2}, {bn, 2}};
      break;
    }
    case mp4::ParamType::saito_kurokawa: {
      const auto a = add_element("a");
      const std::string an = summand_name(a);
      mp4::GlobalElement twist = a;
      twist.name = an;
      sc.cuspidal.push_back(symplectic_datum(rng, "rho", sc.places, &twist));
      phi.summands = {{"rho", 1}, {an, 2}};
      if (coin(rng)) std::swap(phi.summands[0], phi.summands[1]);
      break;
    }
    case mp4::ParamType::soudry: {
      const auto c = add_element("c");
      sc.cuspidal.push_back(orthogonal_datum(rng, "tau", sc.places, c));
      phi.summands = {{"tau", 2}};
      break;
    }
    case mp4::ParamType::tempered: {
      if (coin(rng, 0.25)) {
        sc.cuspidal.push_back(rank4_datum(rng, "Pi", sc.places));
        phi.summands = {{"Pi", 1}};
      } else {
        sc.cuspidal.push_back(symplectic_datum(rng, "rho1", sc.places, nullptr));
        mp4::CuspidalDatum second = symplectic_datum(rng, "rho2", sc.places, nullptr);
        // Sometimes let both summands share a local representation.
        for (const auto& p : sc.places) {
          if (!mp4::is_nonarchimedean(p.kind) || !coin(rng, 0.3)) continue;
          auto it = sc.cuspidal[0].local.find(p.id);
          if (it != sc.cuspidal[0].local.end()) second.local[p.id] = it->second;
        }
        Sign root = Sign::plus;
        for (const auto& p : sc.places) root = root * mp4::local_root(p, mp4::shape_at(second, p));
        second.global_root = root;
        sc.cuspidal.push_back(second);
        phi.summands = {{"rho1", 1}, {"rho2", 1}};
      }
      break;
    }
  }
  sc.parameter = phi;
  return sc;
}

}  // namespace

std::vector<mp4::Place> random_places(std::mt19937_64& rng, int count, const GenOptions& options) {
  std::vector<PlaceKind> kinds = {PlaceKind::odd_1mod4, PlaceKind::odd_3mod4, PlaceKind::dyadic,
                                  PlaceKind::real};
  if (options.allow_complex) kinds.push_back(PlaceKind::complex);
  for (int tries = 0; tries < 1000; ++tries) {
    std::vector<mp4::Place> places;
    for (int i = 0; i < count; ++i) {
      const PlaceKind k = options.only_kind ? *options.only_kind : pick(rng, kinds);
      places.push_back({"v" + std::to_string(i), k});
    }
    if (reciprocal(places, with_builtins(places, {}))) return places;
  }
  throw std::runtime_error("could not draw places satisfying reciprocity");
}

mp4::GlobalElement random_element(std::mt19937_64& rng, const std::string& name,
                                  const std::vector<mp4::Place>& places,
                                  const std::vector<mp4::GlobalElement>& others) {
  for (int tries = 0; tries < 2000; ++tries) {
    mp4::GlobalElement e;
    e.name = name;
    for (const auto& p : places) e.classes[p.id] = pick(rng, mp4::all_classes(p.kind));
    auto all = others;
    all.push_back(e);
    if (reciprocal(places, all)) return e;
  }
  throw std::runtime_error("could not draw a reciprocal element");
}

mp4::Scenario random_scenario(std::mt19937_64& rng, mp4::ParamType type, const GenOptions& options) {
  for (int tries = 0; tries < 500; ++tries) {
    mp4::Scenario sc = attempt(rng, type, options);
    try {
      mp4::validate_scenario(sc);
      if (mp4::classify(sc, *sc.parameter).type == type) return sc;
    } catch (const mp4::Error&) {
      // e.g. HPS drew two equal characters; draw again
    }
  }
  throw std::runtime_error("could not draw a valid scenario of type " + std::string(mp4::to_string(type)));
}

}  // namespace mp4test
