#include "mp4/parameters.hpp"

#include <algorithm>
#include <set>

#include "mp4/error.hpp"

namespace mp4 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Error invalid_parameter(const std::string& message) {
  return validation_error("InvalidParameter", message);
}

int f2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 32; ++bit) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [bit](std::uint32_t r) { return (r >> bit) & 1u; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != static_cast<std::size_t>(rank) && ((rows[i] >> bit) & 1u)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

Sign parity_sign(int k) { return (k % 2 == 0) ? Sign::plus : Sign::minus; }

}  // namespace

std::string_view to_string(Duality d) {
  return d == Duality::symplectic ? "symplectic" : "orthogonal";
}

std::string shape_name(const LocalRhoShape& shape) {
  return std::visit(
      overloaded{
          [](const IrreducibleSymplectic&) { return std::string("irreducible-symplectic"); },
          [](const SteinbergTwist&) { return std::string("steinberg"); },
          [](const PrincipalSeries&) { return std::string("principal-series"); },
          [](const QuadraticPair&) { return std::string("quadratic-pair"); },
          [](const RealDiscrete&) { return std::string("real-discrete"); },
          [](const IrreducibleOrthogonalDihedral&) {
            return std::string("irreducible-orthogonal-dihedral");
          },
          [](const ReducibleOrthogonal&) { return std::string("reducible-orthogonal"); },
          [](const Constituents&) { return std::string("constituents"); },
      },
      shape);
}

bool is_irreducible(const LocalRhoShape& shape) {
  return std::holds_alternative<IrreducibleSymplectic>(shape) ||
         std::holds_alternative<SteinbergTwist>(shape) ||
         std::holds_alternative<RealDiscrete>(shape) ||
         std::holds_alternative<IrreducibleOrthogonalDihedral>(shape);
}

std::string_view to_string(ParamType t) {
  switch (t) {
    case ParamType::tempered: return "tempered";
    case ParamType::saito_kurokawa: return "saito-kurokawa";
    case ParamType::howe_ps: return "howe-ps";
    case ParamType::soudry: return "soudry";
    case ParamType::principal: return "principal";
  }
  return "";
}

std::string_view display_name(ParamType t) {
  switch (t) {
    case ParamType::tempered: return "Tempered";
    case ParamType::saito_kurokawa: return "Saito-Kurokawa";
    case ParamType::howe_ps: return "Howe-Piatetski-Shapiro";
    case ParamType::soudry: return "Soudry";
    case ParamType::principal: return "Principal";
  }
  return "";
}

int ComponentGroup::rank() const { return size() - f2_rank(relations); }

Sign F2Character::operator()(std::uint32_t element) const {
  Sign s = Sign::plus;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if ((element >> i) & 1u) s = s * values[i];
  }
  return s;
}

bool F2Character::respects(const ComponentGroup& g) const {
  if (values.size() != g.basis.size()) return false;
  return std::all_of(g.relations.begin(), g.relations.end(),
                     [this](std::uint32_t r) { return (*this)(r) == Sign::plus; });
}

std::string F2Character::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out + ")";
}

std::uint32_t F2Character::index() const {
  std::uint32_t idx = 0;
  for (Sign s : values) idx = (idx << 1) | (bit(s) ? 1u : 0u);
  return idx;
}

F2Character trivial_character(const ComponentGroup& g) {
  return F2Character{std::vector<Sign>(g.basis.size(), Sign::plus)};
}

const Place* Scenario::find_place(const std::string& id) const {
  for (const auto& p : places) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const Place& Scenario::place(const std::string& id) const {
  if (const Place* p = find_place(id)) return *p;
  throw validation_error("UnknownPlace", "unknown place '" + id + "'");
}

std::vector<GlobalElement> Scenario::all_elements() const {
  std::vector<GlobalElement> out{trivial_element(places), minus_one_element(places)};
  out.insert(out.end(), elements.begin(), elements.end());
  return out;
}

const GlobalElement* Scenario::find_element(const std::string& name) const {
  for (const auto& e : elements) {
    if (e.name == name) return &e;
  }
  if (name != "1" && name != "-1") return nullptr;
  if (builtins_.empty() || builtin_places_ != places) {
    builtin_places_ = places;
    builtins_ = {trivial_element(places), minus_one_element(places)};
  }
  return name == "1" ? &builtins_[0] : &builtins_[1];
}

const GlobalElement& Scenario::element(const std::string& name) const {
  if (const GlobalElement* e = find_element(name)) return *e;
  throw validation_error("UnknownElement", "unknown global element '" + name + "'");
}

const CuspidalDatum* Scenario::find_datum(const std::string& name) const {
  for (const auto& d : cuspidal) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const CuspidalDatum& Scenario::datum(const std::string& name) const {
  if (const CuspidalDatum* d = find_datum(name)) return *d;
  throw validation_error("UnknownDatum", "unknown cuspidal datum '" + name + "'");
}

std::string summand_label(const ResolvedSummand& s) {
  return s.name + " x S" + std::to_string(s.d);
}

ClassifiedParameter classify(const Scenario& scenario, const AParameter& phi) {
  std::vector<ResolvedSummand> resolved;
  int total = 0;
  for (const auto& s : phi.summands) {
    if (s.d < 1) throw invalid_parameter("summand '" + s.datum + "' has d < 1");
    ResolvedSummand r;
    r.name = s.datum;
    r.d = s.d;
    if (const CuspidalDatum* datum = scenario.find_datum(s.datum)) {
      r.datum = datum;
      r.n = datum->gl_rank;
      r.duality = datum->duality;
    } else if (const GlobalElement* e = scenario.find_element(s.datum)) {
      r.element = e;
      r.n = 1;
      r.duality = Duality::orthogonal;
    } else {
      throw invalid_parameter("summand '" + s.datum + "' is neither a datum nor an element");
    }
    const Duality needed = (r.d % 2 == 1) ? Duality::symplectic : Duality::orthogonal;
    if (r.duality != needed) {
      throw invalid_parameter(summand_label(r) + ": d = " + std::to_string(r.d) + " needs a " +
                              std::string(to_string(needed)) + " summand, got " +
                              std::string(to_string(r.duality)));
    }
    total += r.n * r.d;
    resolved.push_back(r);
  }
  if (total != 4) {
    throw invalid_parameter("sum of n_i d_i is " + std::to_string(total) + ", expected 4");
  }
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    for (std::size_t j = i + 1; j < resolved.size(); ++j) {
      const auto& x = resolved[i];
      const auto& y = resolved[j];
      if (x.d != y.d) continue;
      const bool same = (x.element && y.element) ? same_character(*x.element, *y.element)
                                                 : (x.datum && y.datum && x.datum == y.datum);
      if (same) {
        throw invalid_parameter("summands " + summand_label(x) + " and " + summand_label(y) +
                                " coincide");
      }
    }
  }

  const bool all_d1 = std::all_of(resolved.begin(), resolved.end(),
                                  [](const ResolvedSummand& r) { return r.d == 1; });
  if (all_d1) return {ParamType::tempered, resolved};

  if (resolved.size() == 1) {
    const auto& r = resolved[0];
    if (r.n == 1 && r.d == 4) return {ParamType::principal, resolved};
    if (r.n == 2 && r.d == 2) {
      if (!r.datum->dihedral) {
        throw invalid_parameter(summand_label(r) + ": Soudry type needs a dihedral datum");
      }
      const GlobalElement* central = scenario.find_element(r.datum->central_char);
      if (!central || same_character(*central, scenario.element("1"))) {
        throw invalid_parameter(summand_label(r) +
                                ": Soudry type needs a nontrivial quadratic central character");
      }
      return {ParamType::soudry, resolved};
    }
  }
  if (resolved.size() == 2) {
    auto is_rho = [](const ResolvedSummand& r) { return r.n == 2 && r.d == 1; };
    auto is_chi2 = [](const ResolvedSummand& r) { return r.n == 1 && r.d == 2; };
    if (is_rho(resolved[0]) && is_chi2(resolved[1])) return {ParamType::saito_kurokawa, resolved};
    if (is_chi2(resolved[0]) && is_rho(resolved[1])) {
      return {ParamType::saito_kurokawa, {resolved[1], resolved[0]}};
    }
    if (is_chi2(resolved[0]) && is_chi2(resolved[1])) return {ParamType::howe_ps, resolved};
  }
  throw invalid_parameter("parameter does not match any elliptic type for Mp4");
}

ComponentGroup component_group(const ClassifiedParameter& phi) {
  ComponentGroup g;
  for (const auto& s : phi.summands) g.basis.push_back(summand_label(s));
  return g;
}

F2Character epsilon_tilde(const ClassifiedParameter& phi) {
  F2Character eps{std::vector<Sign>(phi.summands.size(), Sign::plus)};
  switch (phi.type) {
    case ParamType::saito_kurokawa: {
      const CuspidalDatum& rho = *phi.summands[0].datum;
      const std::string& chi = phi.summands[1].name;
      auto it = rho.twisted_roots.find(chi);
      if (it == rho.twisted_roots.end()) {
        throw validation_error("MissingSignData",
                               "datum '" + rho.name + "' has no twisted root for '" + chi + "'");
      }
      eps.values[0] = rho.global_root * it->second;
      eps.values[1] = it->second;
      break;
    }
    case ParamType::tempered:
      for (std::size_t i = 0; i < phi.summands.size(); ++i) {
        eps.values[i] = phi.summands[i].datum->global_root;
      }
      break;
    case ParamType::howe_ps:
    case ParamType::soudry:
    case ParamType::principal: break;
  }
  return eps;
}

Sign local_root(const Place& place, const LocalRhoShape& shape) {
  return std::visit(
      overloaded{
          [](const IrreducibleSymplectic& s) { return s.eps; },
          [&](const SteinbergTwist& s) {
            return s.b.trivial() ? Sign::minus : chi_minus_one(place, s.b);
          },
          [](const PrincipalSeries& s) { return s.chi_minus_one; },
          [](const RealDiscrete& s) { return parity_sign(s.kappa); },
          [](const Constituents& s) { return s.eps; },
          [&](const auto&) -> Sign {
            throw validation_error("MissingSignData", "no local root number for an orthogonal "
                                                      "shape at place " + place.id);
          },
      },
      shape);
}

Sign local_twisted_root(const Place& place, const LocalRhoShape& shape,
                        const std::string& element_name, const SquareClass& twist) {
  return std::visit(
      overloaded{
          [&](const IrreducibleSymplectic& s) {
            auto it = s.eps_twists.find(element_name);
            if (it == s.eps_twists.end()) {
              throw validation_error("MissingSignData", "no local twisted root for '" +
                                                            element_name + "' at place " +
                                                            place.id);
            }
            return it->second;
          },
          [&](const SteinbergTwist& s) {
            const SquareClass c = s.b * twist;
            return c.trivial() ? Sign::minus : chi_minus_one(place, c);
          },
          [&](const PrincipalSeries& s) { return s.chi_minus_one * chi_minus_one(place, twist); },
          [](const RealDiscrete& s) { return parity_sign(s.kappa); },
          [&](const auto&) -> Sign {
            throw validation_error("MissingSignData", "no local twisted root for '" +
                                                          element_name + "' at place " + place.id);
          },
      },
      shape);
}

LocalRhoShape shape_at(const CuspidalDatum& datum, const Place& place) {
  auto it = datum.local.find(place.id);
  if (it != datum.local.end()) return it->second;
  if (place.kind != PlaceKind::complex) {
    throw validation_error("MissingLocalShape", "datum '" + datum.name +
                                                    "' has no local shape at place '" + place.id +
                                                    "'");
  }
  if (datum.duality == Duality::orthogonal) {
    const SquareClass one = make_class(PlaceKind::complex, 0);
    return QuadraticPair{one, one};
  }
  if (datum.gl_rank == 4) return Constituents{};
  return PrincipalSeries{};
}

namespace {

void check_shape(const Scenario& scenario, const CuspidalDatum& datum, const Place& place,
                 const LocalRhoShape& shape) {
  const std::string where = "datum '" + datum.name + "' at place '" + place.id + "': ";
  auto fail = [&](const std::string& why) { return validation_error("IncompatibleShape", where + why); };
  const bool nonarch = is_nonarchimedean(place.kind);
  const bool real = place.kind == PlaceKind::real;
  const std::string name = shape_name(shape);

  bool allowed = false;
  if (datum.duality == Duality::symplectic && datum.gl_rank == 2) {
    allowed = std::visit(overloaded{
                             [&](const IrreducibleSymplectic&) { return nonarch; },
                             [&](const SteinbergTwist&) { return nonarch; },
                             [&](const PrincipalSeries&) { return true; },
                             [&](const RealDiscrete&) { return real; },
                             [](const auto&) { return false; },
                         },
                         shape);
  } else if (datum.duality == Duality::symplectic && datum.gl_rank == 4) {
    allowed = std::visit(overloaded{
                             [&](const IrreducibleSymplectic&) { return nonarch; },
                             [&](const Constituents&) { return true; },
                             [](const auto&) { return false; },
                         },
                         shape);
  } else if (datum.duality == Duality::orthogonal && datum.gl_rank == 2) {
    allowed = std::visit(overloaded{
                             [&](const IrreducibleOrthogonalDihedral&) { return nonarch || real; },
                             [&](const QuadraticPair&) { return true; },
                             [&](const ReducibleOrthogonal&) { return true; },
                             [](const auto&) { return false; },
                         },
                         shape);
  }
  if (!allowed) {
    throw fail("shape '" + name + "' is not allowed for a rank-" + std::to_string(datum.gl_rank) +
               " " + std::string(to_string(datum.duality)) + " datum at a " +
               std::string(to_string(place.kind)) + " place");
  }

  std::visit(overloaded{
                 [&](const SteinbergTwist& s) {
                   if (s.b.kind != place.kind) throw fail("class kind mismatch");
                 },
                 [&](const PrincipalSeries& s) {
                   if (s.s < 0 || s.s >= Rational(1, 2)) throw fail("need 0 <= s < 1/2");
                   if (s.chi.empty()) throw fail("empty character tag");
                 },
                 [&](const RealDiscrete& s) {
                   if (s.kappa < 1) throw fail("kappa must be a positive integer");
                 },
                 [&](const IrreducibleOrthogonalDihedral& s) {
                   if (real && s.kappa < 1) throw fail("kappa must be a positive integer");
                   if (nonarch && s.tag.empty()) throw fail("empty tag");
                 },
                 [&](const QuadraticPair& s) {
                   if (s.a.kind != place.kind || s.b.kind != place.kind) {
                     throw fail("class kind mismatch");
                   }
                   const GlobalElement* central = scenario.find_element(datum.central_char);
                   if (central && s.a * s.b != central->at(place.id)) {
                     throw fail("chi_a chi_b must equal the central character locally");
                   }
                 },
                 [&](const ReducibleOrthogonal& s) {
                   if (s.chi.empty()) throw fail("empty character tag");
                 },
                 [&](const Constituents& s) {
                   const auto symplectic = std::count_if(
                       s.pieces.begin(), s.pieces.end(),
                       [](const LocalConstituent& c) { return c.symplectic; });
                   if (symplectic > 2) throw fail("at most two symplectic constituents fit in rank 4");
                 },
                 [](const auto&) {},
             },
             shape);
}

}  // namespace

void validate_datum(const Scenario& scenario, const CuspidalDatum& datum) {
  const std::string where = "datum '" + datum.name + "': ";
  if (datum.gl_rank != 2 && datum.gl_rank != 4) {
    throw validation_error("InvalidDatum", where + "gl_rank must be 2 or 4 (rank-1 summands are "
                                                   "global elements)");
  }
  if (datum.gl_rank == 4 && datum.duality != Duality::symplectic) {
    throw validation_error("InvalidDatum", where + "rank-4 data must be symplectic");
  }
  if (datum.duality == Duality::symplectic && datum.central_char != "trivial") {
    throw validation_error("InvalidDatum", where + "symplectic data have trivial central character");
  }
  if (datum.duality == Duality::orthogonal) {
    const GlobalElement* central = scenario.find_element(datum.central_char);
    if (!central) {
      throw validation_error("InvalidDatum",
                             where + "central character '" + datum.central_char + "' is unknown");
    }
    if (same_character(*central, scenario.element("1"))) {
      throw validation_error("InvalidDatum",
                             where + "orthogonal GL2 data have nontrivial central character");
    }
  }
  for (const auto& [a, root] : datum.twisted_roots) {
    if (!scenario.find_element(a)) {
      throw validation_error("UnknownElement", where + "twisted root for unknown element '" + a + "'");
    }
  }
  for (const auto& [a, nonzero] : datum.L_half_nonzero) {
    if (!scenario.find_element(a)) {
      throw validation_error("UnknownElement", where + "L-value flag for unknown element '" + a + "'");
    }
    if (!nonzero) continue;
    auto it = datum.twisted_roots.find(a);
    if (it == datum.twisted_roots.end() || it->second != Sign::plus) {
      throw validation_error("LValueSignConflict",
                             where + "L(1/2, rho x chi_" + a + ") != 0 needs twisted root +1");
    }
  }
  for (const auto& [id, shape] : datum.local) {
    if (!scenario.find_place(id)) {
      throw validation_error("UnknownPlace", where + "local shape at unknown place '" + id + "'");
    }
  }

  std::map<std::string, LocalRhoShape> shapes;
  for (const auto& place : scenario.places) {
    auto it = datum.local.find(place.id);
    if (it == datum.local.end()) {
      if (place.kind != PlaceKind::complex) {
        throw validation_error("MissingLocalShape",
                               where + "no local shape at place '" + place.id + "'");
      }
      continue;
    }
    check_shape(scenario, datum, place, it->second);
  }

  if (datum.duality != Duality::symplectic) return;
  Sign product = Sign::plus;
  for (const auto& place : scenario.places) {
    product = product * local_root(place, shape_at(datum, place));
  }
  if (product != datum.global_root) {
    throw validation_error("RootProductMismatch",
                           where + "product of local root numbers is " + to_string(product) +
                               "1 but global_root is " + to_string(datum.global_root) + "1");
  }
  for (const auto& [a, root] : datum.twisted_roots) {
    const GlobalElement& e = scenario.element(a);
    Sign tw = Sign::plus;
    for (const auto& place : scenario.places) {
      tw = tw * local_twisted_root(place, shape_at(datum, place), a, e.at(place.id));
    }
    if (tw != root) {
      throw validation_error("RootProductMismatch",
                             where + "product of local twisted roots for '" + a + "' is " +
                                 to_string(tw) + "1 but the declared root is " + to_string(root) +
                                 "1");
    }
  }
}

void validate_scenario(const Scenario& scenario) {
  if (scenario.places.empty()) throw validation_error("NoPlaces", "scenario has no places");
  std::set<std::string> ids;
  for (const auto& p : scenario.places) {
    if (p.id.empty()) throw validation_error("InvalidPlace", "empty place id");
    if (!ids.insert(p.id).second) throw validation_error("DuplicatePlace", "duplicate place id '" + p.id + "'");
  }

  std::set<std::string> names{"1", "-1", "trivial"};
  for (const auto& e : scenario.elements) {
    if (!names.insert(e.name).second) {
      throw validation_error("DuplicateName", "element name '" + e.name + "' is reserved or repeated");
    }
    for (const auto& p : scenario.places) {
      const SquareClass& c = e.at(p.id);
      if (c.kind != p.kind) {
        throw validation_error("PlaceMismatch", "element '" + e.name + "' at place '" + p.id +
                                                    "' has a class of the wrong kind");
      }
    }
    if (e.classes.size() != scenario.places.size()) {
      throw validation_error("UnknownPlace", "element '" + e.name + "' names an unknown place");
    }
  }
  for (const auto& d : scenario.cuspidal) {
    if (!names.insert(d.name).second) {
      throw validation_error("DuplicateName", "datum name '" + d.name + "' is reserved or repeated");
    }
  }

  if (auto violation = validate_reciprocity(scenario.places, scenario.all_elements())) {
    throw validation_error("ReciprocityViolation",
                           "Hilbert reciprocity fails for the pair (" + violation->a + ", " +
                               violation->b + "): product of local symbols is " +
                               to_string(violation->product) + "1");
  }

  for (const auto& d : scenario.cuspidal) validate_datum(scenario, d);

  for (const auto& w : scenario.mp2_weil) {
    const std::string where = "mp2_weil '" + w.name + "': ";
    if (!scenario.find_element(w.chi)) {
      throw validation_error("UnknownElement", where + "unknown character '" + w.chi + "'");
    }
    std::set<std::string> s(w.S.begin(), w.S.end());
    if (s.size() != w.S.size()) throw validation_error("InvalidWeil", where + "repeated place in S");
    if (s.empty() || s.size() % 2 != 0) {
      throw validation_error("InvalidWeil", where + "S must be nonempty of even cardinality");
    }
    for (const auto& id : s) {
      if (!scenario.find_place(id)) {
        throw validation_error("UnknownPlace", where + "unknown place '" + id + "' in S");
      }
    }
  }

  for (const auto& c : scenario.mp2_cuspidal) {
    const std::string where = "mp2_cuspidal '" + c.name + "': ";
    const CuspidalDatum* rho = scenario.find_datum(c.rho);
    if (!rho || rho->gl_rank != 2 || rho->duality != Duality::symplectic) {
      throw validation_error("InvalidMp2Cuspidal", where + "rho must name a symplectic GL2 datum");
    }
    Sign product = Sign::plus;
    for (const auto& p : scenario.places) {
      auto it = c.labels.find(p.id);
      if (it == c.labels.end()) {
        throw validation_error("InvalidMp2Cuspidal", where + "no label at place '" + p.id + "'");
      }
      product = product * it->second;
    }
    if (c.labels.size() != scenario.places.size()) {
      throw validation_error("UnknownPlace", where + "label at an unknown place");
    }
    if (product != rho->global_root) {
      throw validation_error("InvalidMp2Cuspidal",
                             where + "product of local labels must equal eps(1/2, rho)");
    }
  }

  if (scenario.residual_characters) {
    for (const auto& name : *scenario.residual_characters) {
      if (!scenario.find_element(name)) {
        throw validation_error("UnknownElement", "residual character '" + name + "' is unknown");
      }
    }
  }

  if (scenario.parameter) {
    ClassifiedParameter phi = classify(scenario, *scenario.parameter);
    if (phi.type == ParamType::saito_kurokawa) epsilon_tilde(phi);
  }
}

}  // namespace mp4
