#include "mp4/packets.hpp"

#include <algorithm>

#include "mp4/error.hpp"
#include "mp4/ktypes.hpp"

namespace mp4 {

namespace {

const Rational kHalf(1, 2);

std::string ps_rep(const PrincipalSeries& ps) { return ps.chi == "1" ? "1" : "chi_" + ps.chi; }

std::string irr_key(const IrreducibleSymplectic& s, const std::string& name) {
  return s.key.empty() ? name : s.key;
}

std::string sign_pair(Sign a, Sign b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

RepDescriptor weil_minus(const SquareClass& c) { return omega(1, Sign::minus, label(c)); }

RepDescriptor st_tilde(const SquareClass& c) {
  return named("st~_{" + character_name(c) + ",psi}");
}

RepDescriptor real_ds(const KTypeMp& lowest) {
  return LimitOrDiscreteSeriesReal{lowest.doubled};
}

RepDescriptor opaque(const LocalParam& lp, const F2Character& label) {
  std::string names;
  for (std::size_t i = 0; i < lp.tempered_names.size(); ++i) {
    if (i) names += "+";
    names += lp.tempered_names[i];
  }
  return named("pi_temp[" + names + "@" + lp.place.id + "]^" + label.label());
}

// ---------------------------------------------------------------------------
// Nontempered tables

RepDescriptor sk_minus_member(const LocalParam& lp, Sign e1) {
  const LocalRhoShape& rho = *lp.rho;
  const std::string chi_a = character_name(lp.a);
  const std::string label = sign_pair(e1, Sign::minus);
  if (const auto* ps = std::get_if<PrincipalSeries>(&rho)) {
    return quotient("", {segment(ps_rep(*ps), ps->s)}, {weil_minus(lp.a)});
  }
  if (const auto* s = std::get_if<IrreducibleSymplectic>(&rho)) {
    return DiscreteSeriesMp4{"rho[" + irr_key(*s, lp.rho_name) + "]+" + chi_a + "(x)S2", label};
  }
  if (const auto* st = std::get_if<SteinbergTwist>(&rho)) {
    if (st->b != lp.a) {
      return DiscreteSeriesMp4{character_name(st->b) + "(x)S2+" + chi_a + "(x)S2", label};
    }
    if (!lp.a.trivial()) {
      return e1 == Sign::plus ? zero() : named("pi_ng,psi(st_" + chi_a + ")");
    }
    return e1 == Sign::plus ? named("pi_gen,psi(st_1)") : zero();
  }
  if (const auto* d = std::get_if<RealDiscrete>(&rho)) {
    const Sign c = chi_minus_one(lp.place, lp.a);
    if (d->kappa == 1 && e1 == -c) return zero();
    return real_ds(lowest_discrete_series(2 * d->kappa - 1, 1, e1, c));
  }
  throw validation_error("UnsupportedShape", "shape " + shape_name(rho) + " in a SK parameter");
}

PacketEntry sk_entry(const LocalParam& lp, const F2Character& label) {
  const Sign e1 = label.values[0];
  const Sign e2 = label.values[1];
  const LocalRhoShape& rho = *lp.rho;
  const bool irreducible = is_irreducible(rho);
  PacketEntry entry{label, {}, false, true};
  if (e2 == Sign::plus) {
    entry.member = quotient("", {segment(character_name(lp.a), kHalf)},
                            {mp2_member(rho, lp.rho_name, e1)});
    entry.in_L_packet = irreducible || e1 == Sign::plus;
  } else {
    entry.member = sk_minus_member(lp, e1);
  }
  return entry;
}

PacketEntry hps_entry(const Place& place, const SquareClass& a, const SquareClass& b,
                      const F2Character& label) {
  const Sign e1 = label.values[0];
  const Sign e2 = label.values[1];
  const std::string chi_a = character_name(a);
  const std::string chi_b = character_name(b);
  PacketEntry entry{label, {}, false, true};
  if (e1 == Sign::plus && e2 == Sign::plus) {
    entry.member = quotient("", {segment(chi_a, kHalf), segment(chi_b, kHalf)});
    entry.in_L_packet = true;
    return entry;
  }
  if (a != b) {
    if (e1 == Sign::plus) {
      entry.member = quotient("", {segment(chi_a, kHalf)}, {weil_minus(b)});
    } else if (e2 == Sign::plus) {
      entry.member = quotient("", {segment(chi_b, kHalf)}, {weil_minus(a)});
    } else if (is_nonarchimedean(place.kind)) {
      entry.member = DiscreteSeriesMp4{chi_a + "(x)S2+" + chi_b + "(x)S2", label.label()};
    } else {
      entry.member = zero();
    }
    return entry;
  }
  // χ_a = χ_b: only the diagonal labels occur.
  if (is_nonarchimedean(place.kind)) {
    entry.member = quotient("", {segment(chi_a, kHalf)}, {st_tilde(a)});
  } else if (place.kind == PlaceKind::real) {
    entry.member =
        quotient("", {segment(chi_a, kHalf)}, {weil_minus(a * class_of_minus_one(place.kind))});
  } else {
    entry.member = zero();
  }
  return entry;
}

std::string tau_name(const IrreducibleOrthogonalDihedral& s, const std::string& name) {
  return "tau[" + (s.tag.empty() ? name : s.tag) + "]";
}

PacketEntry soudry_entry(const LocalParam& lp, const F2Character& label) {
  const LocalRhoShape& rho = *lp.rho;
  if (std::holds_alternative<QuadraticPair>(rho)) return hps_entry(lp.place, lp.a, lp.b, label);
  PacketEntry entry{label, {}, false, true};
  if (const auto* r = std::get_if<ReducibleOrthogonal>(&rho)) {
    const std::string chi = "chi_" + r->chi;
    entry.member = quotient("", {segment(chi, kHalf), segment(chi + "^-1", kHalf)});
    entry.in_L_packet = true;
    return entry;
  }
  const auto& s = std::get<IrreducibleOrthogonalDihedral>(rho);
  const bool real = lp.place.kind == PlaceKind::real;
  if (label.values[0] == Sign::plus) {
    const std::string tau = real ? "D_" + std::to_string(s.kappa) : tau_name(s, lp.rho_name);
    entry.member = quotient("", {segment(tau, kHalf, 2)});
    entry.in_L_packet = true;
  } else if (real) {
    const int a2 = 2 * s.kappa + 1;
    const int b2 = 2 * s.kappa - 1;
    entry.member = direct_sum({real_ds(lowest_discrete_series(a2, b2, Sign::plus, Sign::minus)),
                               real_ds(lowest_discrete_series(a2, b2, Sign::minus, Sign::plus))});
  } else {
    entry.member = DiscreteSeriesMp4{tau_name(s, lp.rho_name) + "(x)S2", "-"};
  }
  return entry;
}

// ---------------------------------------------------------------------------
// Tempered packets

struct Piece {
  const LocalRhoShape* shape = nullptr;
  std::string name;
  std::string key;  // for irreducible constituents of a GL₄ datum
  Sign sign = Sign::plus;
};

RepDescriptor tempered_pair(const LocalParam& lp, Piece x, Piece y, bool& supported) {
  const auto* irr_x = std::get_if<IrreducibleSymplectic>(x.shape);
  const auto* irr_y = std::get_if<IrreducibleSymplectic>(y.shape);
  const auto* st_x = std::get_if<SteinbergTwist>(x.shape);
  const auto* st_y = std::get_if<SteinbergTwist>(y.shape);
  const auto* d_x = std::get_if<RealDiscrete>(x.shape);
  const auto* d_y = std::get_if<RealDiscrete>(y.shape);
  const auto* ps_x = std::get_if<PrincipalSeries>(x.shape);
  const auto* ps_y = std::get_if<PrincipalSeries>(y.shape);

  if (ps_x && ps_y) {
    return quotient("", {segment(ps_rep(*ps_x), ps_x->s), segment(ps_rep(*ps_y), ps_y->s)});
  }
  if (ps_y) {
    std::swap(x, y);
    std::swap(ps_x, ps_y);
  }
  if (ps_x) {
    if (std::holds_alternative<IrreducibleSymplectic>(*y.shape) ||
        std::holds_alternative<SteinbergTwist>(*y.shape) ||
        std::holds_alternative<RealDiscrete>(*y.shape)) {
      return quotient("", {segment(ps_rep(*ps_x), ps_x->s)}, {mp2_member(*y.shape, y.name, y.sign)});
    }
    supported = false;
    return zero();
  }
  if (d_x && d_y) {
    int a2 = 2 * d_x->kappa - 1;
    int b2 = 2 * d_y->kappa - 1;
    Sign ea = x.sign;
    Sign eb = y.sign;
    if (a2 < b2) {
      std::swap(a2, b2);
      std::swap(ea, eb);
    }
    return real_ds(lowest_discrete_series(a2, b2, ea, eb));
  }
  // Two irreducible symplectic pieces (keys may come from GL₄ constituents).
  const bool key_x = irr_x || !x.key.empty();
  const bool key_y = irr_y || !y.key.empty();
  auto key_of = [&](const Piece& p, const IrreducibleSymplectic* irr) {
    return p.key.empty() ? irr_key(*irr, p.name) : p.key;
  };
  if (key_x && key_y && !st_x && !st_y) {
    const std::string kx = key_of(x, irr_x);
    const std::string ky = key_of(y, irr_y);
    if (kx == ky) {
      return named(std::string(x.sign == Sign::plus ? "pi_gen,psi" : "pi_ng,psi") + "(tau[" + kx +
                   "])");
    }
    return named("pi_sc^" + sign_pair(x.sign, y.sign) + "[" + kx + "," + ky + "]");
  }
  if (st_x && !st_y && irr_y) {
    std::swap(x, y);
    std::swap(irr_x, irr_y);
    std::swap(st_x, st_y);
  }
  if (irr_x && st_y) {
    const std::string k = key_of(x, irr_x);
    const std::string pi0 = "pi0^" + to_string(x.sign) + "[" + k + "]";
    const std::string chi = character_name(st_y->b);
    if (!st_y->b.trivial()) {
      const std::string psi = psi_name(st_y->b);
      if (y.sign == Sign::plus) return named("St~_psi(" + chi + "," + pi0 + ")");
      const std::string e = x.sign == Sign::plus ? "eps_a" : "-eps_a";
      const std::string ext = x.sign == Sign::plus ? "-eps0*" : "eps0*";
      return named("theta_{W2,V1^{" + e + "}," + psi + "}((sigma0^{" + e + "}[" + k + "] x nu_" +
                   label(st_y->b) + ")^{" + ext + chi + "(-1)})");
    }
    if (y.sign == Sign::minus) return named("St~_psi(1," + pi0 + ")");
    const Sign eps0 = irr_x->eps;
    const Sign ext = x.sign == Sign::plus ? -eps0 : eps0;
    return named("theta_{W2,V1" + to_string(x.sign) + ",psi}(sigma0^{" + to_string(x.sign) + "," +
                 to_string(ext) + "}[" + k + "])");
  }
  if (st_x && st_y) {
    const SquareClass a = st_x->b;
    const SquareClass b = st_y->b;
    if (a == b) {
      return named(std::string(x.sign == Sign::plus ? "pi_gen,psi" : "pi_ng,psi") + "(st_" +
                   character_name(a) + ")");
    }
    if (!a.trivial() && !b.trivial()) {
      if (x.sign == Sign::plus && y.sign == Sign::plus) {
        const auto [lo, hi] = std::minmax(character_name(a), character_name(b));
        return named("St~_psi(" + lo + ",st~_{" + hi + ",psi})");
      }
      if (x.sign == Sign::plus) return named("St~_psi(" + character_name(a) + "," + render(weil_minus(b)) + ")");
      if (y.sign == Sign::plus) return named("St~_psi(" + character_name(b) + "," + render(weil_minus(a)) + ")");
      return named("theta_{W2,V1-," + psi_name(b) + "}(nu_" + label(a * b) + "^" +
                   to_string(chi_minus_one(lp.place, a * b)) + ")");
    }
    // χ_a ⊕ 1 with the nontrivial character first.
    Piece pa = x;
    Piece p1 = y;
    SquareClass ca = a;
    if (a.trivial()) {
      std::swap(pa, p1);
      ca = b;
    }
    const std::string chi = character_name(ca);
    if (pa.sign == Sign::plus && p1.sign == Sign::plus) {
      return named("St~_psi(" + chi + "," + render(weil_minus(make_class(ca.kind, 0))) + ")");
    }
    if (pa.sign == Sign::plus) return named("St~_psi(" + chi + ",st~_{1,psi})");
    if (p1.sign == Sign::plus) {
      return named("theta_{W2,V1-,psi}(nu_" + label(ca) + "^" +
                   to_string(chi_minus_one(lp.place, ca)) + ")");
    }
    return named("St~_psi(1," + render(weil_minus(ca)) + ")");
  }
  supported = false;
  return zero();
}

PacketEntry tempered_entry(const LocalParam& lp, const F2Character& label) {
  PacketEntry entry{label, {}, true, true};
  bool supported = true;
  std::vector<Piece> pieces;
  bool opaque_piece = false;
  std::size_t slot = 0;
  for (std::size_t i = 0; i < lp.tempered_shapes.size(); ++i) {
    const LocalRhoShape& shape = lp.tempered_shapes[i];
    if (const auto* c = std::get_if<Constituents>(&shape)) {
      for (const auto& piece : c->pieces) {
        if (!piece.symplectic) {
          opaque_piece = true;
          continue;
        }
        static const LocalRhoShape kIrr = IrreducibleSymplectic{};
        pieces.push_back({&kIrr, lp.tempered_names[i], piece.key, label.values[slot++]});
      }
      if (c->pieces.empty()) opaque_piece = true;
      continue;
    }
    Piece p{&shape, lp.tempered_names[i], "", Sign::plus};
    if (!std::holds_alternative<PrincipalSeries>(shape)) p.sign = label.values[slot++];
    pieces.push_back(p);
  }

  if (opaque_piece) {
    supported = false;
  } else if (pieces.size() == 1) {
    const auto* irr = std::get_if<IrreducibleSymplectic>(pieces[0].shape);
    if (irr && lp.tempered_shapes.size() == 1) {
      entry.member = named("pi_sc^" + to_string(pieces[0].sign) + "[" +
                           irr_key(*irr, pieces[0].name) + "]");
    } else {
      supported = false;
    }
  } else if (pieces.size() == 2) {
    entry.member = tempered_pair(lp, pieces[0], pieces[1], supported);
  } else {
    supported = false;
  }
  if (!supported) {
    entry.member = opaque(lp, label);
    entry.supported = false;
  }
  return entry;
}

}  // namespace

const PacketEntry& LocalPacket::at(const F2Character& label) const {
  for (const auto& e : entries) {
    if (e.label == label) return e;
  }
  throw validation_error("UnknownLabel", "label " + label.label() + " is not a character of the "
                                         "local component group at " + place.id);
}

RepDescriptor mp2_member(const LocalRhoShape& rho, const std::string& rho_name, Sign label) {
  if (const auto* s = std::get_if<IrreducibleSymplectic>(&rho)) {
    return named("pi0^" + to_string(label) + "[" + irr_key(*s, rho_name) + "]");
  }
  if (const auto* st = std::get_if<SteinbergTwist>(&rho)) {
    // For b nontrivial the generic member is st~_{χ_b}; for b trivial the
    // roles swap.
    const bool steinberg = (label == Sign::plus) != st->b.trivial();
    return steinberg ? st_tilde(st->b) : weil_minus(st->b);
  }
  if (const auto* d = std::get_if<RealDiscrete>(&rho)) {
    const Rational lambda(value(label) * (2 * d->kappa - 1), 2);
    return named("D~_{" + to_string(lambda) + ",psi}");
  }
  if (const auto* ps = std::get_if<PrincipalSeries>(&rho)) {
    return quotient("", {segment(ps_rep(*ps), ps->s)}, {}, "Mp2");
  }
  throw validation_error("UnsupportedShape", "no Mp2 packet for shape " + shape_name(rho));
}

RepDescriptor elementary_weil(int n, Sign parity, const std::string& twist) {
  if (n < 1) throw validation_error("InvalidRank", "elementary Weil representations need n >= 1");
  return normalize(omega(n, parity, twist));
}

LocalPacket local_packet(const Localization& loc) {
  const LocalParam& lp = loc.param;
  LocalPacket packet;
  packet.place = lp.place;
  packet.type = lp.type;
  for (const F2Character& chi : local_characters(loc.group)) {
    PacketEntry entry;
    switch (lp.type) {
      case ParamType::principal:
        entry = {chi, omega(2, chi.values[0], label(lp.a)), chi.values[0] == Sign::plus, true};
        break;
      case ParamType::saito_kurokawa: entry = sk_entry(lp, chi); break;
      case ParamType::howe_ps: entry = hps_entry(lp.place, lp.a, lp.b, chi); break;
      case ParamType::soudry: entry = soudry_entry(lp, chi); break;
      case ParamType::tempered: entry = tempered_entry(lp, chi); break;
    }
    entry.member = normalize(entry.member);
    packet.entries.push_back(std::move(entry));
  }
  return packet;
}

QuaternionData sk_quaternion_data(Sign e1, Sign e2, Sign rho_root, Sign rho_twisted_root,
                                  Sign chi_a_minus_one, bool rho_reducible) {
  QuaternionData q;
  q.eps = rho_reducible ? e1 : e1 * rho_root * rho_twisted_root * chi_a_minus_one;
  q.eps_prime = e1 * e2 * rho_root * chi_a_minus_one;
  return q;
}

QuaternionData hps_quaternion_data(Sign e1, Sign e2, Sign chi_ab_minus_one) {
  return {e2, e1 * e2 * chi_ab_minus_one};
}

bool theta_o3_nonvanishing(const O3Rep& sigma, int target_rank) {
  if (target_rank == 2) return !(sigma.trivial_on_SO && sigma.extension == Sign::minus);
  if (target_rank == 1) return sigma.extension == sigma.space_eps * sigma.root;
  throw validation_error("InvalidRank", "theta lifts from O(V1) are tracked to Mp(W1), Mp(W2)");
}

std::optional<bool> theta_route_nonzero(const LocalParam& lp, const F2Character& label) {
  if (label.values.size() != 2) return std::nullopt;
  const Sign e1 = label.values[0];
  const Sign e2 = label.values[1];
  O3Rep sigma;
  if (lp.type == ParamType::saito_kurokawa) {
    if (e2 == Sign::plus) return std::nullopt;
    const LocalRhoShape& rho = *lp.rho;
    const bool reducible = !is_irreducible(rho);
    const QuaternionData q = sk_quaternion_data(e1, e2, lp.rho_root, lp.rho_twisted_root,
                                                chi_minus_one(lp.place, lp.a), reducible);
    // σ₀^- has L-parameter ρ ⊗ χ_a, which must be discrete.
    if (q.eps == Sign::minus && reducible) return false;
    bool trivial = false;
    if (q.eps == Sign::minus) {
      if (const auto* st = std::get_if<SteinbergTwist>(&rho)) trivial = st->b == lp.a;
      if (const auto* d = std::get_if<RealDiscrete>(&rho)) trivial = d->kappa == 1;
    }
    sigma = {q.eps, trivial, q.eps_prime, Sign::plus};
    return theta_o3_nonvanishing(sigma, 2);
  }
  const bool pair = lp.type == ParamType::howe_ps ||
                    (lp.type == ParamType::soudry && lp.rho &&
                     std::holds_alternative<QuadraticPair>(*lp.rho));
  if (!pair) return std::nullopt;
  const QuaternionData q = hps_quaternion_data(e1, e2, chi_minus_one(lp.place, lp.a * lp.b));
  if (q.eps == Sign::minus && lp.place.kind == PlaceKind::complex) return false;
  // χ_ab ∘ N is trivial when χ_ab = 1, and always on the real quaternions.
  const bool trivial =
      q.eps == Sign::minus && (lp.a == lp.b || lp.place.kind == PlaceKind::real);
  sigma = {q.eps, trivial, q.eps_prime, Sign::plus};
  return theta_o3_nonvanishing(sigma, 2);
}

RepDescriptor l_packet_descriptor(const LocalParam& lp) {
  auto pair_of = [](const SquareClass& a, const SquareClass& b) {
    return quotient("", {segment(character_name(a), kHalf), segment(character_name(b), kHalf)});
  };
  RepDescriptor d;
  switch (lp.type) {
    case ParamType::principal:
      d = quotient("", {segment(character_name(lp.a), Rational(3, 2)),
                        segment(character_name(lp.a), kHalf)});
      break;
    case ParamType::saito_kurokawa:
      if (const auto* ps = std::get_if<PrincipalSeries>(&*lp.rho)) {
        d = quotient("", {segment(character_name(lp.a), kHalf), segment(ps_rep(*ps), ps->s)});
      } else {
        d = quotient("", {segment(character_name(lp.a), kHalf)},
                     {mp2_member(*lp.rho, lp.rho_name, Sign::plus)});
      }
      break;
    case ParamType::howe_ps: d = pair_of(lp.a, lp.b); break;
    case ParamType::soudry:
      if (std::holds_alternative<QuadraticPair>(*lp.rho)) {
        d = pair_of(lp.a, lp.b);
      } else if (const auto* r = std::get_if<ReducibleOrthogonal>(&*lp.rho)) {
        d = quotient("", {segment("chi_" + r->chi, kHalf), segment("chi_" + r->chi + "^-1", kHalf)});
      } else {
        const auto& s = std::get<IrreducibleOrthogonalDihedral>(*lp.rho);
        const std::string tau = lp.place.kind == PlaceKind::real ? "D_" + std::to_string(s.kappa)
                                                                 : tau_name(s, lp.rho_name);
        d = quotient("", {segment(tau, kHalf, 2)});
      }
      break;
    case ParamType::tempered:
      throw unsupported_error("TemperedParameter", "tempered packets are L-packets already");
  }
  return normalize(d);
}

}  // namespace mp4
