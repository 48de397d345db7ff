#include "lemma_oracle.hpp"

#include <algorithm>

namespace mp4test {

namespace {

using mp4::Rational;
using Kind = mp4::Mp2Inducing::Kind;

std::string chi_name(const std::string& label) { return label == "1" ? "1" : "chi_" + label; }

std::string r(const mp4::RepDescriptor& d) { return mp4::render(mp4::normalize(d)); }

LemmaVerdict series(int item, const mp4::RepDescriptor& sub, const mp4::RepDescriptor& quot) {
  return {{r(sub), r(quot)}, false, item};
}

mp4::RepDescriptor jp1(const std::string& chi, const Rational& s, const mp4::RepDescriptor& pi) {
  return mp4::quotient("", {mp4::segment(chi, s)}, {pi});
}

mp4::RepDescriptor st_tilde(const std::string& label) {
  return mp4::named("st~_{" + chi_name(label) + ",psi}");
}

}  // namespace

LemmaVerdict lemma_mp_p1(const mp4::GLCharacter& chi, const mp4::Mp2Inducing& pi) {
  const bool quadratic = chi.quadratic;
  const std::string c = chi_name(chi.label);
  const mp4::RepDescriptor p = mp4::mp2_inducing_descriptor(pi);
  const Rational half(1, 2);
  const Rational three_halves(3, 2);

  // (i) π supercuspidal, π ≠ ω⁻_{ψ_a} with χ = χ_a.
  const bool supercuspidal =
      pi.kind == Kind::supercuspidal || (pi.kind == Kind::odd_weil && pi.tag != chi.label);
  if (quadratic && chi.s == half && supercuspidal) {
    return series(1, mp4::named("St~_psi(" + c + "," + r(p) + ")"), jp1(c, half, p));
  }
  // (ii) π = st~_μ.
  if (quadratic && chi.s == half && pi.kind == Kind::steinberg) {
    std::string sub;
    if (pi.tag != chi.label) {
      std::string x = c;
      std::string y = chi_name(pi.tag);
      if (y < x) std::swap(x, y);
      sub = "St~_psi(" + x + ",st~_{" + y + ",psi})";
    } else if (chi.label != "1") {
      sub = "pi_gen,psi(st_" + c + ")";
    } else {
      sub = "pi_ng,psi(st_" + c + ")";
    }
    return series(2, mp4::named(sub), jp1(c, half, p));
  }
  // (iii) π = ω⁺_{ψ_b}.
  if (quadratic && chi.s == half && pi.kind == Kind::even_weil) {
    const std::string cb = chi_name(pi.tag);
    const auto top = mp4::quotient("", {mp4::segment(c, half), mp4::segment(cb, half)});
    if (pi.tag != chi.label) return series(3, jp1(cb, half, st_tilde(chi.label)), top);
    const std::string sub = chi.label != "1" ? "pi_ng,psi(st_" + c + ")" : "pi_gen,psi(st_" + c + ")";
    return series(3, mp4::named(sub), top);
  }
  if (quadratic && chi.s == three_halves && pi.tag == chi.label) {
    // (iv) π = st~_χ.
    if (pi.kind == Kind::steinberg) {
      return series(4, mp4::named("St~^+_{" + c + ",psi}"), jp1(c, three_halves, p));
    }
    // (v) π = ω⁻_{ψ_a}.
    if (pi.kind == Kind::odd_weil) {
      return series(5, mp4::named("St~^-_{" + c + ",psi}"), mp4::omega(2, mp4::Sign::minus, chi.label));
    }
    // (vi) π = ω⁺_{ψ_a}.
    if (pi.kind == Kind::even_weil) {
      return series(6, mp4::quotient("", {mp4::segment("st_" + c, 1, 2)}),
                    mp4::omega(2, mp4::Sign::plus, chi.label));
    }
  }
  return {};
}

LemmaVerdict lemma_mp_p2(const mp4::GL2Inducing& tau) {
  const bool steinberg = tau.kind == mp4::GL2Inducing::Kind::steinberg;
  const std::string t = steinberg ? "st_" + chi_name(tau.tag) : tau.tag;
  const bool central_trivial = steinberg || tau.central_trivial;
  // (i) ω_τ = 1 and s = 0.
  if (central_trivial && tau.s == Rational(0)) {
    return {{r(mp4::named("pi_gen,psi(" + t + ")")), r(mp4::named("pi_ng,psi(" + t + ")"))}, true, 1};
  }
  // (ii) τ self-dual supercuspidal, ω_τ ≠ 1, s = 1/2.
  if (!steinberg && tau.self_dual && !central_trivial && tau.s == Rational(1, 2)) {
    return series(2, mp4::named("St~_psi(" + t + ")"),
                  mp4::quotient("", {mp4::segment(t, Rational(1, 2), 2)}));
  }
  // (iii) τ = st_χ and s = 1.
  if (steinberg && tau.s == Rational(1)) {
    return series(3, mp4::named("St~^+_{" + chi_name(tau.tag) + ",psi}"),
                  mp4::quotient("", {mp4::segment(t, Rational(1), 2)}));
  }
  return {};
}

LemmaVerdict verdict_of(const mp4::Reducibility& red) {
  LemmaVerdict v;
  v.direct_sum = red.direct_sum;
  for (const auto& d : red.constituents) v.constituents.push_back(r(d));
  return v;
}

std::vector<std::pair<mp4::GLCharacter, mp4::Mp2Inducing>> mp_p1_grid() {
  const std::vector<std::string> labels = {"1", "u", "p", "up"};
  const std::vector<Rational> exponents = {Rational(0),    Rational(1, 4), Rational(1, 2),
                                           Rational(1),    Rational(3, 2), Rational(2)};
  std::vector<mp4::Mp2Inducing> pis = {{Kind::supercuspidal, "pi_sc"}};
  for (const auto& b : labels) {
    pis.push_back({Kind::odd_weil, b});
    pis.push_back({Kind::even_weil, b});
    pis.push_back({Kind::steinberg, b});
  }
  std::vector<std::pair<mp4::GLCharacter, mp4::Mp2Inducing>> out;
  for (const auto& s : exponents) {
    std::vector<mp4::GLCharacter> chis = {{"eta", false, s}};
    for (const auto& a : labels) chis.push_back({a, true, s});
    for (const auto& chi : chis) {
      for (const auto& pi : pis) out.emplace_back(chi, pi);
    }
  }
  return out;
}

std::vector<mp4::GL2Inducing> mp_p2_grid() {
  using GKind = mp4::GL2Inducing::Kind;
  const std::vector<Rational> exponents = {Rational(0),    Rational(1, 4), Rational(1, 2),
                                           Rational(1),    Rational(3, 2), Rational(2)};
  std::vector<mp4::GL2Inducing> out;
  for (const auto& s : exponents) {
    out.push_back({GKind::supercuspidal, "tau", false, false, s});
    out.push_back({GKind::supercuspidal, "tau", true, false, s});
    out.push_back({GKind::supercuspidal, "tau", true, true, s});
    for (const auto& c : {"1", "u", "p", "up"}) out.push_back({GKind::steinberg, c, true, true, s});
  }
  return out;
}

}  // namespace mp4test
