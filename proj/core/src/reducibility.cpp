#include "mp4/reducibility.hpp"

#include <algorithm>

#include "mp4/error.hpp"

namespace mp4 {

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

std::string rep_of(const std::string& label) { return label == "1" ? "1" : "chi_" + label; }

void check(PlaceKind kind, const Rational& s) {
  if (!is_nonarchimedean(kind)) {
    throw unsupported_error("UnsupportedInduction",
                            "composition series are tabulated at nonarchimedean places only");
  }
  if (s < 0) throw unsupported_error("UnsupportedInduction", "exponent must satisfy s >= 0");
}

Reducibility series(RepDescriptor sub, RepDescriptor quot) {
  return {false, false, {normalize(sub), normalize(quot)}};
}

Reducibility sum_of(RepDescriptor a, RepDescriptor b) {
  return {false, true, {normalize(a), normalize(b)}};
}

// St~_ψ(χ, st~_μ) ≅ St~_ψ(μ, st~_χ): order the pair.
RepDescriptor mp_steinberg_pair(const std::string& x, const std::string& y) {
  const auto [lo, hi] = std::minmax(rep_of(x), rep_of(y));
  return named("St~_psi(" + lo + ",st~_{" + hi + ",psi})");
}

std::string gl2_name(const GL2Inducing& tau) {
  return tau.kind == GL2Inducing::Kind::steinberg ? "st_" + rep_of(tau.tag) : tau.tag;
}

bool gl2_central_trivial(const GL2Inducing& tau) {
  return tau.kind == GL2Inducing::Kind::steinberg || tau.central_trivial;
}

}  // namespace

RepDescriptor mp2_inducing_descriptor(const Mp2Inducing& pi) {
  switch (pi.kind) {
    case Mp2Inducing::Kind::supercuspidal: return named(pi.tag);
    case Mp2Inducing::Kind::odd_weil: return omega(1, Sign::minus, pi.tag);
    case Mp2Inducing::Kind::even_weil: return omega(1, Sign::plus, pi.tag);
    case Mp2Inducing::Kind::steinberg: return named("st~_{" + rep_of(pi.tag) + ",psi}");
  }
  return zero();
}

Reducibility reduce_mp_p1(const GLCharacter& chi, const Mp2Inducing& pi, PlaceKind kind) {
  check(kind, chi.s);
  if (!chi.quadratic) return {};
  using K = Mp2Inducing::Kind;
  const std::string c = rep_of(chi.label);
  const RepDescriptor p = mp2_inducing_descriptor(pi);
  if (chi.s == kHalf) {
    const RepDescriptor quot = quotient("", {segment(c, kHalf)}, {p});
    const bool supercuspidal =
        pi.kind == K::supercuspidal || (pi.kind == K::odd_weil && pi.tag != chi.label);
    if (supercuspidal) return series(named("St~_psi(" + c + "," + render(p) + ")"), quot);
    if (pi.kind == K::steinberg) {
      if (pi.tag != chi.label) return series(mp_steinberg_pair(chi.label, pi.tag), quot);
      return series(named(std::string(chi.label == "1" ? "pi_ng,psi" : "pi_gen,psi") + "(st_" + c +
                          ")"),
                    quot);
    }
    if (pi.kind == K::even_weil) {
      const RepDescriptor top =
          quotient("", {segment(c, kHalf), segment(rep_of(pi.tag), kHalf)});
      if (pi.tag != chi.label) {
        return series(quotient("", {segment(rep_of(pi.tag), kHalf)},
                               {named("st~_{" + c + ",psi}")}),
                      top);
      }
      return series(named(std::string(chi.label == "1" ? "pi_gen,psi" : "pi_ng,psi") + "(st_" + c +
                          ")"),
                    top);
    }
    return {};
  }
  if (chi.s == kThreeHalves) {
    if (pi.kind == K::steinberg && pi.tag == chi.label) {
      return series(named("St~^+_{" + c + ",psi}"), quotient("", {segment(c, kThreeHalves)}, {p}));
    }
    if (pi.kind == K::odd_weil && pi.tag == chi.label) {
      return series(named("St~^-_{" + c + ",psi}"), omega(2, Sign::minus, chi.label));
    }
    if (pi.kind == K::even_weil && pi.tag == chi.label) {
      return series(quotient("", {segment("st_" + c, 1, 2)}), omega(2, Sign::plus, chi.label));
    }
  }
  return {};
}

Reducibility reduce_mp_p2(const GL2Inducing& tau, PlaceKind kind) {
  check(kind, tau.s);
  const std::string t = gl2_name(tau);
  if (gl2_central_trivial(tau) && tau.s == Rational(0)) {
    return sum_of(named("pi_gen,psi(" + t + ")"), named("pi_ng,psi(" + t + ")"));
  }
  if (tau.kind == GL2Inducing::Kind::supercuspidal && tau.self_dual && !tau.central_trivial &&
      tau.s == kHalf) {
    return series(named("St~_psi(" + t + ")"), quotient("", {segment(t, kHalf, 2)}));
  }
  if (tau.kind == GL2Inducing::Kind::steinberg && tau.s == Rational(1)) {
    return series(named("St~^+_{" + rep_of(tau.tag) + ",psi}"), quotient("", {segment(t, 1, 2)}));
  }
  return {};
}

Reducibility reduce_so_plus_q1(const GLCharacter& chi, const SOPlusInducing& sigma,
                               PlaceKind kind) {
  check(kind, chi.s);
  if (!chi.quadratic) return {};
  const std::string c = rep_of(chi.label);
  const bool steinberg = sigma.kind == SOPlusInducing::Kind::steinberg;
  const std::string s = steinberg ? "st_" + rep_of(sigma.tag) : sigma.tag;
  auto quot = [&](const Rational& e) {
    return quotient("Q1", {segment(c, e)}, {named(s)}, "SO(V2+)", "");
  };
  if (chi.s == kHalf) {
    if (!steinberg) return series(named("SO(V2+):St^+(" + c + "," + s + ")"), quot(kHalf));
    if (sigma.tag != chi.label) {
      const auto [lo, hi] = std::minmax(c, rep_of(sigma.tag));
      return series(named("SO(V2+):St^+(" + lo + ",st_" + hi + ")"), quot(kHalf));
    }
    return series(named("SO(V2+):sigma_gen(st_" + c + ")"), quot(kHalf));
  }
  if (chi.s == kThreeHalves && steinberg && sigma.tag == chi.label) {
    return series(named("SO(V2+):St^+_{" + c + "}"), quot(kThreeHalves));
  }
  return {};
}

Reducibility reduce_so_plus_q2(const GL2Inducing& tau, PlaceKind kind) {
  check(kind, tau.s);
  const std::string t = gl2_name(tau);
  auto quot = [&](const Rational& e) { return quotient("Q2", {segment(t, e, 2)}, {}, "SO(V2+)", ""); };
  if (gl2_central_trivial(tau) && tau.s == Rational(0)) {
    return sum_of(named("SO(V2+):sigma_gen(" + t + ")"), named("SO(V2+):sigma_ng(" + t + ")"));
  }
  if (tau.kind == GL2Inducing::Kind::supercuspidal && tau.self_dual && !tau.central_trivial &&
      tau.s == kHalf) {
    return series(named("SO(V2+):St^+(" + t + ")"), quot(kHalf));
  }
  if (tau.kind == GL2Inducing::Kind::steinberg && tau.s == Rational(1)) {
    return series(named("SO(V2+):St^+_{" + rep_of(tau.tag) + "}"), quot(1));
  }
  return {};
}

Reducibility reduce_so_minus_q1(const GLCharacter& chi, const SOMinusInducing& sigma,
                                PlaceKind kind) {
  check(kind, chi.s);
  if (!chi.quadratic) return {};
  const std::string c = rep_of(chi.label);
  const std::string s = sigma.character ? "nu_" + sigma.tag : sigma.tag;
  auto quot = [&](const Rational& e) {
    return quotient("Q1", {segment(c, e)}, {named(s)}, "SO(V2-)", "");
  };
  const bool matches = sigma.character && sigma.tag == chi.label;
  if (chi.s == kHalf && !matches) {
    return series(named("SO(V2-):St^-(" + c + "," + s + ")"), quot(kHalf));
  }
  if (chi.s == kThreeHalves && matches) {
    return series(named("SO(V2-):St^-_{" + c + "}"), quot(kThreeHalves));
  }
  return {};
}

}  // namespace mp4
