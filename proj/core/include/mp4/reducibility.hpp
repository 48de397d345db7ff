#pragma once

#include <string>
#include <vector>

#include "mp4/arithmetic.hpp"
#include "mp4/descriptor.hpp"

namespace mp4 {

// χ|·|^s with χ unitary. Quadratic characters are named by square-class
// labels ("1", "u", ...); other characters by an arbitrary tag.
struct GLCharacter {
  std::string label = "1";
  bool quadratic = true;
  Rational s{0};
};

// Square-integrable or even elementary Weil representation of Mp(W₁).
struct Mp2Inducing {
  enum class Kind { supercuspidal, odd_weil, even_weil, steinberg };
  Kind kind = Kind::supercuspidal;
  std::string tag;  // Weil: the twist b; Steinberg: μ; supercuspidal: a name
};

// τ ⊗ |det|^s with τ unitary square-integrable on GL₂.
struct GL2Inducing {
  enum class Kind { supercuspidal, steinberg };
  Kind kind = Kind::supercuspidal;
  std::string tag;  // Steinberg: the quadratic twist χ
  bool self_dual = false;
  bool central_trivial = false;
  Rational s{0};
};

// Square-integrable representation of SO(V₁⁺) ≅ PGL₂.
struct SOPlusInducing {
  enum class Kind { supercuspidal, steinberg };
  Kind kind = Kind::supercuspidal;
  std::string tag;
};

// Representation of SO(V₁⁻): either a character χ_tag ∘ ν or something else.
struct SOMinusInducing {
  bool character = true;
  std::string tag = "1";
};

struct Reducibility {
  bool irreducible = true;
  // I_P(…) = c₀ ⊕ c₁ when true; otherwise constituents are (sub, quotient).
  bool direct_sum = false;
  std::vector<RepDescriptor> constituents;
};

// All oracles throw UnsupportedInduction at archimedean places or for s < 0.
Reducibility reduce_mp_p1(const GLCharacter& chi, const Mp2Inducing& pi,
                          PlaceKind kind = PlaceKind::odd_1mod4);
Reducibility reduce_mp_p2(const GL2Inducing& tau, PlaceKind kind = PlaceKind::odd_1mod4);
Reducibility reduce_so_plus_q1(const GLCharacter& chi, const SOPlusInducing& sigma,
                               PlaceKind kind = PlaceKind::odd_1mod4);
Reducibility reduce_so_plus_q2(const GL2Inducing& tau, PlaceKind kind = PlaceKind::odd_1mod4);
Reducibility reduce_so_minus_q1(const GLCharacter& chi, const SOMinusInducing& sigma,
                                PlaceKind kind = PlaceKind::odd_1mod4);

RepDescriptor mp2_inducing_descriptor(const Mp2Inducing& pi);

}  // namespace mp4
