#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mp4/arithmetic.hpp"
#include "mp4/sign.hpp"

namespace mp4 {

enum class Duality { symplectic, orthogonal };
std::string_view to_string(Duality d);

// Local shapes of a cuspidal datum ρ at one place.

// ρ_v irreducible symplectic, local root numbers declared. An optional key
// lets two tempered summands declare the same local representation.
struct IrreducibleSymplectic {
  Sign eps = Sign::plus;
  std::map<std::string, Sign> eps_twists;
  std::string key;
};

// ρ_v = χ_b ⊠ S₂ at a nonarchimedean place.
struct SteinbergTwist {
  SquareClass b;
};

// ρ_v = χ|·|^s ⊕ χ^{-1}|·|^{-s}, 0 ≤ s < 1/2. chi_minus_one is χ(-1), which
// is also the local root number ε(1/2, ρ_v).
struct PrincipalSeries {
  std::string chi = "1";
  Rational s{0};
  Sign chi_minus_one = Sign::plus;
};

// ρ_v = χ_a ⊕ χ_b (orthogonal).
struct QuadraticPair {
  SquareClass a;
  SquareClass b;
};

// ρ_v = D_{κ-1/2} at a real place.
struct RealDiscrete {
  int kappa = 1;
};

// ρ_v irreducible orthogonal: an opaque tag at nonarchimedean places, D_κ at
// real places.
struct IrreducibleOrthogonalDihedral {
  std::string tag;
  int kappa = 0;
};

// ρ_v = χ ⊕ χ^{-1} with χ² ≠ 1.
struct ReducibleOrthogonal {
  std::string chi;
};

// Explicit local decomposition of a tempered summand (used for GL₄ data).
struct LocalConstituent {
  std::string key;
  bool symplectic = true;
};
struct Constituents {
  std::vector<LocalConstituent> pieces;
  Sign eps = Sign::plus;
};

using LocalRhoShape =
    std::variant<IrreducibleSymplectic, SteinbergTwist, PrincipalSeries, QuadraticPair,
                 RealDiscrete, IrreducibleOrthogonalDihedral, ReducibleOrthogonal, Constituents>;

std::string shape_name(const LocalRhoShape& shape);
bool is_irreducible(const LocalRhoShape& shape);

struct CuspidalDatum {
  std::string name;
  int gl_rank = 2;
  Duality duality = Duality::symplectic;
  Sign global_root = Sign::plus;
  std::map<std::string, Sign> twisted_roots;
  std::map<std::string, bool> L_half_nonzero;
  bool dihedral = false;
  std::string central_char = "trivial";
  std::map<std::string, LocalRhoShape> local;  // place id -> shape
};

struct Summand {
  std::string datum;  // a CuspidalDatum name or a GlobalElement name
  int d = 1;
};

struct AParameter {
  std::vector<Summand> summands;
};

enum class ParamType { tempered, saito_kurokawa, howe_ps, soudry, principal };
std::string_view to_string(ParamType t);
std::string_view display_name(ParamType t);

// Presentation of an elementary abelian 2-group: generators with ℤ/2
// relations. Elements and relations are bitmasks over the basis.
struct ComponentGroup {
  std::vector<std::string> basis;
  std::vector<std::uint32_t> relations;

  int size() const { return static_cast<int>(basis.size()); }
  int rank() const;
};

// A character given by its values on the basis.
struct F2Character {
  std::vector<Sign> values;

  Sign operator()(std::uint32_t element) const;
  bool respects(const ComponentGroup& g) const;
  std::string label() const;  // e.g. "(+,-)"
  friend bool operator==(const F2Character&, const F2Character&) = default;
  friend auto operator<=>(const F2Character& a, const F2Character& b) {
    return a.index() <=> b.index();
  }
  // Lexicographic position with + before -.
  std::uint32_t index() const;
};

F2Character trivial_character(const ComponentGroup& g);

struct Mp2Weil {
  std::string name;
  std::string chi;
  std::vector<std::string> S;
};

// Cuspidal Mp₂ representation with A-parameter ρ ⊠ S₁, kept opaque.
struct Mp2Cuspidal {
  std::string name;
  std::string rho;
  std::map<std::string, Sign> labels;
};

struct Scenario {
  std::string name;
  std::vector<Place> places;
  std::vector<GlobalElement> elements;  // user-declared (without built-ins)
  std::vector<CuspidalDatum> cuspidal;
  std::vector<Mp2Weil> mp2_weil;
  std::vector<Mp2Cuspidal> mp2_cuspidal;
  std::optional<AParameter> parameter;
  std::optional<std::vector<std::string>> residual_characters;

  const Place& place(const std::string& id) const;
  const Place* find_place(const std::string& id) const;
  // Looks up user elements and the built-ins "1" and "-1".
  const GlobalElement* find_element(const std::string& name) const;
  const GlobalElement& element(const std::string& name) const;
  const CuspidalDatum* find_datum(const std::string& name) const;
  const CuspidalDatum& datum(const std::string& name) const;
  // Built-ins first, then declared elements.
  std::vector<GlobalElement> all_elements() const;

 private:
  // Built-in elements, rebuilt when the place list changes.
  mutable std::vector<Place> builtin_places_;
  mutable std::vector<GlobalElement> builtins_;
};

// A summand resolved against the scenario.
struct ResolvedSummand {
  std::string name;
  int n = 1;
  int d = 1;
  Duality duality = Duality::orthogonal;
  const GlobalElement* element = nullptr;
  const CuspidalDatum* datum = nullptr;
};

// A parameter after validation, with summands in the order used for the
// basis a₁, a₂, …: SK puts ρ ⊠ S₁ first; other types keep declaration order.
struct ClassifiedParameter {
  ParamType type;
  std::vector<ResolvedSummand> summands;
};

ClassifiedParameter classify(const Scenario& scenario, const AParameter& phi);
ComponentGroup component_group(const ClassifiedParameter& phi);
F2Character epsilon_tilde(const ClassifiedParameter& phi);

std::string summand_label(const ResolvedSummand& s);

// Declared shape of ρ at the place, or the forced degenerate shape at a
// complex place when none is declared.
LocalRhoShape shape_at(const CuspidalDatum& datum, const Place& place);

// Local root numbers ε(1/2, ρ_v) and ε(1/2, ρ_v × χ_a) of a symplectic
// shape; twist is the class of χ_a at the place.
Sign local_root(const Place& place, const LocalRhoShape& shape);
Sign local_twisted_root(const Place& place, const LocalRhoShape& shape,
                        const std::string& element_name, const SquareClass& twist);

// Checks the datum-level invariants (root products, L-value flags, shape
// compatibility, central characters). Throws on the first failure.
void validate_datum(const Scenario& scenario, const CuspidalDatum& datum);

// Full validation: places, elements, reciprocity, data, Mp₂ data, parameter.
void validate_scenario(const Scenario& scenario);

}  // namespace mp4
