#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mp4/sign.hpp"

namespace mp4 {

struct RepDescriptor;

struct Zero {};

// A GL-piece of the inducing data: rep|det|^exponent on GL_rank.
struct Segment {
  std::string rep;  // "1", "chi_u", or an opaque GL₂ name
  int rank = 1;
  Rational exponent{0};

  friend bool operator==(const Segment&, const Segment&) = default;
};

// J_{P,ψ}(segments..., inner). group is "Mp4", "Mp2", "SO(V+)", ...
struct LanglandsQuotient {
  std::string group = "Mp4";
  std::string parabolic;
  std::string psi = "psi";
  std::vector<Segment> segments;
  std::vector<RepDescriptor> inner;  // at most one
};

// θ_{W,V,ψ}(source) with V = V_rank^eps.
struct ThetaLiftDesc {
  int space_rank = 1;
  Sign space_eps = Sign::plus;
  std::string psi = "psi";
  std::vector<RepDescriptor> source;  // exactly one
};

struct DiscreteSeriesMp4 {
  std::string lparam;
  std::string label;
};

// ω^parity_{W_n, ψ_twist}.
struct ElementaryWeil {
  int n = 1;
  Sign parity = Sign::plus;
  std::string twist = "1";  // square-class label
};

// π_Λ, a real (limit of) discrete series named by its lowest K′-type;
// weights are doubled half-integers.
struct LimitOrDiscreteSeriesReal {
  std::vector<int> lowest_doubled;
};

struct DirectSum {
  std::vector<RepDescriptor> items;
};

// An atomic name taken from the tables (e.g. "st~_{chi_u,psi}").
struct Named {
  std::string name;
};

struct RepDescriptor {
  std::variant<Zero, LanglandsQuotient, ThetaLiftDesc, DiscreteSeriesMp4, ElementaryWeil,
               LimitOrDiscreteSeriesReal, DirectSum, Named>
      node;

  RepDescriptor() : node(Zero{}) {}
  template <class T>
  RepDescriptor(T value) : node(std::move(value)) {}

  bool is_zero() const { return std::holds_alternative<Zero>(node); }
};

RepDescriptor zero();
RepDescriptor named(std::string name);
Segment segment(std::string rep, Rational exponent, int rank = 1);
RepDescriptor quotient(std::string parabolic, std::vector<Segment> segments,
                       std::vector<RepDescriptor> inner = {}, std::string group = "Mp4",
                       std::string psi = "psi");
RepDescriptor direct_sum(std::vector<RepDescriptor> items);
RepDescriptor omega(int n, Sign parity, std::string twist = "1");

// Canonical form: elementary Weil representations of rank ≥ 2 expanded,
// nested Mp₂ quotients merged, segments sorted, parabolics recomputed, sums
// flattened and sorted, Zero propagated through theta lifts and sums.
RepDescriptor normalize(const RepDescriptor& d);

// ASCII rendering of the canonical form.
std::string render(const RepDescriptor& d);

// Structural equality of canonical forms.
bool equivalent(const RepDescriptor& a, const RepDescriptor& b);

}  // namespace mp4
