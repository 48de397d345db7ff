#include "mp4/arithmetic.hpp"

#include <array>
#include <bit>

#include "mp4/error.hpp"

namespace mp4 {

Sign sign_from_int(int v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw validation_error("InvalidSign", "sign must be +1 or -1, got " + std::to_string(v));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {
    "nonarch-odd-1mod4", "nonarch-odd-3mod4", "nonarch-dyadic", "real", "complex"};

const std::array<std::string_view, 4> kOddLabels = {"1", "u", "p", "up"};
const std::array<std::string_view, 8> kDyadicLabels = {"1", "-1", "5", "-5",
                                                       "2", "-2", "10", "-10"};
const std::array<std::string_view, 2> kRealLabels = {"1", "-1"};

// Gram matrices of the Hilbert pairing over ℤ/2 in the bases documented in
// the header; row i is a bitmask of the j with (e_i, e_j) = -1.
//
// Odd residue characteristic: (u,u) = 1, (u,p) = -1, (p,p) = (-1,p), which is
// -1 exactly when q ≡ 3 mod 4.
// ℚ₂: for a = 2^α u, b = 2^β v, (a,b) = (-1)^{ε(u)ε(v) + α ω(v) + β ω(u)};
// ε(-1) = 1, ε(5) = 0, ω(-1) = 0, ω(5) = 1.
// ℝ: (-1,-1) = -1.
std::array<std::uint8_t, 3> gram(PlaceKind kind) {
  switch (kind) {
    case PlaceKind::odd_1mod4: return {0b10, 0b01, 0};
    case PlaceKind::odd_3mod4: return {0b10, 0b11, 0};
    case PlaceKind::dyadic: return {0b001, 0b100, 0b010};
    case PlaceKind::real: return {0b1, 0, 0};
    case PlaceKind::complex: return {0, 0, 0};
  }
  return {0, 0, 0};
}

void require_kind(const Place& place, const SquareClass& c) {
  if (c.kind != place.kind) {
    throw validation_error("PlaceMismatch", "square class " + label(c) + " of kind " +
                                                std::string(to_string(c.kind)) +
                                                " used at place " + place.id);
  }
}

}  // namespace

std::string_view to_string(PlaceKind kind) { return kKindNames[static_cast<int>(kind)]; }

PlaceKind parse_place_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<PlaceKind>(i);
  }
  throw schema_error("unknown place kind '" + std::string(text) + "'");
}

bool is_nonarchimedean(PlaceKind kind) {
  return kind == PlaceKind::odd_1mod4 || kind == PlaceKind::odd_3mod4 ||
         kind == PlaceKind::dyadic;
}

int square_class_rank(PlaceKind kind) {
  switch (kind) {
    case PlaceKind::odd_1mod4:
    case PlaceKind::odd_3mod4: return 2;
    case PlaceKind::dyadic: return 3;
    case PlaceKind::real: return 1;
    case PlaceKind::complex: return 0;
  }
  return 0;
}

SquareClass make_class(PlaceKind kind, unsigned bits) {
  if (bits >= (1u << square_class_rank(kind))) {
    throw validation_error("InvalidSquareClass", "bits out of range for " +
                                                     std::string(to_string(kind)));
  }
  return SquareClass{kind, static_cast<std::uint8_t>(bits)};
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  if (a.kind != b.kind) throw validation_error("PlaceMismatch", "product of classes at different place kinds");
  return SquareClass{a.kind, static_cast<std::uint8_t>(a.bits ^ b.bits)};
}

std::string label(const SquareClass& c) {
  switch (c.kind) {
    case PlaceKind::odd_1mod4:
    case PlaceKind::odd_3mod4: return std::string(kOddLabels[c.bits]);
    case PlaceKind::dyadic: return std::string(kDyadicLabels[c.bits]);
    case PlaceKind::real: return std::string(kRealLabels[c.bits]);
    case PlaceKind::complex: return "1";
  }
  return "1";
}

std::optional<SquareClass> parse_class(PlaceKind kind, std::string_view text) {
  for (const auto& c : all_classes(kind)) {
    if (label(c) == text) return c;
  }
  return std::nullopt;
}

std::vector<SquareClass> all_classes(PlaceKind kind) {
  std::vector<SquareClass> out;
  for (unsigned b = 0; b < (1u << square_class_rank(kind)); ++b) out.push_back(make_class(kind, b));
  return out;
}

SquareClass class_of_minus_one(PlaceKind kind) {
  switch (kind) {
    case PlaceKind::odd_1mod4: return make_class(kind, 0);
    case PlaceKind::odd_3mod4: return make_class(kind, 0b01);
    case PlaceKind::dyadic: return make_class(kind, 0b001);
    case PlaceKind::real: return make_class(kind, 0b1);
    case PlaceKind::complex: return make_class(kind, 0);
  }
  return make_class(kind, 0);
}

Sign hilbert(const Place& place, const SquareClass& a, const SquareClass& b) {
  require_kind(place, a);
  require_kind(place, b);
  const auto g = gram(place.kind);
  int parity = 0;
  for (int i = 0; i < square_class_rank(place.kind); ++i) {
    if (a.bits & (1u << i)) parity ^= std::popcount(static_cast<unsigned>(g[i] & b.bits)) & 1;
  }
  return sign_of_bit(parity != 0);
}

Sign chi_minus_one(const Place& place, const SquareClass& a) {
  return hilbert(place, a, class_of_minus_one(place.kind));
}

std::string character_name(const SquareClass& c) {
  return c.trivial() ? "1" : "chi_" + label(c);
}

std::string psi_name(const SquareClass& c) {
  return c.trivial() ? "psi" : "psi_" + label(c);
}

const SquareClass& GlobalElement::at(const std::string& place_id) const {
  auto it = classes.find(place_id);
  if (it == classes.end()) {
    throw validation_error("MissingLocalClass",
                           "element '" + name + "' has no class at place '" + place_id + "'");
  }
  return it->second;
}

GlobalElement trivial_element(const std::vector<Place>& places) {
  GlobalElement e{"1", {}};
  for (const auto& p : places) e.classes[p.id] = make_class(p.kind, 0);
  return e;
}

GlobalElement minus_one_element(const std::vector<Place>& places) {
  GlobalElement e{"-1", {}};
  for (const auto& p : places) e.classes[p.id] = class_of_minus_one(p.kind);
  return e;
}

GlobalElement multiply(const GlobalElement& a, const GlobalElement& b, std::string name) {
  GlobalElement out{std::move(name), {}};
  for (const auto& [id, c] : a.classes) out.classes[id] = c * b.at(id);
  return out;
}

bool same_character(const GlobalElement& a, const GlobalElement& b) {
  return a.classes == b.classes;
}

Sign hilbert_product(const std::vector<Place>& places, const GlobalElement& a,
                     const GlobalElement& b) {
  Sign product = Sign::plus;
  for (const auto& p : places) product = product * hilbert(p, a.at(p.id), b.at(p.id));
  return product;
}

std::optional<ReciprocityViolation> validate_reciprocity(
    const std::vector<Place>& places, const std::vector<GlobalElement>& elements) {
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      const Sign product = hilbert_product(places, a, b);
      if (product != Sign::plus) return ReciprocityViolation{a.name, b.name, product};
    }
  }
  return std::nullopt;
}

}  // namespace mp4
