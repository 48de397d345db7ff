#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mp4/sign.hpp"

namespace mp4 {

enum class PlaceKind { odd_1mod4, odd_3mod4, dyadic, real, complex };

std::string_view to_string(PlaceKind kind);
PlaceKind parse_place_kind(std::string_view text);
bool is_nonarchimedean(PlaceKind kind);

// Rank of F_v^×/(F_v^×)² over ℤ/2.
int square_class_rank(PlaceKind kind);

struct Place {
  std::string id;
  PlaceKind kind;

  friend bool operator==(const Place&, const Place&) = default;
};

// An element of F_v^×/(F_v^×)², stored as a bit vector in a fixed basis:
//   odd places:  bit0 = nonsquare unit u, bit1 = uniformizer p
//   dyadic (ℚ₂): bit0 = -1, bit1 = 5, bit2 = 2
//   real:        bit0 = -1
struct SquareClass {
  PlaceKind kind = PlaceKind::complex;
  std::uint8_t bits = 0;

  bool trivial() const { return bits == 0; }
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
  friend auto operator<=>(const SquareClass&, const SquareClass&) = default;
};

SquareClass make_class(PlaceKind kind, unsigned bits);
SquareClass operator*(const SquareClass& a, const SquareClass& b);

// Canonical labels: "1","u","p","up" (odd); "1","-1" (real);
// "1","-1","5","-5","2","-2","10","-10" (dyadic); "1" (complex).
std::string label(const SquareClass& c);
std::optional<SquareClass> parse_class(PlaceKind kind, std::string_view text);
std::vector<SquareClass> all_classes(PlaceKind kind);

SquareClass class_of_minus_one(PlaceKind kind);

Sign hilbert(const Place& place, const SquareClass& a, const SquareClass& b);
Sign chi_minus_one(const Place& place, const SquareClass& a);

// Names used inside descriptors: "1" for the trivial character, "chi_u" etc.
std::string character_name(const SquareClass& c);
// "psi" or "psi_u".
std::string psi_name(const SquareClass& c);

struct GlobalElement {
  std::string name;
  std::map<std::string, SquareClass> classes;  // place id -> class

  const SquareClass& at(const std::string& place_id) const;
};

GlobalElement trivial_element(const std::vector<Place>& places);
GlobalElement minus_one_element(const std::vector<Place>& places);
GlobalElement multiply(const GlobalElement& a, const GlobalElement& b, std::string name);

// True when the two elements define the same quadratic character on the
// scenario's places.
bool same_character(const GlobalElement& a, const GlobalElement& b);

struct ReciprocityViolation {
  std::string a;
  std::string b;
  Sign product;
};

Sign hilbert_product(const std::vector<Place>& places, const GlobalElement& a,
                     const GlobalElement& b);

// Checks every ordered pair; returns the first failure in declaration order.
std::optional<ReciprocityViolation> validate_reciprocity(
    const std::vector<Place>& places, const std::vector<GlobalElement>& elements);

}  // namespace mp4
