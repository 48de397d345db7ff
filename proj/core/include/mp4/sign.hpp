#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace mp4 {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign operator-(Sign a) {
  return a == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr int value(Sign s) { return static_cast<int>(s); }

// ℤ/2 view: +1 is 0, -1 is 1.
constexpr bool bit(Sign s) { return s == Sign::minus; }

constexpr Sign sign_of_bit(bool b) { return b ? Sign::minus : Sign::plus; }

Sign sign_from_int(int v);

inline std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

using Rational = boost::rational<std::int64_t>;

// "0", "3/2", "-1/2"
std::string to_string(const Rational& r);

}  // namespace mp4
