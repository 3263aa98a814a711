#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fht {

using Rational = boost::rational<std::int64_t>;

/// Floor of a / b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Non-negative remainder of a modulo m for m > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Nearest integer to num / den with ties rounded up, i.e. floor(num/den + 1/2).
constexpr std::int64_t round_half_up(std::int64_t num, std::int64_t den) noexcept {
  return floor_div(2 * num + den, 2 * den);
}

inline std::int64_t round_half_up(const Rational& r) { return round_half_up(r.numerator(), r.denominator()); }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace fht
