#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>

#include "fht/errors.hpp"
#include "fht/image.hpp"

namespace fht {

/// Image of independent uniform values in [0, max_value], reproducible from the seed.
inline GrayImage random_image(int width, int height, int max_value, std::uint64_t seed) {
  if (max_value < 0 || max_value > 65535) {
    throw RangeError("max_value must be in [0, 65535], got " + std::to_string(max_value));
  }
  GrayImage img(width, height);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, max_value);
  for (auto& v : img.values()) v = static_cast<Pixel>(dist(rng));
  return img;
}

/// Ellipse in the [-1, 1]^2 phantom frame (y upward).
///
/// Intensity is stored in hundredths so that overlapping contributions add up
/// exactly.
struct Ellipse {
  int intensity_centi;
  double semi_x;
  double semi_y;
  double center_x;
  double center_y;
  double angle_deg;

  bool contains(double u, double v) const noexcept {
    const double phi = angle_deg * std::numbers::pi / 180.0;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double dx = u - center_x;
    const double dy = v - center_y;
    const double xr = dx * c + dy * s;
    const double yr = -dx * s + dy * c;
    return (xr * xr) / (semi_x * semi_x) + (yr * yr) / (semi_y * semi_y) <= 1.0;
  }
};

/// The original ten-ellipse Shepp–Logan head phantom.
inline constexpr std::array<Ellipse, 10> kSheppLoganEllipses{{
    {200, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-98, 0.6624, 0.874, 0.0, -0.0184, 0.0},
    {-2, 0.11, 0.31, 0.22, 0.0, -18.0},
    {-2, 0.16, 0.41, -0.22, 0.0, 18.0},
    {1, 0.21, 0.25, 0.0, 0.35, 0.0},
    {1, 0.046, 0.046, 0.0, 0.1, 0.0},
    {1, 0.046, 0.046, 0.0, -0.1, 0.0},
    {1, 0.046, 0.023, -0.08, -0.605, 0.0},
    {1, 0.023, 0.023, 0.0, -0.606, 0.0},
    {1, 0.023, 0.046, 0.06, -0.605, 0.0},
}};

/// Summed intensity (hundredths) of all ellipses covering (u, v).
inline int phantom_intensity_centi(std::span<const Ellipse> ellipses, double u, double v) {
  int sum = 0;
  for (const auto& e : ellipses) {
    if (e.contains(u, v)) sum += e.intensity_centi;
  }
  return sum;
}

/// Maps a summed intensity in [0, 2.00] to [0, 255], rounding half up.
inline Pixel phantom_gray_level(int intensity_centi) {
  const int clamped = std::clamp(intensity_centi, 0, 200);
  return static_cast<Pixel>((2 * 255 * clamped + 200) / 400);
}

/// Rasterizes ellipses on an n x n grid by pixel-center inclusion.
///
/// Pixel (x, y) has its center at u = (2x + 1 - n) / n, v = (2y + 1 - n) / n,
/// which keeps mirrored pixels at exactly negated coordinates.
inline GrayImage render_phantom(int n, std::span<const Ellipse> ellipses) {
  GrayImage img(n, n);
  const double size = n;
  for (int y = 0; y < n; ++y) {
    const double v = static_cast<double>(2 * y + 1 - n) / size;
    for (int x = 0; x < n; ++x) {
      const double u = static_cast<double>(2 * x + 1 - n) / size;
      img(x, y) = phantom_gray_level(phantom_intensity_centi(ellipses, u, v));
    }
  }
  return img;
}

inline GrayImage shepp_logan(int n) { return render_phantom(n, kSheppLoganEllipses); }

}  // namespace fht
