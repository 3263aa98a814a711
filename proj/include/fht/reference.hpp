#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fht/errors.hpp"
#include "fht/image.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"

namespace fht {

/// Digital straight line: the ideal line s + t x / (w - 1) rounded half up per column.
///
/// Its orthotropic error never exceeds 1/2.
inline Pattern ref_pattern(int w, int t, std::int64_t s, int wrap_height = std::numeric_limits<int>::max()) {
  if (w < 1) throw RangeError("pattern width must be positive");
  if (t < 0 || t >= w) throw RangeError("slope parameter " + std::to_string(t) + " outside [0, " + std::to_string(w) + ")");
  Pattern p{w, s, wrap_height, std::vector<std::int64_t>(static_cast<std::size_t>(w), s)};
  for (int x = 1; x < w; ++x) p.rows[x] = s + round_half_up(std::int64_t{t} * x, w - 1);
  return p;
}

/// Direct summation along rounded lines; w - 1 additions per output entry.
inline TransformResult<HoughImage> ref_transform(const GrayImage& img) {
  const int w = img.width();
  const int h = img.height();
  check_accumulator_capacity(img.max_value(), static_cast<std::uint64_t>(w));
  HoughImage out(w, h, "ref");
  std::vector<int> rise(static_cast<std::size_t>(w));
  for (int t = 0; t < w; ++t) {
    for (int x = 0; x < w; ++x) {
      rise[x] = w == 1 ? 0 : static_cast<int>(floor_mod(round_half_up(std::int64_t{t} * x, w - 1), h));
    }
    for (int s = 0; s < h; ++s) {
      Accumulator sum = 0;
      for (int x = 0; x < w; ++x) {
        int y = s + rise[x];
        if (y >= h) y -= h;
        sum += img(x, y);
      }
      out(t, s) = sum;
    }
  }
  const std::uint64_t entries = static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(h);
  return {std::move(out), OpCount{entries * static_cast<std::uint64_t>(w - 1)}};
}

}  // namespace fht
