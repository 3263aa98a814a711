#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fht/errors.hpp"

namespace fht {

/// Row-major 2D grid addressed as (x, y), x rightward and y upward.
///
/// Row y = 0 is the bottom row of the image; the origin sits at the center of
/// the bottom-left pixel.
template <typename T>
class Grid {
 public:
  using value_type = T;

  Grid() = default;

  Grid(int width, int height, T fill = T{}) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw RangeError("grid dimensions must be positive, got " + std::to_string(width) + "x" +
                       std::to_string(height));
    }
    values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return values_.size(); }

  T& operator()(int x, int y) noexcept { return values_[index(x, y)]; }
  const T& operator()(int x, int y) const noexcept { return values_[index(x, y)]; }

  T& at(int x, int y) {
    check(x, y);
    return values_[index(x, y)];
  }
  const T& at(int x, int y) const {
    check(x, y);
    return values_[index(x, y)];
  }

  std::vector<T>& values() noexcept { return values_; }
  const std::vector<T>& values() const noexcept { return values_; }

  T max_value() const { return values_.empty() ? T{} : *std::max_element(values_.begin(), values_.end()); }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.values_ == b.values_;
  }

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  void check(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) {
      throw RangeError("pixel (" + std::to_string(x) + ", " + std::to_string(y) + ") outside " +
                       std::to_string(width_) + "x" + std::to_string(height_) + " grid");
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> values_;
};

using Pixel = std::uint16_t;
using Accumulator = std::uint64_t;

/// Input image with non-negative 16-bit pixel values.
using GrayImage = Grid<Pixel>;

/// Sum of all pixel values of an image.
inline Accumulator total_sum(const GrayImage& img) {
  return std::accumulate(img.values().begin(), img.values().end(), Accumulator{0});
}

/// Hough image indexed by (t, s): slope parameter along x, intercept along y.
///
/// Entry (t, s) holds the sum of exactly one input pixel per column along the
/// discrete line with those parameters.
class HoughImage : public Grid<Accumulator> {
 public:
  HoughImage() = default;
  HoughImage(int width, int height, std::string algorithm)
      : Grid<Accumulator>(width, height), algorithm_(std::move(algorithm)) {}

  const std::string& algorithm() const noexcept { return algorithm_; }
  void set_algorithm(std::string tag) { algorithm_ = std::move(tag); }

 private:
  std::string algorithm_;
};

/// Number of pixel-value additions performed (or predicted) by a transform.
struct OpCount {
  std::uint64_t additions = 0;

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

template <typename Image>
struct TransformResult {
  Image hough;
  OpCount ops;
};

/// Rejects images whose column sums could overflow the accumulator.
inline void check_accumulator_capacity(std::uint64_t max_pixel, std::uint64_t columns) {
  if (max_pixel != 0 && columns > UINT64_MAX / max_pixel) {
    throw CapacityError("accumulator overflow: " + std::to_string(columns) + " columns of values up to " +
                        std::to_string(max_pixel));
  }
}

}  // namespace fht
