#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "fht/dyadic.hpp"
#include "fht/errors.hpp"
#include "fht/image.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"

namespace fht {

/// Superpixel shape: every input pixel becomes a width x height block whose
/// only non-zero column is `column`.
struct SuperpixelSpec {
  int width = 1;
  int height = 1;
  int column = 0;

  /// Odd square-or-not block with the value column in the middle.
  bool is_centered() const noexcept { return width % 2 == 1 && height % 2 == 1 && column == (width - 1) / 2; }

  void validate() const {
    if (width < 1 || height < 1) throw RangeError("superpixel dimensions must be positive");
    if (column < 0 || column >= width) {
      throw RangeError("superpixel column " + std::to_string(column) + " outside [0, " + std::to_string(width) + ")");
    }
  }

  friend bool operator==(const SuperpixelSpec&, const SuperpixelSpec&) = default;
};

struct ExpandOptions {
  std::uint64_t max_pixels = std::uint64_t{1} << 31;
};

/// Replaces each pixel with its superpixel block.
inline GrayImage expand(const GrayImage& img, const SuperpixelSpec& spec, const ExpandOptions& options = {}) {
  spec.validate();
  const std::uint64_t ew = std::uint64_t(img.width()) * std::uint64_t(spec.width);
  const std::uint64_t eh = std::uint64_t(img.height()) * std::uint64_t(spec.height);
  if (ew > INT32_MAX || eh > INT32_MAX || ew * eh > options.max_pixels) {
    throw CapacityError("expanded image " + std::to_string(ew) + "x" + std::to_string(eh) + " exceeds the budget of " +
                        std::to_string(options.max_pixels) + " pixels");
  }
  GrayImage out(static_cast<int>(ew), static_cast<int>(eh));
  for (int m = 0; m < img.height(); ++m) {
    for (int k = 0; k < img.width(); ++k) {
      const Pixel v = img(k, m);
      const int x = k * spec.width + spec.column;
      for (int y = 0; y < spec.height; ++y) out(x, m * spec.height + y) = v;
    }
  }
  return out;
}

/// Parameters of the expanded-image line standing in for original line (t, s).
struct RemappedParams {
  Rational y_left;
  Rational y_right;
  std::int64_t left_row = 0;   ///< y_left rounded half up, before wrapping
  std::int64_t right_row = 0;  ///< y_right rounded half up, before wrapping
  std::int64_t t_hat = 0;
  std::int64_t s_hat = 0;
};

/// Maps (t, s) of a w x h image to (t_hat, s_hat) of its expansion.
///
/// The line through pixel centers of the original image is rescaled into the
/// expanded grid and its endpoints at columns 0 and w*sp_width - 1 are rounded
/// half up. All arithmetic is exact over the common denominator
/// 2 * sp_width * (w - 1).
inline RemappedParams remap_params(int w, int h, const SuperpixelSpec& spec, int t, int s) {
  spec.validate();
  if (w < 2) throw RangeError("remapping requires width >= 2");
  if (h < 1) throw RangeError("height must be positive");
  if (t < 0 || t >= w) throw RangeError("slope parameter " + std::to_string(t) + " outside [0, " + std::to_string(w) + ")");
  if (s < 0 || s >= h) throw RangeError("intercept " + std::to_string(s) + " outside [0, " + std::to_string(h) + ")");

  const std::int64_t sw = spec.width;
  const std::int64_t sh = spec.height;
  const std::int64_t den = 2 * sw * (w - 1);
  const std::int64_t offset = (sh * (2 * std::int64_t{s} + 1) - 1) * sw * (w - 1);
  const std::int64_t left_num = sh * t * (1 - sw) + offset;
  const std::int64_t right_num = sh * t * (2 * w * sw - sw - 1) + offset;

  RemappedParams p;
  p.y_left = Rational(left_num, den);
  p.y_right = Rational(right_num, den);
  p.left_row = round_half_up(left_num, den);
  p.right_row = round_half_up(right_num, den);
  p.t_hat = floor_mod(p.right_row - p.left_row, std::int64_t{w} * sw);
  p.s_hat = floor_mod(p.left_row, std::int64_t{h} * sh);
  return p;
}

/// Fixed image geometry for the superpixel transform: shape, spec and the
/// dyadic plan of the expanded width.
class SuperpixelGeometry {
 public:
  SuperpixelGeometry(int w, int h, const SuperpixelSpec& spec)
      : w_(w), h_(h), spec_(spec), plan_(expanded_width(w, h, spec)) {}

  int width() const noexcept { return w_; }
  int height() const noexcept { return h_; }
  const SuperpixelSpec& spec() const noexcept { return spec_; }
  const DyadicPlan& plan() const noexcept { return plan_; }

  /// Line of the original image whose pixel sum is J(t, s).
  ///
  /// `start_row` stays s, the intercept of the ideal line; rows[0] may differ
  /// for specs that are not centered.
  ///
  /// Row x is the expanded-image line at the value column of superpixel x,
  /// floor-divided by the superpixel height.
  Pattern pattern(int t, int s) const {
    if (t < 0 || t >= w_) throw RangeError("slope parameter outside [0, w)");
    if (s < 0 || s >= h_) throw RangeError("intercept outside [0, h)");
    Pattern p{w_, s, h_, std::vector<std::int64_t>(static_cast<std::size_t>(w_))};
    if (w_ == 1) {
      p.rows[0] = s;
      return p;
    }
    const auto r = remap_params(w_, h_, spec_, t, s);
    const auto expanded_rows = plan_.rows(static_cast<int>(r.t_hat), r.left_row);
    for (int x = 0; x < w_; ++x) {
      p.rows[x] = floor_div(expanded_rows[static_cast<std::size_t>(x) * spec_.width + spec_.column], spec_.height);
    }
    return p;
  }

 private:
  static int expanded_width(int w, int h, const SuperpixelSpec& spec) {
    spec.validate();
    if (w < 1 || h < 1) throw RangeError("image dimensions must be positive");
    const std::int64_t ew = std::int64_t{w} * spec.width;
    if (ew > INT32_MAX) throw CapacityError("expanded width too large");
    return static_cast<int>(ew);
  }

  int w_;
  int h_;
  SuperpixelSpec spec_;
  DyadicPlan plan_;
};

/// Superpixel fast Hough transform: expand, run the dyadic transform on the
/// expanded image, then sample the entry matching each original line.
inline TransformResult<HoughImage> sp_transform(const GrayImage& img, const SuperpixelSpec& spec,
                                                const ExpandOptions& options = {}) {
  spec.validate();
  const int w = img.width();
  const int h = img.height();
  if (w == 1) {
    HoughImage out(1, h, "sp");
    for (int y = 0; y < h; ++y) out(0, y) = img(0, y);
    return {std::move(out), OpCount{0}};
  }
  const GrayImage expanded = expand(img, spec, options);
  auto full = DyadicPlan(expanded.width()).transform(expanded);
  HoughImage out(w, h, "sp");
  for (int t = 0; t < w; ++t) {
    for (int s = 0; s < h; ++s) {
      const auto r = remap_params(w, h, spec, t, s);
      out(t, s) = full.hough(static_cast<int>(r.t_hat), static_cast<int>(r.s_hat));
    }
  }
  return {std::move(out), full.ops};
}

/// Line summed by sp_transform for parameters (t, s).
inline Pattern sp_pattern(int w, int h, const SuperpixelSpec& spec, int t, int s) {
  return SuperpixelGeometry(w, h, spec).pattern(t, s);
}

/// Additions sp_transform performs; zero for single-column images.
inline OpCount sp_opcount(std::uint64_t w, std::uint64_t h, const SuperpixelSpec& spec) {
  spec.validate();
  if (w == 1) return OpCount{0};
  return gdt_opcount(w * static_cast<std::uint64_t>(spec.width), h * static_cast<std::uint64_t>(spec.height));
}

/// Smallest odd superpixel size meeting the accuracy condition, with diagnostics.
struct SizingResult {
  double lambda = 1.0;
  int chosen_size = 1;
  double condition_lhs = 0.0;  ///< 2 log2(w x) + 13 at the chosen size
  double condition_rhs = 0.0;  ///< 12 lambda x at the chosen size
  double real_root = 0.0;      ///< larger real solution of 2 log2(w x) + 13 = 12 lambda x
};

inline double sizing_lhs(double w, double x) { return 2.0 * std::log2(w * x) + 13.0; }
inline double sizing_rhs(double lambda, double x) { return 12.0 * lambda * x; }
inline bool sizing_condition(double w, double lambda, double x) { return sizing_lhs(w, x) < sizing_rhs(lambda, x); }

/// Scans x = 1, 3, 5, ... for the first size with 2 log2(w x) + 13 < 12 lambda x.
inline SizingResult superpixel_size(int w, double lambda) {
  if (w < 2) throw RangeError("superpixel sizing requires width >= 2");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw RangeError("lambda must lie in (0, 1]");
  const double wd = w;
  int x = 1;
  while (!sizing_condition(wd, lambda, x)) x += 2;

  SizingResult r;
  r.lambda = lambda;
  r.chosen_size = x;
  r.condition_lhs = sizing_lhs(wd, x);
  r.condition_rhs = sizing_rhs(lambda, x);

  // f is convex, non-positive at x - 2 (or near 0+ when x = 1) and positive at x.
  auto f = [&](double v) { return sizing_rhs(lambda, v) - sizing_lhs(wd, v); };
  double lo = x >= 3 ? x - 2.0 : 0.5;
  double hi = x;
  while (f(lo) > 0.0) lo /= 2.0;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  r.real_root = 0.5 * (lo + hi);
  return r;
}

/// Square centered spec from the sizing rule.
inline SuperpixelSpec spec_from_lambda(int w, double lambda) {
  const int x = superpixel_size(w, lambda).chosen_size;
  return SuperpixelSpec{x, x, (x - 1) / 2};
}

}  // namespace fht
