#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fht/errors.hpp"
#include "fht/image.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"

namespace fht {

/// How a width-w line with total rise t is assembled from its two halves.
///
/// The left half (width ceil(w/2)) rises by `left_rise`, the right half by
/// `right_rise`; the remaining `t - left_rise - right_rise` (0 or 1) is the
/// step across the joint column boundary.
struct DyadicSplit {
  int left_rise = 0;
  int right_rise = 0;

  friend bool operator==(const DyadicSplit&, const DyadicSplit&) = default;
};

/// Recursive column-halving plan of the generalized Brady–Yong transform.
///
/// The plan fixes, for every sub-width reached by halving and every rise t,
/// which sub-lines are concatenated. Even widths split t proportionally, which
/// for w = 2m is the classical t_l = t_r = floor(t/2). Odd widths start from the
/// proportional split and search nearby continuous splits for the one with the
/// smallest orthotropic error of the assembled line (ties keep the proportional
/// split). The plan depends only on the width; it is immutable once built.
class DyadicPlan {
 public:
  explicit DyadicPlan(int width) {
    if (width < 1) throw RangeError("dyadic plan width must be positive");
    std::map<int, std::shared_ptr<const Node>> cache;
    root_ = build(width, cache);
  }

  int width() const noexcept { return root_->width; }
  int left_width() const noexcept { return root_->left_width; }
  int right_width() const noexcept { return root_->width - root_->left_width; }

  DyadicSplit split(int t) const {
    check_rise(t);
    if (root_->width == 1) return {};
    return {root_->left_rise[t], root_->right_rise[t]};
  }

  /// Unwrapped rows of the line with rise t starting at row s.
  std::vector<std::int64_t> rows(int t, std::int64_t s = 0) const {
    check_rise(t);
    std::vector<std::int64_t> out(static_cast<std::size_t>(root_->width));
    trace(*root_, t, s, out.data());
    return out;
  }

  /// Writes the rows of line t starting at s into `out` (size == width()).
  void rows_into(int t, std::int64_t s, std::span<std::int64_t> out) const {
    check_rise(t);
    if (out.size() != static_cast<std::size_t>(root_->width)) throw RangeError("row buffer size mismatch");
    trace(*root_, t, s, out.data());
  }

  Pattern pattern(int height, int t, int s) const {
    if (height < 1) throw RangeError("pattern height must be positive");
    if (s < 0 || s >= height) {
      throw RangeError("intercept " + std::to_string(s) + " outside [0, " + std::to_string(height) + ")");
    }
    return Pattern{root_->width, s, height, rows(t, s)};
  }

  /// Hough image of `img` restricted to this plan's width, plus the addition count.
  TransformResult<HoughImage> transform(const GrayImage& img) const {
    if (img.width() != root_->width) {
      throw RangeError("image width " + std::to_string(img.width()) + " does not match plan width " +
                       std::to_string(root_->width));
    }
    check_accumulator_capacity(img.max_value(), static_cast<std::uint64_t>(img.width()));
    std::uint64_t additions = 0;
    Grid<Accumulator> merged = transform_strip(*root_, img, 0, additions);
    HoughImage out(img.width(), img.height(), "gdt");
    out.values() = std::move(merged.values());
    return {std::move(out), OpCount{additions}};
  }

 private:
  struct Node {
    int width = 1;
    int left_width = 0;
    std::vector<int> left_rise;
    std::vector<int> right_rise;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  void check_rise(int t) const {
    if (t < 0 || t >= root_->width) {
      throw RangeError("slope parameter " + std::to_string(t) + " outside [0, " + std::to_string(root_->width) + ")");
    }
  }

  static void trace(const Node& node, int t, std::int64_t base, std::int64_t* out) {
    if (node.width == 1) {
      *out = base;
      return;
    }
    const int tr = node.right_rise[t];
    trace(*node.left, node.left_rise[t], base, out);
    trace(*node.right, tr, base + t - tr, out + node.left_width);
  }

  static std::shared_ptr<const Node> build(int w, std::map<int, std::shared_ptr<const Node>>& cache) {
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    auto node = std::make_shared<Node>();
    node->width = w;
    if (w > 1) {
      const int wl = (w + 1) / 2;
      const int wr = w - wl;
      node->left_width = wl;
      node->left = build(wl, cache);
      node->right = build(wr, cache);
      node->left_rise.resize(static_cast<std::size_t>(w));
      node->right_rise.resize(static_cast<std::size_t>(w));
      for (int t = 0; t < w; ++t) {
        node->left_rise[t] = static_cast<int>(round_half_up(std::int64_t{t} * (wl - 1), w - 1));
        node->right_rise[t] = static_cast<int>(round_half_up(std::int64_t{t} * (wr - 1), w - 1));
      }
      if (w % 2 == 1) refine_odd(*node);
    }
    cache.emplace(w, node);
    return node;
  }

  // Scaled error (w - 1) * |line - row| is an integer, so candidates compare exactly.
  static void refine_odd(Node& node) {
    constexpr int kWindow = 2;
    const int w = node.width;
    const int wl = node.left_width;
    const int wr = w - wl;
    std::vector<std::int64_t> buf(static_cast<std::size_t>(wl));

    auto left_error = [&](int t, int cl) {
      trace(*node.left, cl, 0, buf.data());
      std::int64_t worst = 0;
      for (int x = 0; x < wl; ++x) {
        worst = std::max(worst, std::abs(std::int64_t{w - 1} * buf[x] - std::int64_t{t} * x));
      }
      return worst;
    };
    auto right_error = [&](int t, int cr) {
      trace(*node.right, cr, t - cr, buf.data());
      std::int64_t worst = 0;
      for (int x = 0; x < wr; ++x) {
        worst = std::max(worst, std::abs(std::int64_t{w - 1} * buf[x] - std::int64_t{t} * (x + wl)));
      }
      return worst;
    };

    for (int t = 0; t < w; ++t) {
      const int tl0 = node.left_rise[t];
      const int tr0 = node.right_rise[t];
      std::int64_t best = std::max(left_error(t, tl0), right_error(t, tr0));
      int best_l = tl0;
      int best_r = tr0;
      for (int cl = std::max(0, tl0 - kWindow); cl <= std::min(wl - 1, tl0 + kWindow); ++cl) {
        std::int64_t el = -1;
        for (int joint = 0; joint <= 1; ++joint) {
          const int cr = t - cl - joint;
          if (cr < 0 || cr >= wr || (cl == tl0 && cr == tr0)) continue;
          if (el < 0) el = left_error(t, cl);
          if (el >= best) break;
          const std::int64_t score = std::max(el, right_error(t, cr));
          if (score < best) {
            best = score;
            best_l = cl;
            best_r = cr;
          }
        }
      }
      node.left_rise[t] = best_l;
      node.right_rise[t] = best_r;
    }
  }

  static Grid<Accumulator> transform_strip(const Node& node, const GrayImage& img, int x0, std::uint64_t& additions) {
    const int h = img.height();
    Grid<Accumulator> out(node.width, h);
    if (node.width == 1) {
      for (int y = 0; y < h; ++y) out(0, y) = img(x0, y);
      return out;
    }
    const Grid<Accumulator> left = transform_strip(*node.left, img, x0, additions);
    const Grid<Accumulator> right = transform_strip(*node.right, img, x0 + node.left_width, additions);
    for (int t = 0; t < node.width; ++t) {
      const int tl = node.left_rise[t];
      const int tr = node.right_rise[t];
      const int shift = static_cast<int>(floor_mod(t - tr, h));
      for (int s = 0; s < h; ++s) {
        int sr = s + shift;
        if (sr >= h) sr -= h;
        out(t, s) = left(tl, s) + right(tr, sr);
      }
    }
    additions += static_cast<std::uint64_t>(node.width) * static_cast<std::uint64_t>(h);
    return out;
  }

  std::shared_ptr<const Node> root_;
};

/// Generalized dyadic fast Hough transform of predominantly horizontal lines.
inline TransformResult<HoughImage> gdt_transform(const GrayImage& img) { return DyadicPlan(img.width()).transform(img); }

/// Line with rise t and intercept s traversed by gdt_transform on a w x h image.
inline Pattern gdt_pattern(int w, int h, int t, int s) { return DyadicPlan(w).pattern(h, t, s); }

namespace detail {
inline std::uint64_t dyadic_merges(int w, std::map<int, std::uint64_t>& memo) {
  if (w <= 1) return 0;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const std::uint64_t a = dyadic_merges((w + 1) / 2, memo) + dyadic_merges(w / 2, memo) + static_cast<std::uint64_t>(w);
  memo.emplace(w, a);
  return a;
}
}  // namespace detail

/// Additions gdt_transform performs on a w x h image, without running it.
inline OpCount gdt_opcount(std::uint64_t w, std::uint64_t h) {
  if (w < 1 || h < 1) throw RangeError("opcount dimensions must be positive");
  if (w > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) throw RangeError("width too large");
  std::map<int, std::uint64_t> memo;
  return OpCount{detail::dyadic_merges(static_cast<int>(w), memo) * h};
}

}  // namespace fht
