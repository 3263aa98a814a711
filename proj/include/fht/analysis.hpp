#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fht/dyadic.hpp"
#include "fht/errors.hpp"
#include "fht/pattern.hpp"
#include "fht/rational.hpp"
#include "fht/reference.hpp"
#include "fht/superpixel.hpp"

namespace fht {

/// Maximum vertical deviation between `pattern` and the line s + t x / (w - 1),
/// where s is the pattern's start row. Exact.
inline Rational ortho_error(const Pattern& pattern, int t) {
  const int w = pattern.width;
  if (w <= 1) return Rational(0);
  std::int64_t worst = 0;
  for (int x = 0; x < w; ++x) {
    const std::int64_t scaled = (pattern.start_row - pattern.rows[x]) * (w - 1) + std::int64_t{t} * x;
    worst = std::max(worst, scaled < 0 ? -scaled : scaled);
  }
  return Rational(worst, w - 1);
}

/// Which family of discrete lines an error or complexity sweep measures.
struct Algorithm {
  enum class Kind { dyadic, superpixel_lambda, superpixel_spec, reference };

  Kind kind = Kind::dyadic;
  double lambda = 1.0;
  SuperpixelSpec spec{};

  static Algorithm dyadic() { return {Kind::dyadic}; }
  static Algorithm reference() { return {Kind::reference}; }
  static Algorithm superpixel(double lambda) { return {Kind::superpixel_lambda, lambda}; }
  static Algorithm superpixel(const SuperpixelSpec& spec) { return {Kind::superpixel_spec, 1.0, spec}; }

  std::string tag() const {
    switch (kind) {
      case Kind::dyadic: return "gdt";
      case Kind::reference: return "ref";
      default: return "sp";
    }
  }
};

struct ErrorReport {
  std::string algorithm;
  int width = 0;
  int height = 0;
  std::optional<double> lambda;
  SuperpixelSpec spec{};
  std::vector<Rational> per_slope;
  Rational global_max{0};
};

/// Error of every slope of an n x n image, intercept fixed at 0.
///
/// All line families here commute with integer shifts of s, so s = 0 covers
/// every intercept.
inline ErrorReport error_report(const Algorithm& algo, int n) {
  if (n < 1) throw RangeError("image size must be positive");
  ErrorReport r;
  r.algorithm = algo.tag();
  r.width = n;
  r.height = n;
  r.per_slope.reserve(static_cast<std::size_t>(n));

  switch (algo.kind) {
    case Algorithm::Kind::dyadic: {
      const DyadicPlan plan(n);
      for (int t = 0; t < n; ++t) r.per_slope.push_back(ortho_error(plan.pattern(n, t, 0), t));
      break;
    }
    case Algorithm::Kind::reference:
      for (int t = 0; t < n; ++t) r.per_slope.push_back(ortho_error(ref_pattern(n, t, 0), t));
      break;
    case Algorithm::Kind::superpixel_lambda:
    case Algorithm::Kind::superpixel_spec: {
      if (algo.kind == Algorithm::Kind::superpixel_lambda) {
        r.lambda = algo.lambda;
        r.spec = n >= 2 ? spec_from_lambda(n, algo.lambda) : SuperpixelSpec{};
      } else {
        r.spec = algo.spec;
      }
      const SuperpixelGeometry geometry(n, n, r.spec);
      for (int t = 0; t < n; ++t) r.per_slope.push_back(ortho_error(geometry.pattern(t, 0), t));
      break;
    }
  }
  r.global_max = *std::max_element(r.per_slope.begin(), r.per_slope.end());
  return r;
}

inline std::vector<ErrorReport> error_sweep(const Algorithm& algo, const std::vector<int>& sizes) {
  std::vector<ErrorReport> out;
  out.reserve(sizes.size());
  for (int n : sizes) out.push_back(error_report(algo, n));
  return out;
}

struct ComplexityPoint {
  int n = 0;
  std::optional<double> lambda;
  int sp_size = 1;
  std::uint64_t additions = 0;
  double normalized = 0.0;
};

/// T / (n^2 ln^3 n), the normalization used for the superpixel transform.
inline double normalize_log_cubed(std::uint64_t additions, int n) {
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(additions) / (static_cast<double>(n) * n * ln * ln * ln);
}

/// T / (n h log2 n), the normalization used for the dyadic transform.
inline double normalize_linearithmic(std::uint64_t additions, int n, int h) {
  return static_cast<double>(additions) / (static_cast<double>(n) * h * std::log2(static_cast<double>(n)));
}

/// Analytic addition counts of the auto-sized superpixel transform on n x n images.
inline std::vector<ComplexityPoint> complexity_sweep(const std::vector<double>& lambdas, const std::vector<int>& sizes) {
  std::vector<ComplexityPoint> out;
  out.reserve(lambdas.size() * sizes.size());
  for (double lambda : lambdas) {
    for (int n : sizes) {
      if (n < 2) throw RangeError("complexity sweep requires n >= 2");
      const SuperpixelSpec spec = spec_from_lambda(n, lambda);
      const std::uint64_t t = sp_opcount(n, n, spec).additions;
      out.push_back({n, lambda, spec.width, t, normalize_log_cubed(t, n)});
    }
  }
  return out;
}

/// Analytic counts for a fixed algorithm (dyadic, explicit spec or reference).
inline ComplexityPoint complexity_point(const Algorithm& algo, int n) {
  if (n < 2) throw RangeError("complexity point requires n >= 2");
  switch (algo.kind) {
    case Algorithm::Kind::dyadic: {
      const auto t = gdt_opcount(n, n).additions;
      return {n, std::nullopt, 1, t, normalize_linearithmic(t, n, n)};
    }
    case Algorithm::Kind::reference: {
      const auto t = static_cast<std::uint64_t>(n) * n * (n - 1);
      return {n, std::nullopt, 1, t, static_cast<double>(t) / (static_cast<double>(n) * n * n)};
    }
    case Algorithm::Kind::superpixel_lambda:
      return complexity_sweep({algo.lambda}, {n}).front();
    case Algorithm::Kind::superpixel_spec: {
      const auto t = sp_opcount(n, n, algo.spec).additions;
      return {n, std::nullopt, algo.spec.width, t, normalize_log_cubed(t, n)};
    }
  }
  return {};
}

struct SizePoint {
  int n = 0;
  double lambda = 1.0;
  int sp_size = 1;
};

inline std::vector<SizePoint> size_curve(const std::vector<double>& lambdas, const std::vector<int>& sizes) {
  std::vector<SizePoint> out;
  out.reserve(lambdas.size() * sizes.size());
  for (double lambda : lambdas) {
    for (int n : sizes) out.push_back({n, lambda, superpixel_size(n, lambda).chosen_size});
  }
  return out;
}

}  // namespace fht
