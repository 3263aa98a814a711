// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <boost/math/special_functions/lambert_w.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fht/fht.hpp"
#include "fht/report.hpp"

using namespace fht;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Accumulator pattern_sum(const GrayImage& img, const Pattern& p) {
  Accumulator sum = 0;
  for (int x = 0; x < p.width; ++x) sum += img(x, p.wrapped(x));
  return sum;
}

Outcome dyadic_exact_errors() {
  Outcome o;
  std::ostringstream d;
  for (int w : {4, 16, 64, 256, 8, 32, 128}) {
    const int q = static_cast<int>(std::lround(std::log2(w)));
    const Rational expected = q % 2 == 0 ? Rational(q, 6) : Rational(q, 6) - Rational(1, 18);
    const Rational got = error_report(Algorithm::dyadic(), w).global_max;
    const bool ok = got == expected && std::abs(to_double(got) - to_double(expected)) <= 1e-12;
    if (!ok) {
      o.pass = false;
      d << " w=" << w << " got " << to_string(got) << " want " << to_string(expected) << ";";
    }
  }
  o.detail = o.pass ? "exact at w = 4..256" : d.str();
  return o;
}

Outcome dyadic_bound() {
  Outcome o;
  double worst = -1e9;
  int worst_w = 0;
  for (int w = 2; w <= 512; ++w) {
    const double slack = to_double(error_report(Algorithm::dyadic(), w).global_max) - (std::log2(w) / 6.0 + 7.0 / 12.0);
    if (slack > worst) {
      worst = slack;
      worst_w = w;
    }
    if (slack > 0) o.pass = false;
  }
  o.detail = "max(error - bound) = " + format_decimal(worst) + " at w = " + std::to_string(worst_w);
  return o;
}

Outcome superpixel_accuracy() {
  Outcome o;
  std::ostringstream d;
  double worst_ratio = 0;
  for (double lambda : {0.125, 0.25, 0.5, 0.75, 1.0}) {
    for (int n : {16, 64, 256}) {
      const auto r = error_report(Algorithm::superpixel(lambda), n);
      const Rational bound = Rational(static_cast<std::int64_t>(std::lround(lambda * 8)), 8) + Rational(1, 2);
      if (!(r.global_max < bound)) {
        o.pass = false;
        d << " lambda=" << lambda << " n=" << n << " error " << to_string(r.global_max) << ";";
      }
      worst_ratio = std::max(worst_ratio, to_double(r.global_max / bound));
    }
  }
  o.detail = o.pass ? "max error / (lambda + 1/2) = " + format_decimal(worst_ratio) : d.str();
  return o;
}

Outcome sizing() {
  Outcome o;
  std::ostringstream d;
  if (superpixel_size(1024, 0.125).chosen_size != 29) {
    o.pass = false;
    d << " size(1024, 1/8) != 29;";
  }
  if (sizing_condition(1024, 0.125, 27)) {
    o.pass = false;
    d << " 27 satisfies the inequality;";
  }
  const std::vector<double> lambdas = {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
  std::vector<int> previous(lambdas.size(), 0);
  for (int n = 2; n <= 4096; ++n) {
    int last = INT32_MAX;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const int x = superpixel_size(n, lambdas[i]).chosen_size;
      if (x < previous[i]) {
        o.pass = false;
        d << " not monotone in n at n=" << n << ";";
      }
      if (x > last) {
        o.pass = false;
        d << " not antitone in lambda at n=" << n << ";";
      }
      previous[i] = x;
      last = x;
    }
  }
  o.detail = o.pass ? "29 at (1024, 1/8); 27 fails; monotone over n in [2, 4096]" : d.str();
  return o;
}

Outcome complexity_constants() {
  Outcome o;
  const std::vector<std::pair<double, double>> table = {
      {0.125, 5002.64}, {0.25, 567.53}, {0.5, 270.26}, {0.625, 72.07}, {0.75, 72.07}};
  std::ostringstream d;
  for (const auto& [lambda, c] : table) {
    double worst = 0;
    int worst_n = 0;
    for (int n = 2; n <= 4096; ++n) {
      const auto spec = spec_from_lambda(n, lambda);
      const double ln = std::log(static_cast<double>(n));
      const double v = static_cast<double>(sp_opcount(n, n, spec).additions) / (double(n) * n * ln * ln * ln);
      if (v / c > worst) {
        worst = v / c;
        worst_n = n;
      }
    }
    if (worst > 1.01) o.pass = false;
    d << " lambda=" << lambda << ": " << format_decimal(worst) << " C at n=" << worst_n << ";";
  }
  o.detail = d.str();
  return o;
}

Outcome executed_counts() {
  Outcome o;
  const double c = 1.1657;
  std::mt19937_64 rng(2024);
  std::ostringstream d;
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    SuperpixelSpec spec{1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9), 0};
    spec.column = static_cast<int>(rng() % spec.width);
    const int w = 2 + static_cast<int>(rng() % (4096 / spec.width - 1));
    const int h = 1 + static_cast<int>(rng() % (512 / spec.height));
    const auto img = random_image(w, h, 255, rng());
    const auto dt = gdt_transform(img);
    const auto sp = sp_transform(img, spec);
    const auto expanded = expand(img, spec);
    const auto dt_expanded = gdt_transform(expanded);
    if (dt.ops != gdt_opcount(w, h) || dt_expanded.ops != gdt_opcount(expanded.width(), expanded.height()) ||
        sp.ops != sp_opcount(w, h, spec)) {
      o.pass = false;
      d << " count mismatch at " << w << "x" << h << ";";
    }
    const double ew = static_cast<double>(w) * spec.width;
    const double bound = c * ew * h * spec.height * std::log2(ew);
    worst = std::max(worst, static_cast<double>(sp.ops.additions) / bound);
    if (static_cast<double>(sp.ops.additions) > bound) {
      o.pass = false;
      d << " bound exceeded at " << w << "x" << h << ";";
    }
  }
  o.detail = o.pass ? "50 triples; max sp additions / bound = " + format_decimal(worst) : d.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::ostringstream d;
  std::uint64_t checked = 0;
  for (int trial = 0; trial < 100 && o.pass; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 33);
    const int h = 1 + static_cast<int>(rng() % 33);
    SuperpixelSpec spec{1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5), 0};
    spec.column = static_cast<int>(rng() % spec.width);
    const auto img = random_image(w, h, 65535, rng());
    const Accumulator total = total_sum(img);
    const auto gdt = gdt_transform(img);
    const auto sp = sp_transform(img, spec);
    const auto ref = ref_transform(img);
    const DyadicPlan plan(w);
    const SuperpixelGeometry geometry(w, h, spec);
    for (int t = 0; t < w; ++t) {
      Accumulator cg = 0, cs = 0, cr = 0;
      for (int s = 0; s < h; ++s) {
        const bool ok = gdt.hough(t, s) == pattern_sum(img, plan.pattern(h, t, s)) &&
                        sp.hough(t, s) == pattern_sum(img, geometry.pattern(t, s)) &&
                        ref.hough(t, s) == pattern_sum(img, ref_pattern(w, t, s, h));
        if (!ok) {
          o.pass = false;
          d << " mismatch at " << w << "x" << h << " t=" << t << " s=" << s << ";";
        }
        cg += gdt.hough(t, s);
        cs += sp.hough(t, s);
        cr += ref.hough(t, s);
        checked += 3;
      }
      if (cg != total || cs != total || cr != total) {
        o.pass = false;
        d << " conservation fails at " << w << "x" << h << " t=" << t << ";";
      }
    }
  }
  o.detail = o.pass ? std::to_string(checked) + " entries bit-exact, conservation holds" : d.str();
  return o;
}

Outcome phantom_rows() {
  Outcome o;
  const auto img = shepp_logan(256);
  const auto spec = spec_from_lambda(img.width(), 1.0);
  const SuperpixelGeometry geometry(img.width(), img.height(), spec);
  std::int64_t worst = 0;
  for (int t = 0; t < img.width(); ++t) {
    for (int s = 0; s < img.height(); ++s) {
      const auto sp = geometry.pattern(t, s);
      const auto ref = ref_pattern(img.width(), t, s, img.height());
      for (int x = 0; x < img.width(); ++x) worst = std::max<std::int64_t>(worst, std::abs(sp.rows[x] - ref.rows[x]));
    }
  }
  o.pass = worst <= 1;
  o.detail = "spec " + std::to_string(spec.width) + "x" + std::to_string(spec.height) +
             ", max row difference " + std::to_string(worst);
  return o;
}

Outcome lambert_bracket() {
  Outcome o;
  double lo = 1e9, hi = -1e9;
  for (double lambda : {0.25, 0.5, 1.0}) {
    for (int w = 64; w <= 4096; ++w) {
      const double arg = -3.0 * lambda * std::log(2.0) / (32.0 * std::sqrt(2.0) * w);
      const double root = -boost::math::lambert_wm1(arg) / (6.0 * lambda * std::log(2.0));
      const double gap = superpixel_size(w, lambda).chosen_size - root;
      lo = std::min(lo, gap);
      hi = std::max(hi, gap);
      if (gap < 0 || gap > 2) o.pass = false;
    }
  }
  o.detail = "x_hat - x* in [" + format_decimal(lo) + ", " + format_decimal(hi) + "]";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dyadic exact errors at powers of two", dyadic_exact_errors},
      {"dyadic error bound for w in [2, 512]", dyadic_bound},
      {"superpixel accuracy below lambda + 1/2", superpixel_accuracy},
      {"superpixel sizing", sizing},
      {"complexity constants", complexity_constants},
      {"executed addition counts and bound", executed_counts},
      {"oracle equivalence and conservation", oracle_equivalence},
      {"phantom rows within one of reference", phantom_rows},
      {"Lambert bracket", lambert_bracket},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu: %s | %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
