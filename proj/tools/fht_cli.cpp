// Command-line front end for the fast Hough transform library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fht/fht.hpp"
#include "fht/report.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string out_csv;
  std::string out_pgm;
  std::string out_svg;
  std::string in_csv;
  std::string algo = "sp";
  std::string lambda;
  std::optional<int> sp_width;
  std::optional<int> sp_height;
  std::optional<int> sp_col;
  std::string sizes;
  std::uint64_t seed = 0;
  int size = 0;
  int width = 0;
  std::string x;
  std::string y;
  std::uint64_t mem_cap = std::uint64_t{1} << 31;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "4,8,16" or "2:512" or "2:4096:7"; the result must be non-empty and ascending.
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    const auto first = item.find(':');
    if (first == std::string::npos) {
      out.push_back(std::stoi(item));
      continue;
    }
    const auto second = item.find(':', first + 1);
    const int lo = std::stoi(item.substr(0, first));
    const int hi = std::stoi(item.substr(first + 1, second == std::string::npos ? std::string::npos : second - first - 1));
    const int step = second == std::string::npos ? 1 : std::stoi(item.substr(second + 1));
    if (step < 1) throw UsageError("size range step must be positive");
    for (int n = lo; n <= hi; n += step) out.push_back(n);
  }
  if (out.empty()) throw UsageError("--sizes must list at least one size");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1) throw UsageError("sizes must be positive");
    if (i > 0 && out[i] <= out[i - 1]) throw UsageError("--sizes must be strictly ascending");
  }
  return out;
}

std::vector<double> parse_lambdas(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    double v = 0;
    const auto slash = item.find('/');
    if (slash != std::string::npos) {
      v = std::stod(item.substr(0, slash)) / std::stod(item.substr(slash + 1));
    } else {
      v = std::stod(item);
    }
    if (!(v > 0.0 && v <= 1.0)) throw UsageError("lambda must lie in (0, 1], got " + item);
    out.push_back(v);
  }
  return out;
}

bool has_explicit_spec(const RunConfig& cfg) { return cfg.sp_width || cfg.sp_height || cfg.sp_col; }

fht::SuperpixelSpec explicit_spec(const RunConfig& cfg) {
  if (!cfg.sp_width) throw UsageError("--sp-width is required with an explicit superpixel");
  fht::SuperpixelSpec spec;
  spec.width = *cfg.sp_width;
  spec.height = cfg.sp_height.value_or(spec.width);
  spec.column = cfg.sp_col.value_or((spec.width - 1) / 2);
  try {
    spec.validate();
  } catch (const fht::RangeError& e) {
    throw UsageError(e.what());
  }
  return spec;
}

// Resolves --algo with --lambda / explicit spec flags into one algorithm per lambda.
std::vector<fht::Algorithm> resolve_algorithms(const RunConfig& cfg) {
  const bool lambda_given = !cfg.lambda.empty();
  const bool spec_given = has_explicit_spec(cfg);
  if (cfg.algo == "gdt" || cfg.algo == "ref") {
    if (lambda_given || spec_given) throw UsageError("--lambda and --sp-* apply only to --algo sp");
    return {cfg.algo == "gdt" ? fht::Algorithm::dyadic() : fht::Algorithm::reference()};
  }
  if (cfg.algo != "sp") throw UsageError("unknown algorithm: " + cfg.algo);
  if (lambda_given && spec_given) throw UsageError("--lambda and an explicit --sp-* superpixel are mutually exclusive");
  if (spec_given) return {fht::Algorithm::superpixel(explicit_spec(cfg))};
  if (!lambda_given) throw UsageError("--algo sp needs --lambda or --sp-width");
  std::vector<fht::Algorithm> out;
  for (double l : parse_lambdas(cfg.lambda)) out.push_back(fht::Algorithm::superpixel(l));
  return out;
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw std::runtime_error("write failed for " + path);
}

int cmd_transform(const RunConfig& cfg) {
  const auto algos = resolve_algorithms(cfg);
  if (algos.size() != 1) throw UsageError("transform takes a single --lambda");
  const fht::GrayImage img = fht::load_graymap(cfg.input);
  const auto& algo = algos.front();

  fht::TransformResult<fht::HoughImage> result;
  std::string detail;
  switch (algo.kind) {
    case fht::Algorithm::Kind::dyadic:
      result = fht::gdt_transform(img);
      break;
    case fht::Algorithm::Kind::reference:
      result = fht::ref_transform(img);
      break;
    default: {
      const fht::SuperpixelSpec spec = algo.kind == fht::Algorithm::Kind::superpixel_lambda && img.width() >= 2
                                           ? fht::spec_from_lambda(img.width(), algo.lambda)
                                           : algo.spec;
      result = fht::sp_transform(img, spec, fht::ExpandOptions{cfg.mem_cap});
      detail = " superpixel " + std::to_string(spec.width) + "x" + std::to_string(spec.height) + " column " +
               std::to_string(spec.column);
      break;
    }
  }

  if (!cfg.out_csv.empty()) {
    emit(cfg.out_csv, [&](std::ostream& out) { fht::write_hough_csv(out, result.hough); });
  }
  if (!cfg.out_pgm.empty()) {
    const fht::Accumulator peak = result.hough.max_value();
    fht::GrayImage view(result.hough.width(), result.hough.height());
    for (std::size_t i = 0; i < view.size(); ++i) {
      const fht::Accumulator v = result.hough.values()[i];
      view.values()[i] = peak == 0 ? 0
                                   : static_cast<fht::Pixel>(fht::round_half_up(static_cast<std::int64_t>(v) * 65535,
                                                                                 static_cast<std::int64_t>(peak)));
    }
    fht::save_graymap(view, cfg.out_pgm);
    emit(cfg.out_pgm + ".txt", [&](std::ostream& out) {
      out << "source: " << result.hough.algorithm() << " Hough image " << result.hough.width() << "x"
          << result.hough.height() << "\n"
          << "normalization: pixel = round(value * 65535 / " << peak << ")\n"
          << "axes: column = t, row = s (bottom row s = 0)\n";
    });
  }
  std::cout << "algorithm: " << result.hough.algorithm() << detail << "\n";
  std::cout << "additions: " << result.ops.additions << "\n";
  return 0;
}

int cmd_phantom(const RunConfig& cfg) {
  if (cfg.size < 1) throw UsageError("--size must be positive");
  if (cfg.out_pgm.empty()) throw UsageError("--out-pgm is required");
  fht::save_graymap(fht::shepp_logan(cfg.size), cfg.out_pgm);
  return 0;
}

int cmd_random(const RunConfig& cfg) {
  if (cfg.size < 1) throw UsageError("--size must be positive");
  if (cfg.out_pgm.empty()) throw UsageError("--out-pgm is required");
  const int w = cfg.width > 0 ? cfg.width : cfg.size;
  fht::save_graymap(fht::random_image(w, cfg.size, 255, cfg.seed), cfg.out_pgm);
  return 0;
}

int cmd_error_sweep(const RunConfig& cfg) {
  const auto sizes = parse_sizes(cfg.sizes);
  std::vector<fht::ErrorReport> reports;
  for (const auto& algo : resolve_algorithms(cfg)) {
    for (auto& r : fht::error_sweep(algo, sizes)) reports.push_back(std::move(r));
  }
  emit(cfg.out_csv, [&](std::ostream& out) { fht::write_error_csv(out, reports); });
  return 0;
}

int cmd_opcount(const RunConfig& cfg) {
  const auto sizes = parse_sizes(cfg.sizes);
  std::vector<fht::ComplexityPoint> points;
  for (const auto& algo : resolve_algorithms(cfg)) {
    for (int n : sizes) {
      if (n < 2) throw UsageError("opcount sizes must be >= 2");
      points.push_back(fht::complexity_point(algo, n));
    }
  }
  emit(cfg.out_csv, [&](std::ostream& out) { fht::write_opcount_csv(out, points); });
  return 0;
}

int cmd_size_curve(const RunConfig& cfg) {
  const auto sizes = parse_sizes(cfg.sizes);
  if (sizes.front() < 2) throw UsageError("size-curve sizes must be >= 2");
  if (cfg.lambda.empty()) throw UsageError("--lambda is required");
  const auto points = fht::size_curve(parse_lambdas(cfg.lambda), sizes);
  emit(cfg.out_csv, [&](std::ostream& out) { fht::write_size_csv(out, points); });
  return 0;
}

int cmd_sp_size(const RunConfig& cfg) {
  if (cfg.width < 2) throw UsageError("--width must be >= 2");
  const auto lambdas = parse_lambdas(cfg.lambda.empty() ? "1" : cfg.lambda);
  if (lambdas.size() != 1) throw UsageError("sp-size takes a single --lambda");
  const auto r = fht::superpixel_size(cfg.width, lambdas.front());
  std::cout << r.chosen_size << "\n";
  std::cout << "real_root: " << fht::format_decimal(r.real_root) << "\n";
  std::cout << "condition: " << fht::format_decimal(r.condition_lhs) << " < " << fht::format_decimal(r.condition_rhs)
            << "\n";
  return 0;
}

int cmd_plot(const RunConfig& cfg) {
  if (cfg.in_csv.empty() || cfg.out_svg.empty()) throw UsageError("--in-csv and --out-svg are required");
  std::ifstream in(cfg.in_csv);
  if (!in) throw std::runtime_error("cannot open " + cfg.in_csv);
  std::stringstream text;
  text << in.rdbuf();
  const fht::CsvTable table = fht::parse_csv(text.str());
  const std::string x = cfg.x.empty() ? table.header.front() : cfg.x;
  std::vector<std::string> ys = split_list(cfg.y);
  if (ys.empty()) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (table.header[c] == x) continue;
      const bool numeric = std::any_of(table.rows.begin(), table.rows.end(),
                                       [&](const auto& row) { return fht::parse_number(row[c]).has_value(); });
      if (numeric) ys.push_back(table.header[c]);
    }
  }
  const std::string svg = fht::render_svg_chart(table, x, ys, cfg.in_csv);
  emit(cfg.out_svg, [&](std::ostream& out) { out << svg; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast Hough transforms: dyadic, superpixel and rounded-line reference"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_algo = [&](CLI::App* cmd) {
    cmd->add_option("--algo", cfg.algo, "gdt | sp | ref")->check(CLI::IsMember({"gdt", "sp", "ref"}));
    cmd->add_option("--lambda", cfg.lambda, "accuracy parameter in (0, 1]; comma list where sweeps allow");
    cmd->add_option("--sp-width", cfg.sp_width, "explicit superpixel width");
    cmd->add_option("--sp-height", cfg.sp_height, "explicit superpixel height (default: width)");
    cmd->add_option("--sp-col", cfg.sp_col, "non-zero superpixel column (default: center)");
  };

  auto* transform = app.add_subcommand("transform", "Hough transform of a graymap");
  transform->add_option("--input", cfg.input, "input P2/P5 graymap")->required();
  add_algo(transform);
  transform->add_option("--out-csv", cfg.out_csv, "Hough image as t,s,value CSV");
  transform->add_option("--out-pgm", cfg.out_pgm, "normalized 16-bit Hough image for viewing");
  transform->add_option("--mem-cap", cfg.mem_cap, "maximum expanded image size in pixels");

  auto* phantom = app.add_subcommand("phantom", "Shepp-Logan phantom graymap");
  phantom->add_option("--size", cfg.size, "image side length")->required();
  phantom->add_option("--out-pgm", cfg.out_pgm, "output graymap")->required();

  auto* random = app.add_subcommand("random", "uniform random graymap with values in [0, 255]");
  random->add_option("--size", cfg.size, "image height (and width unless --width)")->required();
  random->add_option("--width", cfg.width, "image width");
  random->add_option("--seed", cfg.seed, "generator seed");
  random->add_option("--out-pgm", cfg.out_pgm, "output graymap")->required();

  auto* error_sweep = app.add_subcommand("error-sweep", "maximum orthotropic error per image size");
  add_algo(error_sweep);
  error_sweep->add_option("--sizes", cfg.sizes, "sizes: list 4,8,16 or range 2:512[:step]")->required();
  error_sweep->add_option("--out-csv", cfg.out_csv, "output CSV (default: stdout)");

  auto* opcount = app.add_subcommand("opcount", "analytic addition counts per image size");
  add_algo(opcount);
  opcount->add_option("--sizes", cfg.sizes, "sizes: list or range")->required();
  opcount->add_option("--out-csv", cfg.out_csv, "output CSV (default: stdout)");

  auto* size_curve = app.add_subcommand("size-curve", "superpixel size per image size and lambda");
  size_curve->add_option("--lambda", cfg.lambda, "comma list of lambdas")->required();
  size_curve->add_option("--sizes", cfg.sizes, "sizes: list or range")->required();
  size_curve->add_option("--out-csv", cfg.out_csv, "output CSV (default: stdout)");

  auto* sp_size = app.add_subcommand("sp-size", "smallest odd superpixel size for a width and lambda");
  sp_size->add_option("--width", cfg.width, "image width")->required();
  sp_size->add_option("--lambda", cfg.lambda, "accuracy parameter in (0, 1]");

  auto* plot = app.add_subcommand("plot", "SVG line chart from a CSV file");
  plot->add_option("--in-csv", cfg.in_csv, "input CSV with a header row")->required();
  plot->add_option("--out-svg", cfg.out_svg, "output SVG")->required();
  plot->add_option("--x", cfg.x, "x column (default: first column)");
  plot->add_option("--y", cfg.y, "comma list of y columns (default: all numeric columns)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*transform) return cmd_transform(cfg);
    if (*phantom) return cmd_phantom(cfg);
    if (*random) return cmd_random(cfg);
    if (*error_sweep) return cmd_error_sweep(cfg);
    if (*opcount) return cmd_opcount(cfg);
    if (*size_curve) return cmd_size_curve(cfg);
    if (*sp_size) return cmd_sp_size(cfg);
    if (*plot) return cmd_plot(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: invalid number (" << e.what() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
