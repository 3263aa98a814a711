#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <type_traits>
#include <vector>

#include "fht/errors.hpp"
#include "fht/image.hpp"

namespace fht {

namespace detail {

class GraymapReader {
 public:
  explicit GraymapReader(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

  std::size_t offset() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const unsigned char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > 0xFFFFFFFFull) throw ParseError(std::string(what) + " is too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(std::string("expected ") + what, start);
    }
    return value;
  }

  unsigned char byte() {
    if (pos_ >= bytes_.size()) throw ParseError("truncated payload", pos_);
    return bytes_[pos_++];
  }

  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

  const std::vector<unsigned char>& bytes() const noexcept { return bytes_; }
  void advance(std::size_t n) noexcept { pos_ += n; }

 private:
  std::vector<unsigned char> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a P2 (ASCII) or P5 (binary) portable graymap held in memory.
///
/// The first scanline in the file is the top image row, so it lands at
/// y = height - 1.
inline GrayImage parse_graymap(std::vector<unsigned char> bytes) {
  detail::GraymapReader in(std::move(bytes));
  if (in.remaining() < 2 || in.bytes()[0] != 'P' || (in.bytes()[1] != '2' && in.bytes()[1] != '5')) {
    throw ParseError("unsupported magic number, expected P2 or P5", 0);
  }
  const bool binary = in.bytes()[1] == '5';
  in.advance(2);

  const std::size_t width_at = in.offset();
  const auto width = in.read_uint("width");
  const auto height = in.read_uint("height");
  const std::size_t maxval_at = in.offset();
  const auto maxval = in.read_uint("maxval");
  if (width == 0 || height == 0) throw ParseError("image dimensions must be positive", width_at);
  if (maxval == 0 || maxval > 65535) throw ParseError("maxval must be in [1, 65535]", maxval_at);
  if (width > 0x7FFFFFFF || height > 0x7FFFFFFF) throw ParseError("image dimensions too large", width_at);

  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  const int w = img.width();
  const int h = img.height();

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (in.at_end() || !std::isspace(in.bytes()[in.offset()])) {
      throw ParseError("expected whitespace after maxval", in.offset());
    }
    in.advance(1);
    const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
    const std::size_t needed = img.size() * sample_bytes;
    if (in.remaining() < needed) {
      throw ParseError("truncated payload: need " + std::to_string(needed) + " bytes, have " +
                           std::to_string(in.remaining()),
                       in.bytes().size());
    }
    for (int row = 0; row < h; ++row) {
      for (int x = 0; x < w; ++x) {
        const std::size_t at = in.offset();
        std::uint32_t v = in.byte();
        if (sample_bytes == 2) v = (v << 8) | in.byte();
        if (v > maxval) throw ParseError("sample exceeds maxval", at);
        img(x, h - 1 - row) = static_cast<Pixel>(v);
      }
    }
  } else {
    for (int row = 0; row < h; ++row) {
      for (int x = 0; x < w; ++x) {
        in.skip_space_and_comments();
        const std::size_t at = in.offset();
        if (in.at_end()) throw ParseError("truncated payload", at);
        const auto v = in.read_uint("sample");
        if (v > maxval) throw ParseError("sample exceeds maxval", at);
        img(x, h - 1 - row) = static_cast<Pixel>(v);
      }
    }
  }
  return img;
}

inline GrayImage load_graymap(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  return parse_graymap(std::move(bytes));
}

/// Encodes as binary P5 with maxval = max(1, largest pixel value).
inline std::vector<unsigned char> encode_graymap(const GrayImage& img) {
  const unsigned maxval = std::max<unsigned>(1, img.max_value());
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n" + std::to_string(maxval) + "\n";
  std::vector<unsigned char> out(header.begin(), header.end());
  const bool wide = maxval > 255;
  out.reserve(out.size() + img.size() * (wide ? 2 : 1));
  for (int row = 0; row < img.height(); ++row) {
    const int y = img.height() - 1 - row;
    for (int x = 0; x < img.width(); ++x) {
      const Pixel v = img(x, y);
      if (wide) out.push_back(static_cast<unsigned char>(v >> 8));
      out.push_back(static_cast<unsigned char>(v & 0xFF));
    }
  }
  return out;
}

inline void save_graymap(const GrayImage& img, const std::string& path) {
  const auto bytes = encode_graymap(img);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!file) throw std::runtime_error("write failed for " + path);
}

/// Narrows arbitrary integer samples to pixel range, refusing values above 65535.
template <typename T>
GrayImage to_gray_image(const Grid<T>& grid) {
  GrayImage img(grid.width(), grid.height());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto v = grid.values()[i];
    bool negative = false;
    if constexpr (std::is_signed_v<T>) negative = v < 0;
    if (negative || static_cast<std::uint64_t>(v) > 65535u) {
      throw RangeError("pixel value " + std::to_string(v) + " outside graymap range [0, 65535]");
    }
    img.values()[i] = static_cast<Pixel>(v);
  }
  return img;
}

/// Saves any integer grid, refusing values outside [0, 65535].
template <typename T>
void save_graymap(const Grid<T>& grid, const std::string& path) {
  save_graymap(to_gray_image(grid), path);
}

}  // namespace fht
