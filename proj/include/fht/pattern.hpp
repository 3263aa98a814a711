#pragma once

#include <cstdint>
#include <vector>

#include "fht/rational.hpp"

namespace fht {

/// A discrete line: one unwrapped row index per image column.
///
/// Row indices may leave [0, wrap_height); `wrapped(x)` gives the row actually
/// read from an image of that height under cyclic extension.
struct Pattern {
  int width = 0;
  std::int64_t start_row = 0;
  int wrap_height = 1;
  std::vector<std::int64_t> rows;

  int wrapped(int x) const noexcept { return static_cast<int>(floor_mod(rows[x], wrap_height)); }

  /// True when consecutive rows never differ by more than one.
  bool is_continuous() const noexcept {
    for (std::size_t x = 1; x < rows.size(); ++x) {
      const auto step = rows[x] - rows[x - 1];
      if (step > 1 || step < -1) return false;
    }
    return true;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

}  // namespace fht
