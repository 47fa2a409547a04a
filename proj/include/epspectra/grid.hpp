#pragma once

// Parameter grids from "min:max:steps[:log]" text, or a single value.

#include <string_view>
#include <vector>

#include "epspectra/exact.hpp"

namespace epspectra {

struct GridSpec {
  Rational min;
  Rational max;
  /// Number of grid points, endpoints included.
  int steps = 1;
  bool log = false;
};

/// Accepts "min:max:steps", "min:max:steps:log" (or ":linear") and a bare
/// value, which is a one-point grid. Decimals are parsed exactly. Throws
/// UsageError for steps < 1, min >= max in a range, steps = 1 in a range, or
/// a log grid with min <= 0.
GridSpec parse_grid(std::string_view text);

/// Linear points are evaluated exactly and rounded once; log points are
/// min (max/min)^(i/(steps-1)) in double.
std::vector<double> expand(const GridSpec& spec);

}  // namespace epspectra
