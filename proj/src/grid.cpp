#include "epspectra/grid.hpp"

#include <cmath>
#include <string>

#include "epspectra/errors.hpp"

namespace epspectra {

namespace {

Rational parse_value(std::string_view text, std::string_view what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "' in grid");
  }
}

}  // namespace

GridSpec parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }

  GridSpec spec;
  if (parts.size() == 1) {
    spec.min = spec.max = parse_value(parts[0], "value");
    return spec;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw UsageError("grid '" + std::string(text) + "' must be a value or min:max:steps[:log]");
  }
  spec.min = parse_value(parts[0], "min");
  spec.max = parse_value(parts[1], "max");
  const std::string steps(parts[2]);
  std::size_t used = 0;
  try {
    spec.steps = std::stoi(steps, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != steps.size()) throw UsageError("invalid step count '" + steps + "' in grid");
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      spec.log = true;
    } else if (parts[3] != "linear") {
      throw UsageError("grid scale must be 'log' or 'linear', got '" + std::string(parts[3]) + "'");
    }
  }
  if (spec.steps < 2) throw UsageError("a grid range needs at least 2 points; give a bare value for one point");
  if (!(spec.min < spec.max)) throw UsageError("grid range needs min < max");
  if (spec.log && sgn(spec.min) <= 0) throw UsageError("log grid needs min > 0");
  return spec;
}

std::vector<double> expand(const GridSpec& spec) {
  if (spec.steps < 1) throw UsageError("grid needs at least one point");
  if (spec.steps == 1) return {to_double(spec.min)};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.steps));
  const int last = spec.steps - 1;
  if (spec.log) {
    const double lo = std::log(to_double(spec.min));
    const double hi = std::log(to_double(spec.max));
    for (int i = 0; i <= last; ++i) {
      if (i == 0) {
        out.push_back(to_double(spec.min));
      } else if (i == last) {
        out.push_back(to_double(spec.max));
      } else {
        out.push_back(std::exp(lo + (hi - lo) * i / last));
      }
    }
  } else {
    const Rational width = spec.max - spec.min;
    for (int i = 0; i <= last; ++i) {
      Rational t(i, last);
      t.canonicalize();
      out.push_back(to_double(spec.min + width * t));
    }
  }
  return out;
}

}  // namespace epspectra
