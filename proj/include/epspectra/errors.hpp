#pragma once

#include <stdexcept>

namespace epspectra {

/// Iteration budget exhausted, classification inconsistent, or a similar
/// failure of a numerical method. The CLI maps it to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input (bad range, N < 1, irrational value where an exact one
/// is needed). The CLI maps it to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace epspectra
