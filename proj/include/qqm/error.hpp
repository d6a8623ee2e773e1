#pragma once

#include <stdexcept>
#include <string>

namespace qqm {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition or input-validation failure (bad potential, E <= 0, malformed
/// config, ...). The CLI maps these to exit code 2.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// A computation that started from valid input could not be completed to the
/// promised accuracy (ill-conditioned matching, structure violation in an
/// extracted exponential, ...). Always carries the offending residual in the
/// message.
struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& what) : Error(what) {}
};

}  // namespace qqm
