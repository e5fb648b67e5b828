#ifndef KINBOUND_ERRORS_HPP
#define KINBOUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinbound {

// Base of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation left the mathematical domain of a function (log of a
// non-positive number, division by zero, overflow to non-finite, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed expression source; `position` is a byte offset into it.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// A model failed construction-time validation (inconsistent derivative,
// non-monotonic kinetic/potential, bad parameter, ...).
struct ModelError : Error {
  using Error::Error;
};

// Bad run configuration (CLI flags, config file, unsupported combination).
struct ConfigError : Error {
  using Error::Error;
};

// A bracketing scan found no sign change.
struct NoRootError : Error {
  using Error::Error;
};

// A bracketing scan found several roots and no selection rule was given.
struct AmbiguousRootError : Error {
  std::vector<double> roots;
  AmbiguousRootError(const std::string& msg, std::vector<double> rs)
      : Error(msg), roots(std::move(rs)) {}
};

// An auxiliary map is constant, so its inverse does not exist; `pinned`
// is the constant value the corresponding parameter must take.
struct DegenerateMapError : Error {
  double pinned;
  DegenerateMapError(const std::string& msg, double value)
      : Error(msg), pinned(value) {}
};

// A numerical scheme (grid, basis, quadrature) failed to converge.
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace kinbound

#endif
