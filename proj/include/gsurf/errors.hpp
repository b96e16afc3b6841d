#pragma once

#include <stdexcept>
#include <string>

namespace gsurf {

/// Malformed input: bad document, bad datum, a word that cannot be an
/// embedded circle. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (group order, oracle, topology model) was exceeded.
/// Maps to CLI exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not. Always a bug, never bad input.
/// Maps to CLI exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace gsurf
