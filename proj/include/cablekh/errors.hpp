#pragma once

#include <stdexcept>
#include <string>

namespace cablekh {

/// Malformed or inconsistent input (PD text, knot tables, bad arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (crossings, generators, objects) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cablekh
