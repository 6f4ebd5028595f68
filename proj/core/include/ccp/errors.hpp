#pragma once

#include <stdexcept>
#include <string>

namespace ccp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file, unknown vertex/edge id, out-of-range color.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The graph does not have the shape an algorithm requires (tree, path, connected).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured enumeration or bitmask limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Requested algorithm cannot run on the detected structure.
class DispatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccp
