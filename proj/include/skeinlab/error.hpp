#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

/// A caller violated an operation's precondition (bad slope, out-of-range
/// color, non-prime modulus, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations that must agree did not. The CLI maps this
/// to exit code 3.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace skeinlab
