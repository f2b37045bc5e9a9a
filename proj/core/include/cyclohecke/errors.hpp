#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Raised when caller-supplied parameters violate a precondition
// (non-prime characteristic, gcd(e, p) != 1, size cap exceeded, ...).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal consistency guarantee is broken: straightening
// ran out of fuel, a supposedly nilpotent element is not nilpotent, a power
// sequence never repeats. Seeing one of these means there is a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyclo
