#pragma once

#include <stdexcept>
#include <string>

namespace polysym {

/// A request that is well formed but mathematically impossible, such as an
/// expression of the wrong weight or a basis change with no known route.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (type literals, expressions, block sequences).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace polysym
