#ifndef GROUPOIDAL_ERRORS_HPP_
#define GROUPOIDAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace groupoidal {

// Structural axiom failures (non-associative table, missing inverses, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration or dimension cap was hit.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace groupoidal

#endif  // GROUPOIDAL_ERRORS_HPP_
