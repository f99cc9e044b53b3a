#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chenlie {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad word syntax, schema violations, non-symmetric
// linking matrices, non-commutator relators, and the like.
struct InvalidInputError : Error {
  using Error::Error;
};

// Word grammar errors carry the offset of the offending token.
struct ParseError : InvalidInputError {
  ParseError(const std::string& msg, std::size_t pos)
      : InvalidInputError(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// A computation was asked to build an object past the configured caps.
// Always an explicit refusal, never a silent truncation.
struct SizeLimitError : Error {
  using Error::Error;
};

}  // namespace chenlie
