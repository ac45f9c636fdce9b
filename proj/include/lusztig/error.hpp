#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lusztig {

// Every input-validation failure raised by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCartanError : Error {
  using Error::Error;
};

struct NonFiniteTypeError : Error {
  using Error::Error;
};

struct RankMismatchError : Error {
  using Error::Error;
};

struct LetterRangeError : Error {
  using Error::Error;
};

struct IndexRangeError : Error {
  using Error::Error;
};

struct NotReducedError : Error {
  using Error::Error;
};

struct LengthMismatchError : Error {
  using Error::Error;
};

struct NotDominantError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

}  // namespace lusztig
