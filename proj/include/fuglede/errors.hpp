#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuglede {

// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad group parameters, out-of-range residues, mismatched groups.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The input set does not have the property the operation requires
// (not a tile, not spectral, pair check failed, contradiction branch hit).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A construction needs the partner set and the group is too large to search for it.
class MissingPartnerError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fuglede
