#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmweyl {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is a 0-based byte offset, or npos when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a domain condition (GCM axioms, preconditions).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exact integer operation left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Enumeration exceeded the configured state budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A computed value broke a mathematical invariant; indicates a bug or bad caller input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kmweyl
