#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace kdp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Letter index outside the declared rank, or operands from groups of
// different shape.
class RankError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  std::string const& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// A precondition on the mathematical input failed (element not in the kernel,
// map not surjective, missing substitution image, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A certificate or sub-verification did not check out.
class VerificationError : public Error {
 public:
  VerificationError(std::string component, std::string const& message)
      : Error(component + ": " + message), component_(std::move(component)) {}

  std::string const& component() const noexcept { return component_; }

 private:
  std::string component_;
};

}  // namespace kdp
