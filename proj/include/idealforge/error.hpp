#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idealforge {

enum class ErrorKind {
  RankDeficient,
  DimensionMismatch,
  BadModulus,
  NotMonic,
  NotPrime,
  DivisionByZeroPoly,
  ModulusMismatch,
  DegreeTooSmall,
  FieldMismatch,
  ZeroElement,
  NotARoot,
  DegreeNotOne,
  SPowerTooSmall,
  NotOddPrime,
  SamePrime,
  DegenerateSum,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Precondition or input failure. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The text without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// An internal identity failed to hold (e.g. ResultNotRational). Exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace idealforge
