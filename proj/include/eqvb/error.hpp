#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqvb {

enum class ErrorKind {
  AmbientMismatch,
  DimensionMismatch,
  NotDecreasing,
  NotExhaustive,
  RankDeficient,
  LengthMismatch,
  InvalidArgument,
  UnknownName,
  ShapeMismatch,
  NegativeMultiplicity,
  NotDominant,
  Unsupported,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every module of the library. `kind()` identifies the
/// failure class named in the module contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqvb
