#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ba {

enum class ErrorKind {
  ZeroVector,
  NotDivisible,
  NotHolomorphic,
  InvalidParams,
  TooLarge,
  UnsupportedFamily,
  NotMinuscule,
  ChainDegreeViolation,
  NonzeroTail,
  NormalizerMismatch,
  RecurrenceMismatch,
  NotInRing,
  Parse,
  Dimension,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ba
