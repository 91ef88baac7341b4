#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finstone {

enum class ErrorKind {
  // input validation
  InvalidInput,
  DuplicateElement,
  UnknownElement,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  TooLarge,
  NotLattice,
  NotDistributive,
  BottomViolation,
  TopViolation,
  NoMeet,
  BaseChangeViolation,
  LocalityViolation,
  NotSurjective,
  NotAHom,
  NotAValuation,
  // internal consistency failures
  TorsionFound,
  NotUnimodular,
  SplitFailure,
  NotIso,
  IllDefinedProduct,
  RouteMismatch,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BottomViolation: return "BottomViolation";
    case ErrorKind::TopViolation: return "TopViolation";
    case ErrorKind::NoMeet: return "NoMeet";
    case ErrorKind::BaseChangeViolation: return "BaseChangeViolation";
    case ErrorKind::LocalityViolation: return "LocalityViolation";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotAValuation: return "NotAValuation";
    case ErrorKind::TorsionFound: return "TorsionFound";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::NotIso: return "NotIso";
    case ErrorKind::IllDefinedProduct: return "IllDefinedProduct";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
  }
  return "Unknown";
}

/// True for kinds that can only be raised by a failed internal cross-check,
/// never by malformed user input.
constexpr bool is_verification_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::TorsionFound:
    case ErrorKind::NotUnimodular:
    case ErrorKind::SplitFailure:
    case ErrorKind::NotIso:
    case ErrorKind::IllDefinedProduct:
    case ErrorKind::RouteMismatch:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace finstone
