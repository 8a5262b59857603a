#pragma once

#include <stdexcept>
#include <string>

#include "desc/report.hpp"

namespace desc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two transitions leave the same state under the same event.
class DeterminismError : public Error {
 public:
  using Error::Error;
};

/// A state or event name does not resolve.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

/// An event is declared controllable in one alphabet and uncontrollable in another.
class ControllabilityConflict : public Error {
 public:
  using Error::Error;
};

/// Operands are required to share an event set but do not.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis or operation precondition failed; carries the failing check.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, PropertyReport report)
      : Error(what + ": " + report.describe()), report_(std::move(report)) {}

  const PropertyReport& report() const noexcept { return report_; }

 private:
  PropertyReport report_;
};

}  // namespace desc
