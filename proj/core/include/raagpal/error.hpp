#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace raagpal {

enum class ErrorCode {
  UnknownVertex,
  InvalidGraph,
  SizeLimit,
  GraphMismatch,
  ParseError,
  EmptyWord,
  NotReverseInvariant,
  RootSearchBudget,
  IllegalGenerator,
  NotHomomorphism,
  NoProvenance,
  NotPalindromic,
  NotGraphAutomorphism,
  NotInCentralizer,
  NotInTheta,
  DescentStall,
  AssumptionFailed,
  TorelliBudget,
  FixedSetViolated,
  PreconditionFailed,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace raagpal
