#include "raagpal/error.hpp"

namespace raagpal {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotReverseInvariant: return "NotReverseInvariant";
    case ErrorCode::RootSearchBudget: return "RootSearchBudget";
    case ErrorCode::IllegalGenerator: return "IllegalGenerator";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NoProvenance: return "NoProvenance";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::NotGraphAutomorphism: return "NotGraphAutomorphism";
    case ErrorCode::NotInCentralizer: return "NotInCentralizer";
    case ErrorCode::NotInTheta: return "NotInTheta";
    case ErrorCode::DescentStall: return "DescentStall";
    case ErrorCode::AssumptionFailed: return "AssumptionFailed";
    case ErrorCode::TorelliBudget: return "TorelliBudget";
    case ErrorCode::FixedSetViolated: return "FixedSetViolated";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace raagpal
