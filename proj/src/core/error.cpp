#include "propkit/error.hpp"

namespace propkit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidSmiles: return "InvalidSmiles";
    case Errc::ParseError: return "ParseError";
    case Errc::NotCovered: return "NotCovered";
    case Errc::UnknownModel: return "UnknownModel";
    case Errc::DecompositionRequired: return "DecompositionRequired";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::SingularTemperature: return "SingularTemperature";
    case Errc::SingularPressure: return "SingularPressure";
    case Errc::NonPhysical: return "NonPhysical";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::MissingGroupData: return "MissingGroupData";
    case Errc::ParameterGap: return "ParameterGap";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::BracketFailure: return "BracketFailure";
    case Errc::ConsistencyViolation: return "ConsistencyViolation";
    case Errc::PointFailures: return "PointFailures";
    case Errc::RangeRequired: return "RangeRequired";
    case Errc::RangeForbidden: return "RangeForbidden";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::AllStartsFailed: return "AllStartsFailed";
    case Errc::RemoteUnavailable: return "RemoteUnavailable";
    case Errc::ContractViolation: return "ContractViolation";
    case Errc::MalformedTable: return "MalformedTable";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput:
    case Errc::InvalidSmiles:
    case Errc::ParseError:
    case Errc::NotCovered:
    case Errc::UnknownModel:
    case Errc::DecompositionRequired:
    case Errc::DecompositionFailed:
    case Errc::SingularTemperature:
    case Errc::SingularPressure:
    case Errc::NonPhysical:
    case Errc::AlphaOutOfRange:
    case Errc::MissingGroupData:
    case Errc::ParameterGap:
    case Errc::RangeRequired:
    case Errc::RangeForbidden:
    case Errc::GridMismatch:
    case Errc::ConsistencyViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace propkit
