#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace propkit {

// Machine-readable failure codes. Every error that reaches a client carries
// one of these plus the name of the module that raised it.
enum class Errc {
  InvalidInput,
  InvalidSmiles,
  ParseError,
  NotCovered,
  UnknownModel,
  DecompositionRequired,
  DecompositionFailed,
  SingularTemperature,
  SingularPressure,
  NonPhysical,
  AlphaOutOfRange,
  MissingGroupData,
  ParameterGap,
  NoConvergence,
  BracketFailure,
  ConsistencyViolation,
  PointFailures,
  RangeRequired,
  RangeForbidden,
  GridMismatch,
  AllStartsFailed,
  RemoteUnavailable,
  ContractViolation,
  MalformedTable,
};

std::string_view to_string(Errc code) noexcept;

// True for codes caused by what the caller asked for (bad SMILES, missing
// coverage, incompatible options) as opposed to numerical breakdowns.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string module, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message),
        code_(code),
        module_(std::move(module)),
        offset_(offset) {}

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  // Byte offset into the offending input, for parse failures.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::string module_;
  std::optional<std::size_t> offset_;
};

}  // namespace propkit
