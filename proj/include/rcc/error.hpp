#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcc {

enum class ErrorCode {
  MalformedToken,
  EdgeLabelNotTwice,
  MultipleComponents,
  NotAKnot,
  UnknownCrossing,
  UnknownRegion,
  Inconsistent,
  Singular,
  KernelTooLarge,
  DimensionMismatch,
  ReducibleDiagram,
  NotBlackWhitePair,
  TooManyCrossings,
  ProofContractViolated,
  ContractViolation,
  CatalogFormat,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the CLI
// prints error_name() so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rcc
