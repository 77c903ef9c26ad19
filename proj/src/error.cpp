#include "rcc/error.hpp"

namespace rcc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::EdgeLabelNotTwice: return "EdgeLabelNotTwice";
    case ErrorCode::MultipleComponents: return "MultipleComponents";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::UnknownRegion: return "UnknownRegion";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::KernelTooLarge: return "KernelTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ReducibleDiagram: return "ReducibleDiagram";
    case ErrorCode::NotBlackWhitePair: return "NotBlackWhitePair";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::ProofContractViolated: return "ProofContractViolated";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::CatalogFormat: return "CatalogFormat";
  }
  return "Unknown";
}

}  // namespace rcc
