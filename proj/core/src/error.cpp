#include "arrows/error.hpp"

namespace arrows {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UndefinedAddition: return "UndefinedAddition";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::DegenerateBetween: return "DegenerateBetween";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::NotOnLine: return "NotOnLine";
    case ErrorCode::DegenerateArrow: return "DegenerateArrow";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WeightSumNotOne: return "WeightSumNotOne";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

}  // namespace arrows
