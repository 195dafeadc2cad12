#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrows {

// Every way a kernel operation can refuse an input. The taxonomy is part of the
// public contract: callers branch on these codes, and the CLI maps them onto its
// exit-code classes. Codes that sound like "can't happen" (InternalCheckFailed)
// exist so cross-checked operations can fail loudly instead of silently.
enum class ErrorCode {
  DimensionMismatch,    // operands live in different coordinate dimensions
  UndefinedAddition,    // arrow addition attempted without head meeting tail
  DegenerateLine,       // line through two equal points
  DegenerateBetween,    // betweenness query with coincident points
  NotCollinear,         // betweenness query off any common line
  NotOnLine,            // on-line construction fed an off-line point/arrow
  DegenerateArrow,      // operation requires a nondegenerate arrow
  PreconditionViolated, // checked identity invoked outside its precondition
  WeightSumNotOne,      // barycentric weights do not sum to exactly 1
  DuplicatePoints,      // barycentric point family has a repeated point
  ParseError,           // malformed rational literal or scene text
  DuplicateName,        // scene defines the same point name twice
  ZeroDenominator,      // rational constructed or divided with denominator 0
  InvalidArgument,      // structurally invalid input (empty point, bad config)
  InternalCheckFailed,  // a redundant internal cross-check disagreed (a bug)
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace arrows
