#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpb {

enum class ErrorCode {
  DimensionMismatch,
  NotPositive,
  DimensionTooLarge,
  ZeroOperator,
  PreconditionViolated,
  EpsOutOfRange,
  VectorOutOfBall,
  NotNearNorming,
  NotUnitNorm,
  NotUnitVector,
  TailNotDeclared,
  InfeasiblePerturbation,
  ParseError,
  InvariantViolated,
  InvalidArgument,
  InputsEqual,
  NotUnitVectors,
  // An assertion of the construction itself failed. Never a data condition.
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace bpb
