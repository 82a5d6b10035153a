#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smib {

enum class ErrorCode {
  EmptyPartition,
  NonFiniteCoordinate,
  IndexOutOfRange,
  DimensionMismatch,
  InvalidKernel,
  InvalidSmiConfig,
  EmptySubset,
  DuplicateMember,
  AlreadyMember,
  EmptyTargetSet,
  LengthMismatch,
  TooFewSamples,
  InvalidConfig,
  InsufficientPartition,
  BudgetTooLarge,
  InstanceTooLarge,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; the code is stable and is
// what the CLI prints on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace smib
