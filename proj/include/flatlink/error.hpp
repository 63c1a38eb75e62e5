#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatlink {

enum class ErrorCode {
  MalformedToken,
  DuplicateComponentName,
  CrossingAppearsOnce,
  CrossingAppearsThrice,
  SameSignTwice,
  ComponentOutOfRange,
  SamePosition,
  PositionOutOfRange,
  SameComponent,
  NonzeroFlatLinking,
  NonzeroTotalSign,
  InvalidPartition,
  PairNotInPartition,
  PartitionNotCovering,
  PartsOverlap,
  InstanceTooLarge,
  StaleSite,
  MalformedMoveLog,
  InfeasibleSpec,
};

std::string_view to_string(ErrorCode code);

// True for the errors that mean "the input is not a well-formed Gauss code".
bool is_validation_error(ErrorCode code);

// Every library failure is reported through this type. `subject` carries the
// offending token, crossing identifier, or component name when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace flatlink
