#include "flatlink/error.hpp"

namespace flatlink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::DuplicateComponentName: return "DuplicateComponentName";
    case ErrorCode::CrossingAppearsOnce: return "CrossingAppearsOnce";
    case ErrorCode::CrossingAppearsThrice: return "CrossingAppearsThrice";
    case ErrorCode::SameSignTwice: return "SameSignTwice";
    case ErrorCode::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorCode::SamePosition: return "SamePosition";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::SameComponent: return "SameComponent";
    case ErrorCode::NonzeroFlatLinking: return "NonzeroFlatLinking";
    case ErrorCode::NonzeroTotalSign: return "NonzeroTotalSign";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::PairNotInPartition: return "PairNotInPartition";
    case ErrorCode::PartitionNotCovering: return "PartitionNotCovering";
    case ErrorCode::PartsOverlap: return "PartsOverlap";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::StaleSite: return "StaleSite";
    case ErrorCode::MalformedMoveLog: return "MalformedMoveLog";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateComponentName:
    case ErrorCode::CrossingAppearsOnce:
    case ErrorCode::CrossingAppearsThrice:
    case ErrorCode::SameSignTwice:
      return true;
    default:
      return false;
  }
}

namespace {

std::string compose(ErrorCode code, const std::string& subject, const std::string& detail) {
  std::string msg(to_string(code));
  if (!subject.empty()) msg += " '" + subject + "'";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string subject, const std::string& detail)
    : std::runtime_error(compose(code, subject, detail)), code_(code), subject_(std::move(subject)) {}

}  // namespace flatlink
