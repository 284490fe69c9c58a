#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hly {

enum class ErrorCode {
  division_by_zero,
  pole,
  parse,
  domain,
  dimension_mismatch,
  evenness_violation,
  missing_operation,
  not_endomorphism,
  maps_do_not_commute,
  bad_arity,
  not_hom_lie,
  non_identity_twist,
  unknown_entry,
  constraint_violation,
  no_construction_path,
  validation,
  conflict,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::pole: return "PoleError";
    case ErrorCode::parse: return "ParseError";
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::evenness_violation: return "EvennessViolation";
    case ErrorCode::missing_operation: return "MissingOperation";
    case ErrorCode::not_endomorphism: return "NotEndomorphism";
    case ErrorCode::maps_do_not_commute: return "MapsDoNotCommute";
    case ErrorCode::bad_arity: return "BadArity";
    case ErrorCode::not_hom_lie: return "NotHomLie";
    case ErrorCode::non_identity_twist: return "NonIdentityTwist";
    case ErrorCode::unknown_entry: return "UnknownEntry";
    case ErrorCode::constraint_violation: return "ConstraintViolation";
    case ErrorCode::no_construction_path: return "NoConstructionPath";
    case ErrorCode::validation: return "ValidationError";
    case ErrorCode::conflict: return "ConflictError";
  }
  return "Error";
}

/// True for errors raised because a construction's mathematical hypotheses
/// do not hold (as opposed to malformed input).
constexpr bool is_precondition_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_endomorphism:
    case ErrorCode::maps_do_not_commute:
    case ErrorCode::not_hom_lie:
    case ErrorCode::non_identity_twist:
    case ErrorCode::no_construction_path:
      return true;
    default:
      return false;
  }
}

struct Report;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure at a byte offset of the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::parse, message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A refused construction, carrying the checker report that justified it.
class PreconditionError : public Error {
 public:
  PreconditionError(ErrorCode code, const std::string& message, std::shared_ptr<const Report> report)
      : Error(code, message), report_(std::move(report)) {}

  const Report* report() const noexcept { return report_.get(); }

 private:
  std::shared_ptr<const Report> report_;
};

}  // namespace hly
