#pragma once

#include <stdexcept>
#include <string>

namespace mcmd {

enum class ErrorCode {
  kOutOfRange,
  kNotSelected,
  kNotIdempotent,
  kIdMismatch,
  kTooLarge,
  kNotCollinear,
  kMalformed,
  kDuplicateId,
  kGappedId,
  kNonPositiveRadius,
  kBadRational,
  kInvalidRepresentation,
  kInvalidPose,
  kUnsatisfied,
  kVerificationFailed,
  kNotMultiple,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcmd
