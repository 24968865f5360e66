#pragma once

#include <stdexcept>
#include <string>

namespace mstd {

enum class ErrorCode {
  kBadWindow,           // window size outside the allowed range
  kMiddleOutOfRange,    // middle block has members outside [11, n-12]
  kMajorityViolated,    // some prefix or suffix of the middle block lacks a strict majority
  kBadArgument,         // generic precondition failure
  kOutsideDomain,       // walk not in the domain of a partial map
  kLimitExceeded,       // exhaustive work requested above the configured limit
};

const char* to_string(ErrorCode code);

class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mstd
