#include "mstd/error.hpp"

namespace mstd {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadWindow: return "bad_window";
    case ErrorCode::kMiddleOutOfRange: return "middle_out_of_range";
    case ErrorCode::kMajorityViolated: return "majority_violated";
    case ErrorCode::kBadArgument: return "bad_argument";
    case ErrorCode::kOutsideDomain: return "outside_domain";
    case ErrorCode::kLimitExceeded: return "limit_exceeded";
  }
  return "unknown";
}

}  // namespace mstd
