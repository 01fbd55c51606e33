// Copyright 2026 The simplegames Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMPLEGAMES_ERROR_HPP
#define SIMPLEGAMES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplegames {

enum class ErrorCode {
  kAntichainViolation,
  kFullCoalitionLosing,
  kEmptyFamily,
  kPlayerOutOfRange,
  kNonMonotoneOracle,
  kMOutOfRange,
  kNotACover,
  kMixedCluster,
  kBadPairDistance,
  kDimensionMismatch,
  kUnbalancedTrade,
  kCapExceeded,
  kInvalidArgument,
  kParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAntichainViolation: return "AntichainViolation";
    case ErrorCode::kFullCoalitionLosing: return "FullCoalitionLosing";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kPlayerOutOfRange: return "PlayerOutOfRange";
    case ErrorCode::kNonMonotoneOracle: return "NonMonotoneOracle";
    case ErrorCode::kMOutOfRange: return "MOutOfRange";
    case ErrorCode::kNotACover: return "NotACover";
    case ErrorCode::kMixedCluster: return "MixedCluster";
    case ErrorCode::kBadPairDistance: return "BadPairDistance";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnbalancedTrade: return "UnbalancedTrade";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplegames

#endif  // SIMPLEGAMES_ERROR_HPP
