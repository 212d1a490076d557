/*
 * Copyright 2026 The roekit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "roekit/error.hpp"

namespace roekit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDisconnectedComponent: return "DisconnectedComponent";
    case ErrorCode::kEmptyComponent: return "EmptyComponent";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kNonSymmetricGenerators: return "NonSymmetricGenerators";
    case ErrorCode::kInvalidFiltration: return "InvalidFiltration";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kSupportNotCovered: return "SupportNotCovered";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySystem: return "EmptySystem";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNoGap: return "NoGap";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(error_code_name(code)) + ": " + message);
}

}  // namespace roekit
