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

#ifndef ROEKIT_ERROR_HPP
#define ROEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace roekit {

/// Error categories raised by the library. Values are stable: the C API
/// returns them (shifted into the status range) as-is.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDisconnectedComponent,
  kEmptyComponent,
  kSpaceMismatch,
  kNotGenerating,
  kNonSymmetricGenerators,
  kInvalidFiltration,
  kBudgetExceeded,
  kNotPrime,
  kSupportNotCovered,
  kDimensionMismatch,
  kEmptySystem,
  kNoConvergence,
  kNoGap,
  kOutOfRange,
  kInvalidExponent,
  kParse,
  kIo,
  kInternal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace roekit

#endif  // ROEKIT_ERROR_HPP
