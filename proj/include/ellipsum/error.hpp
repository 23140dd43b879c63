/*
 * Copyright 2026 The Ellipsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ELLIPSUM_ERROR_HPP
#define ELLIPSUM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellipsum {

enum class ErrorCode {
  ZeroConstantTerm,
  ZeroArgument,
  PoleAtArgument,
  NotSkewSymmetric,
  DimensionTooLarge,
  InsufficientMoments,
  RepeatedPoint,
  ZeroPointWithNegativeExponent,
  NotStrictlyDecreasing,
  AntipodalPoints,
  TooManyVariables,
  LabelNotStrict,
  UnknownId,
  SingularHankel,
  RouteUnavailable,
  InvalidPoints,
  TruncationTooSmall,
  UnsupportedRange,
  RangeTooLarge,
  UnknownIdentity,
  InvalidParams,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ellipsum

#endif  // ELLIPSUM_ERROR_HPP
