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

#include "ellipsum/rational.hpp"

#include <cctype>
#include <string>

#include "ellipsum/error.hpp"

namespace ellipsum {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::PoleAtArgument: return "PoleAtArgument";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InsufficientMoments: return "InsufficientMoments";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::ZeroPointWithNegativeExponent: return "ZeroPointWithNegativeExponent";
    case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
    case ErrorCode::AntipodalPoints: return "AntipodalPoints";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::LabelNotStrict: return "LabelNotStrict";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::SingularHankel: return "SingularHankel";
    case ErrorCode::RouteUnavailable: return "RouteUnavailable";
    case ErrorCode::InvalidPoints: return "InvalidPoints";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::UnsupportedRange: return "UnsupportedRange";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  const auto bad = [&] { return Error(ErrorCode::InvalidParams, "not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    if (s.find('/') != std::string::npos) throw bad();
    BigInt num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) throw bad();
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::ZeroArgument, "zero to a negative power");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rat rat_factorial(unsigned n) { return Rat(factorial(n)); }

}  // namespace ellipsum
