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

#ifndef ELLIPSUM_RATIONAL_HPP
#define ELLIPSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ellipsum {

/// Exact rational. Arithmetic keeps values canonical (lowest terms, positive
/// denominator), but the two-argument mpq_class constructor does not: build
/// fractions with ratio().
using Rat = mpq_class;
using BigInt = mpz_class;

/// num/den in lowest terms; den must be nonzero.
inline Rat ratio(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

/// Parses "p", "-p/q" or a finite decimal such as "0.25".
Rat parse_rat(std::string_view text);

Rat pow(const Rat& base, long exponent);
BigInt factorial(unsigned n);
Rat rat_factorial(unsigned n);

/// (-1)^e as an int.
constexpr int sign_pow(long e) noexcept { return (e % 2 == 0) ? 1 : -1; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace ellipsum

#endif  // ELLIPSUM_RATIONAL_HPP
