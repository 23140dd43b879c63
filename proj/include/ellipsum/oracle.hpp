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

#ifndef ELLIPSUM_ORACLE_HPP
#define ELLIPSUM_ORACLE_HPP

#include <string_view>
#include <vector>

#include "ellipsum/qseries.hpp"
#include "ellipsum/rational.hpp"

namespace ellipsum::oracle {

enum class RepKind { squares, triangles };

RepKind parse_rep_kind(std::string_view name);

/// box(q) = 1 + 2 sum q^{n^2} or tri(q) = sum_{n>=0} q^{n(n+1)/2}, to q-order N.
core::QSeries base_series(RepKind kind, int q_order);

/// Representation numbers for n = 0..N: coefficients of base_series^k.
std::vector<BigInt> rep_counts(RepKind kind, unsigned k, int q_order);

/// Representation number by direct enumeration of the k-tuples (signed and
/// ordered for squares). Limited to k <= 8 and n <= 200.
BigInt count_enum(RepKind kind, unsigned k, long n);

enum class ClassicalId { s2, s4, s8, t2, t4, t8 };

ClassicalId parse_classical_id(std::string_view tag);
RepKind classical_kind(ClassicalId id);
unsigned classical_summands(ClassicalId id);

/// Gauss/Jacobi divisor sums for 2, 4, 8 squares and Legendre's for
/// 2, 4, 8 triangles; n >= 1.
BigInt divisor_count(ClassicalId id, long n);
/// The four-squares variant 8 sum_{d|n} (-1)^{(d-1)(n/d-1)} d.
BigInt s4_twisted(long n);

}  // namespace ellipsum::oracle

#endif  // ELLIPSUM_ORACLE_HPP
