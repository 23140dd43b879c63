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

#include "ellipsum/oracle.hpp"

#include <map>
#include <string>
#include <utility>

#include "ellipsum/error.hpp"

namespace ellipsum::oracle {

RepKind parse_rep_kind(std::string_view name) {
  if (name == "squares") return RepKind::squares;
  if (name == "triangles") return RepKind::triangles;
  throw Error(ErrorCode::InvalidParams, "kind must be 'squares' or 'triangles'");
}

core::QSeries base_series(RepKind kind, int q_order) {
  if (q_order < 0) throw Error(ErrorCode::InvalidParams, "negative q-order");
  std::vector<Rat> c(static_cast<std::size_t>(q_order) + 1);
  if (kind == RepKind::squares) {
    c[0] = 1;
    for (long n = 1; n * n <= q_order; ++n) c[static_cast<std::size_t>(n * n)] = 2;
  } else {
    for (long n = 0; n * (n + 1) / 2 <= q_order; ++n) c[static_cast<std::size_t>(n * (n + 1) / 2)] = 1;
  }
  return core::QSeries::from_q(c);
}

std::vector<BigInt> rep_counts(RepKind kind, unsigned k, int q_order) {
  const core::QSeries p = core::series_pow(base_series(kind, q_order), k);
  std::vector<BigInt> out(static_cast<std::size_t>(q_order) + 1);
  for (int n = 0; n <= q_order; ++n) out[static_cast<std::size_t>(n)] = p.q_coeff(n).get_num();
  return out;
}

namespace {

BigInt enumerate(RepKind kind, unsigned slots, long rem, std::map<std::pair<unsigned, long>, BigInt>& memo) {
  if (slots == 0) return rem == 0 ? BigInt(1) : BigInt(0);
  const auto key = std::make_pair(slots, rem);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  for (long x = 0;; ++x) {
    const long v = kind == RepKind::squares ? x * x : x * (x + 1) / 2;
    if (v > rem) break;
    const BigInt sub = enumerate(kind, slots - 1, rem - v, memo);
    total += (kind == RepKind::squares && x > 0) ? BigInt(2 * sub) : sub;
  }
  memo.emplace(key, total);
  return total;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt cube(long d) { return BigInt(d) * d * d; }

}  // namespace

BigInt count_enum(RepKind kind, unsigned k, long n) {
  if (k > 8 || n > 200) throw Error(ErrorCode::RangeTooLarge, "enumeration limited to k <= 8, n <= 200");
  if (n < 0) return 0;
  std::map<std::pair<unsigned, long>, BigInt> memo;
  return enumerate(kind, k, n, memo);
}

ClassicalId parse_classical_id(std::string_view tag) {
  if (tag == "s2") return ClassicalId::s2;
  if (tag == "s4") return ClassicalId::s4;
  if (tag == "s8") return ClassicalId::s8;
  if (tag == "t2") return ClassicalId::t2;
  if (tag == "t4") return ClassicalId::t4;
  if (tag == "t8") return ClassicalId::t8;
  throw Error(ErrorCode::UnknownIdentity, "not a classical formula: " + std::string(tag));
}

RepKind classical_kind(ClassicalId id) {
  return (id == ClassicalId::s2 || id == ClassicalId::s4 || id == ClassicalId::s8) ? RepKind::squares
                                                                                   : RepKind::triangles;
}

unsigned classical_summands(ClassicalId id) {
  switch (id) {
    case ClassicalId::s2:
    case ClassicalId::t2: return 2;
    case ClassicalId::s4:
    case ClassicalId::t4: return 4;
    case ClassicalId::s8:
    case ClassicalId::t8: return 8;
  }
  return 0;
}

BigInt divisor_count(ClassicalId id, long n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "divisor formulas need n >= 1");
  BigInt total = 0;
  switch (id) {
    case ClassicalId::s2:
      for (long d : divisors(n)) {
        if (d % 2 == 1) total += sign_pow((d - 1) / 2);
      }
      return 4 * total;
    case ClassicalId::s4:
      for (long d : divisors(n)) {
        if (d % 4 != 0) total += d;
      }
      return 8 * total;
    case ClassicalId::s8:
      for (long d : divisors(n)) total += sign_pow(n + d) * cube(d);
      return 16 * total;
    case ClassicalId::t2:
      for (long d : divisors(4 * n + 1)) total += sign_pow((d - 1) / 2);
      return total;
    case ClassicalId::t4:
      for (long d : divisors(2 * n + 1)) total += d;
      return total;
    case ClassicalId::t8:
      for (long d : divisors(n + 1)) {
        if (((n + 1) / d) % 2 == 1) total += cube(d);
      }
      return total;
  }
  return total;
}

BigInt s4_twisted(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "divisor formulas need n >= 1");
  BigInt total = 0;
  for (long d : divisors(n)) total += sign_pow((d - 1) * (n / d - 1)) * d;
  return 8 * total;
}

}  // namespace ellipsum::oracle
