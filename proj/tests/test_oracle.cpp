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
#include <vector>

#include "doctest.h"
#include "ellipsum/error.hpp"
#include "ellipsum/oracle.hpp"

using namespace ellipsum;
using namespace ellipsum::oracle;

TEST_CASE("base series") {
  const auto box = base_series(RepKind::squares, 10);
  const std::vector<long> box_expect{1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0};
  const auto tri = base_series(RepKind::triangles, 10);
  const std::vector<long> tri_expect{1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1};
  for (int n = 0; n <= 10; ++n) {
    CHECK(box.q_coeff(n) == box_expect[static_cast<std::size_t>(n)]);
    CHECK(tri.q_coeff(n) == tri_expect[static_cast<std::size_t>(n)]);
  }
  CHECK(box.is_q_series());
}

TEST_CASE("representation numbers") {
  const auto r4 = rep_counts(RepKind::squares, 4, 5);
  CHECK(r4 == std::vector<BigInt>{1, 8, 24, 32, 24, 48});
  CHECK(rep_counts(RepKind::triangles, 4, 1)[1] == 4);
  CHECK(rep_counts(RepKind::squares, 16, 1)[1] == 32);
  CHECK(count_enum(RepKind::squares, 3, 9) == 30);
  CHECK(count_enum(RepKind::squares, 2, 5) == 8);
  CHECK(count_enum(RepKind::squares, 2, 3) == 0);
  CHECK(count_enum(RepKind::triangles, 2, 1) == 2);
  CHECK(count_enum(RepKind::squares, 4, 0) == 1);
  CHECK_THROWS_AS(count_enum(RepKind::squares, 9, 1), Error);
  CHECK_THROWS_AS(count_enum(RepKind::squares, 2, 201), Error);
}

TEST_CASE("series counts agree with enumeration") {
  for (const auto kind : {RepKind::squares, RepKind::triangles}) {
    for (unsigned k = 1; k <= 8; ++k) {
      const long top = k <= 4 ? 200 : 40;
      const auto r = rep_counts(kind, k, static_cast<int>(top));
      for (long n = 0; n <= top; ++n) CHECK(r[static_cast<std::size_t>(n)] == count_enum(kind, k, n));
    }
  }
}

TEST_CASE("classical divisor sums") {
  CHECK(divisor_count(ClassicalId::s4, 2) == 24);
  CHECK(divisor_count(ClassicalId::s8, 1) == 16);
  CHECK(divisor_count(ClassicalId::t8, 1) == 8);
  for (const auto id : {ClassicalId::s2, ClassicalId::s4, ClassicalId::s8, ClassicalId::t2, ClassicalId::t4,
                        ClassicalId::t8}) {
    const auto r = rep_counts(classical_kind(id), classical_summands(id), 1000);
    for (long n = 1; n <= 1000; ++n) CHECK(divisor_count(id, n) == r[static_cast<std::size_t>(n)]);
  }
  const auto r4 = rep_counts(RepKind::squares, 4, 300);
  for (long n = 1; n <= 300; ++n) CHECK(s4_twisted(n) == r4[static_cast<std::size_t>(n)]);
  CHECK(parse_classical_id("t4") == ClassicalId::t4);
  CHECK_THROWS_AS(parse_classical_id("s3"), Error);
  CHECK(classical_summands(ClassicalId::s8) == 8);
  CHECK(classical_kind(ClassicalId::t2) == RepKind::triangles);
}

TEST_CASE("square representation numbers are even") {
  // r_k(n) for squares: the sign flip n -> -n pairs tuples, so values are even for n >= 1.
  const auto r = rep_counts(RepKind::squares, 6, 100);
  for (long n = 1; n <= 100; ++n) CHECK(r[static_cast<std::size_t>(n)] % 2 == 0);
}
