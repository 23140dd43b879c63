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
#include <random>
#include <vector>

#include "doctest.h"
#include "ellipsum/error.hpp"
#include "ellipsum/matrix.hpp"
#include "ellipsum/orthopoly.hpp"

using namespace ellipsum;
using linalg::RatMatrix;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  return ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
}

RatMatrix random_skew(std::mt19937_64& rng, std::size_t n) {
  RatMatrix a(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = random_rat(rng);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

// Leibniz formula, independent of the library determinant.
Rat leibniz(const RatMatrix& a) {
  Rat d = 0;
  linalg::for_each_permutation(a.size(), [&](const std::vector<std::size_t>& p, int sign) {
    Rat t = sign;
    for (std::size_t i = 0; i < p.size(); ++i) t *= a(i, p[i]);
    d += t;
  });
  return d;
}

}  // namespace

TEST_CASE("small pfaffians") {
  RatMatrix a(2, Rat(0));
  a(0, 1) = ratio(5, 3);
  a(1, 0) = ratio(-5, 3);
  CHECK(linalg::pfaffian(a) == ratio(5, 3));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto b = random_skew(rng, 4);
    CHECK(linalg::pfaffian(b) == b(0, 1) * b(2, 3) - b(0, 2) * b(1, 3) + b(0, 3) * b(1, 2));
  }
  CHECK(linalg::pfaffian(RatMatrix(0, Rat(0))) == 1);
}

TEST_CASE("odd pfaffian of the Schur matrix") {
  const std::vector<Rat> x{1, 2, 0};
  RatMatrix a(3, Rat(0));
  Rat prod = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) a(i, j) = (x[i] - x[j]) / (x[i] + x[j]);
      if (i < j) prod *= (x[i] - x[j]) / (x[i] + x[j]);
    }
  }
  CHECK(linalg::pfaffian(a) == ratio(-1, 3));
  CHECK(prod == ratio(-1, 3));
}

TEST_CASE("pfaffian errors") {
  RatMatrix a(2, Rat(0));
  a(0, 1) = 1;
  CHECK_THROWS_AS(linalg::pfaffian(a), Error);
  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(linalg::pfaffian(random_skew(rng, 12)), Error);
}

TEST_CASE("pf^2 = det and the definition agrees with the expansion") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {2u, 4u, 6u}) {
    for (int t = 0; t < 5; ++t) {
      const auto a = random_skew(rng, n);
      const Rat pf = linalg::pfaffian(a);
      CHECK(pf * pf == linalg::determinant(a));
      CHECK(linalg::determinant(a) == leibniz(a));
      CHECK(linalg::pfaffian_by_definition(a) == pf);
    }
  }
  for (std::size_t n : {3u, 5u}) {
    const auto a = random_skew(rng, n);
    CHECK(linalg::pfaffian_by_definition(a) == linalg::pfaffian(a));
  }
}

TEST_CASE("odd pfaffians ignore rank-one skew shifts") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {3u, 5u, 7u}) {
    const auto a = random_skew(rng, n);
    std::vector<Rat> b(n);
    for (auto& v : b) v = random_rat(rng);
    RatMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) shifted(i, j) += b[i] - b[j];
    CHECK(linalg::pfaffian(shifted) == linalg::pfaffian(a));
  }
}

TEST_CASE("pfaffian sum expansion") {
  std::mt19937_64 rng(29);
  for (std::size_t n = 2; n <= 6; ++n) {
    RatMatrix a(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rat(rng);
    const auto b = random_skew(rng, n);
    RatMatrix m(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j) - a(j, i) + b(i, j);
    CHECK(linalg::pfaffian_sum_expansion(a, b) == linalg::pfaffian(m));
  }
}

TEST_CASE("determinants") {
  using core::QSeries;
  linalg::SeriesMatrix s(2, QSeries::zero(4));
  s(0, 0) = QSeries::from_coefficients({1, 1, 0, 0, 0});
  s(0, 1) = QSeries::from_coefficients({0, 1, 0, 0, 0});
  s(1, 0) = s(0, 1);
  s(1, 1) = QSeries::one(4);
  CHECK(linalg::determinant(s, QSeries::zero(4)) == QSeries::from_coefficients({1, 1, -1, 0, 0}));

  const auto t = orthopoly::tangent_numbers(3);
  RatMatrix h(2, Rat(0));
  h(0, 0) = t[1];
  h(0, 1) = t[2];
  h(1, 0) = t[2];
  h(1, 1) = t[3];
  CHECK(linalg::determinant(h) == ratio(3, 16));

  std::mt19937_64 rng(31);
  for (int k = 0; k < 5; ++k) {
    RatMatrix r(5, Rat(0));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) r(i, j) = random_rat(rng);
    CHECK(linalg::determinant(r) == leibniz(r));
    CHECK(linalg::determinant_expansion(r, Rat(0)) == leibniz(r));
  }
}

TEST_CASE("Hankel matrices from moments") {
  const auto t = orthopoly::tangent_numbers(6);
  const std::vector<Rat> c(t.begin() + 1, t.end());
  const auto h1 = linalg::hankel_from_moments(c, 1, 0, Rat(0));
  CHECK(h1.size() == 1);
  CHECK(h1(0, 0) == ratio(1, 2));

  const auto nu = orthopoly::scalar_moments(orthopoly::MomentId::nu0, 2);
  const auto h2 = linalg::hankel_from_moments(nu, 2, 0, Rat(0));
  CHECK(h2(0, 0) == ratio(1, 2));
  CHECK(h2(0, 1) == ratio(1, 4));
  CHECK(h2(1, 0) == ratio(1, 4));
  CHECK(h2(1, 1) == ratio(1, 2));

  const auto h0 = linalg::hankel_from_moments(c, 0, 0, Rat(0));
  CHECK(linalg::determinant(h0) == 1);
  CHECK_THROWS_AS(linalg::hankel_from_moments(c, 4, 0, Rat(0)), Error);
}

TEST_CASE("m! det Hankel equals the squared-Vandermonde moment sum") {
  std::mt19937_64 rng(37);
  std::vector<Rat> c(8);
  for (auto& v : c) v = random_rat(rng);
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto h = linalg::hankel_from_moments(c, m, 0, Rat(0));
    CHECK(linalg::vandermonde_moment_sum(c, m, Rat(0)) == rat_factorial(static_cast<unsigned>(m)) * linalg::determinant(h));
  }
  // the squared Vandermonde in two variables is x0^2 - 2 x0 x1 + x1^2
  const auto v2 = linalg::vandermonde_squared(2);
  CHECK(v2.coefficient({2, 0}) == 1);
  CHECK(v2.coefficient({1, 1}) == -2);
  CHECK(v2.coefficient({0, 2}) == 1);
}
