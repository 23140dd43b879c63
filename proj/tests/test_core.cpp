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
#include "ellipsum/multipoly.hpp"
#include "ellipsum/qseries.hpp"

using namespace ellipsum;
using core::QSeries;

namespace {

QSeries u_series(std::vector<Rat> c) { return QSeries::from_coefficients(std::move(c)); }

QSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = ratio(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 7));
  if (unit_constant && c[0] == 0) c[0] = 1;
  return u_series(std::move(c));
}

// 1 + 2 sum q^{n^2} by direct summation.
std::vector<Rat> box_coeffs(int n_max) {
  std::vector<Rat> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int n = 1; n * n <= n_max; ++n) c[static_cast<std::size_t>(n * n)] = 2;
  return c;
}

// 1/(1 - a u^e) as a u-series of the given order.
QSeries geometric(const Rat& a, int e, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, 0);
  Rat p = 1;
  for (int j = 0; j * e <= order; ++j, p *= a) c[static_cast<std::size_t>(j * e)] = p;
  return u_series(std::move(c));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rat r(6, 4);
  r.canonicalize();
  CHECK(r.get_num() == 3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(ratio(-3, 6)) == "-1/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK(parse_rat("-7/21") == ratio(-1, 3));
  CHECK(parse_rat("0.25") == ratio(1, 4));
  CHECK(factorial(10) == 3628800);
  CHECK(pow(ratio(2, 3), -2) == ratio(9, 4));
}

TEST_CASE("series multiplication truncates at the smaller order") {
  const auto f = u_series({1, 2});
  const auto g = u_series({1, -1});
  const auto h = f * g;
  CHECK(h.order() == 1);
  CHECK(h == u_series({1, 1}));
  const auto f2 = u_series({1, 2, 0});
  const auto g2 = u_series({1, -1, 0});
  CHECK(f2 * g2 == u_series({1, 1, -2}));
  CHECK((f2 * QSeries::one(5)).order() == 2);
  CHECK(f2 * QSeries::one(2) == f2);
}

TEST_CASE("box squared counts two-square representations") {
  const auto box = QSeries::from_q(box_coeffs(5));
  const auto sq = box * box;
  // direct lattice count of x^2 + y^2 = n
  for (int n = 0; n <= 5; ++n) {
    long count = 0;
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y) count += (x * x + y * y == n);
    CHECK(sq.q_coeff(n) == count);
  }
  CHECK(sq.q_coeff(5) == 8);
}

TEST_CASE("series inverse") {
  CHECK(core::series_inverse(u_series({1, -1, 0, 0, 0})) == u_series({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(core::series_inverse(u_series({0, 1})), Error);

  const auto th = core::theta_trunc(Rat(-1), 6);
  CHECK(th.q_coeff(0) == 2);
  CHECK(th.q_coeff(1) == 4);
  CHECK(th.q_coeff(2) == 6);
  // 1/(2 + 4q + 6q^2 + ..) = 1/2 - q + (4 - 3)/2 q^2 + ..
  const auto inv = core::series_inverse(th);
  CHECK(inv.q_coeff(0) == ratio(1, 2));
  CHECK(inv.q_coeff(1) == -1);
  CHECK(inv.q_coeff(2) == ratio(1, 2));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_series(rng, 30, true);
    CHECK(f * core::series_inverse(f) == QSeries::one(30));
  }
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_series(rng, 60, false);
    const auto b = random_series(rng, 60, false);
    const auto c = random_series(rng, 60, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(core::series_pow(a, 3) == a * a * a);
  }
}

TEST_CASE("Pochhammer products") {
  // Euler: (q;q)_inf = sum (-1)^j q^{j(3j-1)/2}, j in Z
  const int n = 40;
  const auto euler = core::poch_trunc({Rat(1), 2, 2}, 2 * n + 1);
  std::vector<Rat> pent(n + 1, 0);
  for (int j = -10; j <= 10; ++j) {
    const int e = j * (3 * j - 1) / 2;
    if (e <= n) pent[static_cast<std::size_t>(e)] += (j % 2 == 0) ? 1 : -1;
  }
  CHECK(euler == QSeries::from_q(pent));
  CHECK(euler.q_coeff(5) == 1);
  CHECK(euler.q_coeff(7) == 1);
  CHECK(euler.q_coeff(3) == 0);
  CHECK(core::poch_trunc({Rat(0), 2, 2}, 20) == QSeries::one(20));

  // box(q) = (q^2;q^2)(-q;q^2)^2
  const int order = 401;
  const auto prod = core::poch_trunc({Rat(1), 4, 4}, order) * core::series_pow(core::poch_trunc({Rat(-1), 2, 4}, order), 2);
  CHECK(prod == QSeries::from_q(box_coeffs(200)));
}

TEST_CASE("theta function") {
  CHECK(core::theta_trunc(Rat(1), 20).is_zero());
  CHECK_THROWS_AS(core::theta_trunc(Rat(0), 20), Error);

  // triple product: (q)_inf theta(x) = sum (-1)^k q^{k(k-1)/2} x^k; the q^n
  // coefficient collects k and 1-k.
  const int n = 30;
  for (const Rat& x : {Rat(2), Rat(3), Rat(-2), ratio(1, 2)}) {
    const auto lhs = core::poch_trunc({Rat(1), 2, 2}, 2 * n + 1) * core::theta_trunc(x, 2 * n + 1);
    std::vector<Rat> rhs(n + 1, 0);
    for (int k = -12; k <= 12; ++k) {
      const int e = k * (k - 1) / 2;
      if (e <= n) rhs[static_cast<std::size_t>(e)] += Rat((k % 2 == 0) ? 1 : -1) * pow(x, k);
    }
    CHECK(lhs == QSeries::from_q(rhs));
  }

  // theta(qx) = -theta(x)/x
  for (const Rat& x : {Rat(2), Rat(-3), ratio(1, 5)}) {
    const auto a = core::theta_at(x, 2, 40);
    const auto b = Rat(-1) / x * core::theta_at(x, 0, 40);
    CHECK(core::first_difference(a, b) == -1);
  }
}

TEST_CASE("Ramanujan kernel at x = c u") {
  // (q)^2 theta(a x) / (theta(a) theta(x)) = sum_k x^k / (1 - a q^k)
  const int order = 30;
  const Rat a = 2, c = 3;
  const auto q2 = core::series_pow(core::poch_trunc({Rat(1), 2, 2}, order), 2);
  const auto lhs = q2 * core::theta_at(a * c, 1, order) *
                   core::series_inverse(core::theta_trunc(a, order) * core::theta_at(c, 1, order));
  QSeries rhs = QSeries::constant(1 / (1 - a), order);
  for (int k = 1; k <= order; ++k) {
    rhs += QSeries::monomial(pow(c, k), k, order) * geometric(a, 2 * k, order);
    rhs -= QSeries::monomial(pow(c, -k) / a, k, order) * geometric(1 / a, 2 * k, order);
  }
  CHECK(core::first_difference(lhs, rhs) == -1);
}

TEST_CASE("theta log-derivative") {
  const int order = 20;
  // 1 + 2x theta'(-x)/theta(-x) = 1 - 2 [z theta'(z)/theta(z)]_{z=-x}
  const auto at2 = QSeries::one(order) - Rat(2) * core::theta_logderiv_trunc(Rat(-2), order);
  CHECK(at2.q_coeff(0) == ratio(-1, 3));
  CHECK(at2.q_coeff(1) == -3);
  const auto at1 = QSeries::one(order) - Rat(2) * core::theta_logderiv_trunc(Rat(-1), order);
  CHECK(at1.is_zero());
  CHECK_THROWS_AS(core::theta_logderiv_trunc(Rat(1), order), Error);

  // x theta'(x)/theta(x) = -sum_{k != 0} x^k/(1 - q^k) at x = c u
  const Rat c = 2;
  QSeries rhs = QSeries::zero(order);
  for (int k = 1; k <= order; ++k) {
    rhs -= QSeries::monomial(pow(c, k), k, order) * geometric(1, 2 * k, order);
    rhs += QSeries::monomial(pow(c, -k), k, order) * geometric(1, 2 * k, order);
  }
  CHECK(core::first_difference(core::theta_logderiv_at(c, 1, order), rhs) == -1);

  // theta(qz) = -theta(z)/z gives L(qz) = L(z) - 1 for L = z theta'/theta.
  const auto l1 = core::theta_logderiv_at(Rat(3), 2, order);
  const auto l0 = core::theta_logderiv_at(Rat(3), 0, order);
  CHECK(core::first_difference(l1, l0 - QSeries::one(order)) == -1);
}

TEST_CASE("Lambert sums") {
  core::LambertSpec s;
  s.weight = 1;
  s.alternating = true;  // 1 + (-q)^k
  const auto l = core::lambert_sum(s, 3);
  CHECK(l.q_coeff(1) == 1);
  CHECK(l.q_coeff(2) == 3);
  CHECK(l.q_coeff(3) == 4);
  const auto four = QSeries::one(l.order()) + Rat(8) * l;
  const auto box4 = core::series_pow(QSeries::from_q(box_coeffs(3)), 4);
  for (int n = 0; n <= 3; ++n) CHECK(four.q_coeff(n) == box4.q_coeff(n));

  core::LambertSpec t;
  t.weight = 2;
  t.denominator_step = 2;
  const auto j = core::lambert_sum(t, 2);
  CHECK(j.q_coeff(1) == 1);
  CHECK(j.q_coeff(2) == 4);
}

TEST_CASE("sparse polynomials") {
  using core::MultiPoly;
  const auto x = MultiPoly::variable(2, 0);
  const auto y = MultiPoly::variable(2, 1);
  const auto p = (x - y) * (x + y);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({1, 1}) == 0);
  CHECK(p.coefficient({0, 2}) == -1);
  CHECK(p.evaluate({Rat(3), Rat(1)}) == 8);
}
