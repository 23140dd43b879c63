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

#ifndef ELLIPSUM_QSERIES_HPP
#define ELLIPSUM_QSERIES_HPP

#include <cstddef>
#include <vector>

#include "ellipsum/rational.hpp"

namespace ellipsum::core {

/// Truncated power series in u with exact rational coefficients, where
/// u^2 = q. A series of order N is known modulo u^(N+1); coefficients
/// beyond N are not stored. Every binary operation yields the minimum of
/// the operand orders. A q-exponent n lives at u-exponent 2n.
class QSeries {
 public:
  QSeries() = default;

  static QSeries zero(int order);
  static QSeries one(int order);
  static QSeries constant(const Rat& c, int order);
  /// c * u^exponent (zero if exponent > order).
  static QSeries monomial(const Rat& c, int exponent, int order);
  /// Builds a pure q-series from a_0..a_M (known modulo q^(M+1)). The
  /// u-order is 2M + 1: a pure q-series has no u^(2M+1) term.
  static QSeries from_q(const std::vector<Rat>& q_coeffs);
  /// Dense u-coefficients c_0..c_N; the order is N.
  static QSeries from_coefficients(std::vector<Rat> coeffs);

  int order() const noexcept { return order_; }
  /// Largest q-exponent n with u^(2n) inside the known range.
  int q_order() const noexcept { return order_ / 2; }

  /// u-coefficient; zero for exponents < 0. Throws for exponents > order.
  const Rat& operator[](int exponent) const;
  Rat q_coeff(int n) const { return (*this)[2 * n]; }
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// True if all odd u-coefficients vanish (the series is a pure q-series).
  bool is_q_series() const;
  /// Smallest exponent with a nonzero coefficient, or -1 for zero.
  int valuation() const;

  QSeries truncated(int order) const;
  /// Multiplies by u^k (k >= 0); the order grows by k.
  QSeries shifted_up(int k) const;
  /// Divides by u^k; the k lowest coefficients must vanish. Order drops by k.
  QSeries shifted_down(int k) const;
  /// q -> sign * q^factor for a pure q-series.
  QSeries substitute_q(int factor, int sign) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const Rat& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rat& c) { return a *= c; }
  friend QSeries operator*(const Rat& c, QSeries a) { return a *= c; }
  QSeries operator-() const;

  /// Exact equality of the stored coefficients and of the order.
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  QSeries(std::vector<Rat> coeffs, int order);

  std::vector<Rat> coeffs_{Rat(0)};
  int order_ = 0;
};

QSeries series_mul(const QSeries& f, const QSeries& g);
/// g with f*g = 1 up to the order of f. Throws ZeroConstantTerm.
QSeries series_inverse(const QSeries& f);
QSeries series_pow(const QSeries& f, unsigned exponent);

/// First u-exponent (<= min order) where the two series differ, or -1.
int first_difference(const QSeries& a, const QSeries& b);

/// Describes prod_{k>=0} (1 - a * u^(shift + k*step)).
struct PochSpec {
  Rat a;
  int shift = 0;  // u-exponent of the first factor
  int step = 2;   // u-units between factors; > 0
};

/// Truncated infinite product; factors with exponent > order are 1 modulo
/// u^(order+1), so the result is exact to that order.
QSeries poch_trunc(const PochSpec& spec, int order);

/// theta(c * u^shift; q) = (x, q/x; q)_inf with x = c u^shift, 0 <= shift <= 2.
QSeries theta_at(const Rat& c, int shift, int order);
/// theta(x; q) for a fixed rational x. Throws ZeroArgument for x = 0.
QSeries theta_trunc(const Rat& x, int order);

/// z theta'(z)/theta(z) at z = c * u^shift (0 <= shift <= 2), expanded as a
/// sum of geometric series in u. Throws PoleAtArgument when a factor of the
/// product has vanishing constant term.
QSeries theta_logderiv_at(const Rat& c, int shift, int order);
QSeries theta_logderiv_trunc(const Rat& x, int order);

enum class DenominatorSign { plus, minus };
enum class LambertTwist { none, alt_k };

/// sum_{k>=1} twist(k) k^weight q^(numerator_step*k) / (1 + s q^(denominator_step*k))
/// with s = +1 for `plus`, -1 for `minus`, times (-1)^(denominator_step*k) when
/// `alternating` (so 1 + (-q)^k is {plus, step 1, alternating}).
struct LambertSpec {
  unsigned weight = 0;
  int numerator_step = 1;
  int denominator_step = 1;
  DenominatorSign sign = DenominatorSign::plus;
  bool alternating = false;
  LambertTwist twist = LambertTwist::none;
};

/// Truncated Lambert-type sum to q-order `q_order` (u-order 2*q_order).
QSeries lambert_sum(const LambertSpec& spec, int q_order);

}  // namespace ellipsum::core

#endif  // ELLIPSUM_QSERIES_HPP
