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

#include "ellipsum/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ellipsum/error.hpp"

namespace ellipsum::core {

QSeries::QSeries(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
}

QSeries QSeries::zero(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidParams, "negative series order");
  return QSeries(std::vector<Rat>(static_cast<std::size_t>(order) + 1), order);
}

QSeries QSeries::one(int order) { return constant(Rat(1), order); }

QSeries QSeries::constant(const Rat& c, int order) {
  QSeries s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rat& c, int exponent, int order) {
  QSeries s = zero(order);
  if (exponent < 0) throw Error(ErrorCode::InvalidParams, "negative exponent in monomial");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

QSeries QSeries::from_coefficients(std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidParams, "empty series");
  const int n = static_cast<int>(coeffs.size()) - 1;
  return QSeries(std::move(coeffs), n);
}

QSeries QSeries::from_q(const std::vector<Rat>& q_coeffs) {
  if (q_coeffs.empty()) throw Error(ErrorCode::InvalidParams, "empty q-series");
  const int m = static_cast<int>(q_coeffs.size()) - 1;
  QSeries s = zero(2 * m + 1);
  for (int n = 0; n <= m; ++n) s.coeffs_[static_cast<std::size_t>(2 * n)] = q_coeffs[static_cast<std::size_t>(n)];
  return s;
}

const Rat& QSeries::operator[](int exponent) const {
  static const Rat kZero(0);
  if (exponent < 0) return kZero;
  if (exponent > order_) {
    throw Error(ErrorCode::TruncationTooSmall,
                "coefficient u^" + std::to_string(exponent) + " beyond order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(exponent)];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) == 0; });
}

bool QSeries::is_q_series() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

int QSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw Error(ErrorCode::TruncationTooSmall, "cannot extend a series beyond its order");
  std::vector<Rat> c(coeffs_.begin(), coeffs_.begin() + order + 1);
  return QSeries(std::move(c), order);
}

QSeries QSeries::shifted_up(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidParams, "negative shift");
  std::vector<Rat> c(static_cast<std::size_t>(order_ + k) + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
  return QSeries(std::move(c), order_ + k);
}

QSeries QSeries::shifted_down(int k) const {
  if (k < 0 || k > order_) throw Error(ErrorCode::TruncationTooSmall, "shift exceeds series order");
  for (int i = 0; i < k; ++i) {
    if (sgn(coeffs_[static_cast<std::size_t>(i)]) != 0) {
      throw Error(ErrorCode::InvalidParams, "series not divisible by u^" + std::to_string(k));
    }
  }
  std::vector<Rat> c(coeffs_.begin() + k, coeffs_.end());
  return QSeries(std::move(c), order_ - k);
}

QSeries QSeries::substitute_q(int factor, int sign) const {
  if (factor < 1 || (sign != 1 && sign != -1)) throw Error(ErrorCode::InvalidParams, "bad q substitution");
  if (!is_q_series()) throw Error(ErrorCode::InvalidParams, "q substitution needs a pure q-series");
  // Known modulo q^(M+1) becomes known modulo q^(factor*(M+1)).
  const int m = order_ / 2;
  const int new_q_order = factor * (m + 1) - 1;
  QSeries out = zero(2 * new_q_order + 1);
  for (int n = 0; n <= m; ++n) {
    const Rat& c = coeffs_[static_cast<std::size_t>(2 * n)];
    if (sgn(c) == 0) continue;
    const int e = n * factor;
    out.coeffs_[static_cast<std::size_t>(2 * e)] = (sign < 0 && (n % 2 != 0)) ? Rat(-c) : c;
  }
  return out;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  order_ = std::min(order_, other.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] += other.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  order_ = std::min(order_, other.order_);
  coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  for (int i = 0; i <= order_; ++i) coeffs_[static_cast<std::size_t>(i)] -= other.coeffs_[static_cast<std::size_t>(i)];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& other) {
  *this = series_mul(*this, other);
  return *this;
}

QSeries& QSeries::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

namespace {

bool all_integer(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c.get_den() == 1; });
}

}  // namespace

QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

QSeries series_mul(const QSeries& f, const QSeries& g) {
  const int n = std::min(f.order(), g.order());
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<int> nz_b;
  for (int j = 0; j <= n; ++j) {
    if (sgn(b[static_cast<std::size_t>(j)]) != 0) nz_b.push_back(j);
  }
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
  if (all_integer(a) && all_integer(b)) {
    std::vector<BigInt> acc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      if (sgn(ai) == 0) continue;
      for (int j : nz_b) {
        if (i + j > n) break;
        mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(), ai.get_num_mpz_t(),
                   b[static_cast<std::size_t>(j)].get_num_mpz_t());
      }
    }
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = Rat(acc[static_cast<std::size_t>(i)]);
  } else {
    Rat tmp;
    for (int i = 0; i <= n; ++i) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      if (sgn(ai) == 0) continue;
      for (int j : nz_b) {
        if (i + j > n) break;
        mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), b[static_cast<std::size_t>(j)].get_mpq_t());
        mpq_add(out[static_cast<std::size_t>(i + j)].get_mpq_t(), out[static_cast<std::size_t>(i + j)].get_mpq_t(),
                tmp.get_mpq_t());
      }
    }
  }
  return QSeries::from_coefficients(std::move(out));
}

QSeries series_inverse(const QSeries& f) {
  const auto& a = f.coefficients();
  if (sgn(a[0]) == 0) throw Error(ErrorCode::ZeroConstantTerm, "series has zero constant term");
  const int n = f.order();
  std::vector<int> nz;
  for (int k = 1; k <= n; ++k) {
    if (sgn(a[static_cast<std::size_t>(k)]) != 0) nz.push_back(k);
  }
  const Rat inv0 = 1 / a[0];
  std::vector<Rat> g(static_cast<std::size_t>(n) + 1);
  g[0] = inv0;
  Rat acc, tmp;
  for (int m = 1; m <= n; ++m) {
    acc = 0;
    for (int k : nz) {
      if (k > m) break;
      mpq_mul(tmp.get_mpq_t(), a[static_cast<std::size_t>(k)].get_mpq_t(), g[static_cast<std::size_t>(m - k)].get_mpq_t());
      acc += tmp;
    }
    g[static_cast<std::size_t>(m)] = -acc * inv0;
  }
  return QSeries::from_coefficients(std::move(g));
}

QSeries series_pow(const QSeries& f, unsigned exponent) {
  QSeries result = QSeries::one(f.order());
  QSeries base = f;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

int first_difference(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return -1;
}

namespace {

// In-place multiplication by (1 - a u^e), e >= 1.
void mul_binomial(std::vector<Rat>& c, const Rat& a, int e) {
  const int n = static_cast<int>(c.size()) - 1;
  Rat tmp;
  for (int i = n; i >= e; --i) {
    const auto& lo = c[static_cast<std::size_t>(i - e)];
    if (sgn(lo) == 0) continue;
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), lo.get_mpq_t());
    c[static_cast<std::size_t>(i)] -= tmp;
  }
}

// sum_{k>=0} -a z_k / (1 - a z_k) with z_k = u^(shift + 2k).
void add_logderiv_factors(std::vector<Rat>& out, const Rat& a, int shift) {
  const int n = static_cast<int>(out.size()) - 1;
  for (int e = shift; e <= n; e += 2) {
    if (e == 0) {
      if (a == 1) throw Error(ErrorCode::PoleAtArgument, "factor 1 - x vanishes at x = 1");
      out[0] -= a / (1 - a);
      continue;
    }
    Rat power = a;
    for (int m = e; m <= n; m += e) {
      out[static_cast<std::size_t>(m)] -= power;
      power *= a;
    }
  }
}

void check_shift(int shift) {
  if (shift < 0 || shift > 2) throw Error(ErrorCode::InvalidParams, "theta argument shift must be 0, 1 or 2");
}

}  // namespace

QSeries poch_trunc(const PochSpec& spec, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidParams, "negative series order");
  if (spec.step <= 0 || spec.shift < 0) throw Error(ErrorCode::InvalidParams, "PochSpec needs shift >= 0, step > 0");
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  if (sgn(spec.a) == 0) return QSeries::from_coefficients(std::move(c));
  for (int e = spec.shift; e <= order; e += spec.step) {
    if (e == 0) {
      for (auto& x : c) x *= (1 - spec.a);
    } else {
      mul_binomial(c, spec.a, e);
    }
  }
  return QSeries::from_coefficients(std::move(c));
}

QSeries theta_at(const Rat& c, int shift, int order) {
  check_shift(shift);
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroArgument, "theta of zero");
  return poch_trunc({c, shift, 2}, order) * poch_trunc({1 / c, 2 - shift, 2}, order);
}

QSeries theta_trunc(const Rat& x, int order) { return theta_at(x, 0, order); }

QSeries theta_logderiv_at(const Rat& c, int shift, int order) {
  check_shift(shift);
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroArgument, "log-derivative of theta at zero");
  if (order < 0) throw Error(ErrorCode::InvalidParams, "negative series order");
  // theta(z) = prod (1 - z q^k)(1 - q^(k+1)/z); the second family enters with
  // the opposite sign because it depends on 1/z.
  std::vector<Rat> plus(static_cast<std::size_t>(order) + 1);
  std::vector<Rat> minus(static_cast<std::size_t>(order) + 1);
  add_logderiv_factors(plus, c, shift);
  add_logderiv_factors(minus, 1 / c, 2 - shift);
  for (std::size_t i = 0; i < plus.size(); ++i) plus[i] -= minus[i];
  return QSeries::from_coefficients(std::move(plus));
}

QSeries theta_logderiv_trunc(const Rat& x, int order) { return theta_logderiv_at(x, 0, order); }

QSeries lambert_sum(const LambertSpec& spec, int q_order) {
  if (q_order < 0) throw Error(ErrorCode::InvalidParams, "negative series order");
  if (spec.numerator_step < 1 || spec.denominator_step < 1) {
    throw Error(ErrorCode::InvalidParams, "Lambert steps must be positive");
  }
  std::vector<BigInt> acc(static_cast<std::size_t>(q_order) + 1);
  for (long k = 1; spec.numerator_step * k <= q_order; ++k) {
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(k), spec.weight);
    if (spec.twist == LambertTwist::alt_k && (k % 2 != 0)) w = -w;
    const long d = spec.denominator_step * k;
    int s = (spec.sign == DenominatorSign::plus) ? 1 : -1;
    if (spec.alternating && (d % 2 != 0)) s = -s;
    // 1/(1 + s q^d) = sum_r (-s)^r q^(d r)
    int sign = 1;
    for (long e = spec.numerator_step * k; e <= q_order; e += d) {
      if (sign > 0) {
        acc[static_cast<std::size_t>(e)] += w;
      } else {
        acc[static_cast<std::size_t>(e)] -= w;
      }
      sign *= -s;
    }
  }
  std::vector<Rat> q(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) q[i] = Rat(acc[i]);
  return QSeries::from_q(q);
}

}  // namespace ellipsum::core
