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

#ifndef ELLIPSUM_MATRIX_HPP
#define ELLIPSUM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ellipsum/error.hpp"
#include "ellipsum/multipoly.hpp"
#include "ellipsum/qseries.hpp"
#include "ellipsum/rational.hpp"

namespace ellipsum::linalg {

/// Ring operations the algorithms need beyond + - *. The sample argument
/// carries the truncation order for series.
template <typename T>
struct RingTraits;

template <>
struct RingTraits<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& x) { return sgn(x) == 0; }
};

template <>
struct RingTraits<core::QSeries> {
  static core::QSeries zero(const core::QSeries& s) { return core::QSeries::zero(s.order()); }
  static core::QSeries one(const core::QSeries& s) { return core::QSeries::one(s.order()); }
  static bool is_zero(const core::QSeries& x) { return x.is_zero(); }
};

/// Dense square matrix over Rat or QSeries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Matrix transposed() const {
    Matrix t = *this;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) t(i, j) = (*this)(j, i);
    }
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using SeriesMatrix = Matrix<core::QSeries>;

inline constexpr std::size_t kDefaultDimensionBound = 10;

template <typename T>
bool is_skew_symmetric(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!RingTraits<T>::is_zero(a(i, i))) return false;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      T s = a(i, j);
      s += a(j, i);
      if (!RingTraits<T>::is_zero(s)) return false;
    }
  }
  return true;
}

/// Even-size extension of an odd matrix: a last column of ones and a last
/// row of minus ones. The odd pfaffian equals the pfaffian of this matrix.
template <typename T>
Matrix<T> bordered(const Matrix<T>& a, const T& sample) {
  const std::size_t n = a.size();
  Matrix<T> b(n + 1, RingTraits<T>::zero(sample));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
    b(i, n) = RingTraits<T>::one(sample);
    b(n, i) = -RingTraits<T>::one(sample);
  }
  return b;
}

namespace detail {

template <typename T>
const T& pf_subset(const Matrix<T>& a, std::uint32_t mask, std::vector<T>& memo, std::vector<char>& known,
                   const T& one) {
  if (known[mask]) return memo[mask];
  T total = RingTraits<T>::zero(one);
  if (mask == 0) {
    total = one;
  } else {
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1U << i);
    int sign = 1;
    for (std::uint32_t r = rest; r != 0; r &= r - 1) {
      const int j = __builtin_ctz(r);
      if (!RingTraits<T>::is_zero(a(i, j))) {
        const T& sub = pf_subset(a, rest & ~(1U << j), memo, known, one);
        if (sign > 0) {
          total += a(i, j) * sub;
        } else {
          total -= a(i, j) * sub;
        }
      }
      sign = -sign;
    }
  }
  memo[mask] = std::move(total);
  known[mask] = 1;
  return memo[mask];
}

// det of rows [row, n) against the column set `mask` (popcount n - row),
// Laplace expansion along the top row, memoized on the column set.
template <typename T>
const T& det_subset(const Matrix<T>& a, std::size_t row, std::uint32_t mask, std::vector<T>& memo,
                    std::vector<char>& known, const T& one) {
  if (known[mask]) return memo[mask];
  T total = RingTraits<T>::zero(one);
  if (mask == 0) {
    total = one;
  } else {
    int sign = 1;
    for (std::uint32_t r = mask; r != 0; r &= r - 1) {
      const int j = __builtin_ctz(r);
      if (!RingTraits<T>::is_zero(a(row, static_cast<std::size_t>(j)))) {
        const T& sub = det_subset(a, row + 1, mask & ~(1U << j), memo, known, one);
        if (sign > 0) {
          total += a(row, static_cast<std::size_t>(j)) * sub;
        } else {
          total -= a(row, static_cast<std::size_t>(j)) * sub;
        }
      }
      sign = -sign;
    }
  }
  memo[mask] = std::move(total);
  known[mask] = 1;
  return memo[mask];
}

}  // namespace detail

/// Pfaffian by expansion along the first row, memoized over index subsets.
/// Odd dimensions use the ones-bordered matrix above. `sample` fixes the
/// ring element shape (series order) when the matrix is empty.
template <typename T>
T pfaffian(const Matrix<T>& a, const T& sample, std::size_t bound = kDefaultDimensionBound) {
  if (a.size() > bound) {
    throw Error(ErrorCode::DimensionTooLarge, "pfaffian dimension " + std::to_string(a.size()) + " exceeds bound");
  }
  if (!is_skew_symmetric(a)) throw Error(ErrorCode::NotSkewSymmetric, "pfaffian input is not skew-symmetric");
  const T& s = a.size() == 0 ? sample : a(0, 0);
  if (a.size() % 2 == 1) return pfaffian(bordered(a, s), s, bound + 1);
  const std::size_t full = std::size_t{1} << a.size();
  const T one = RingTraits<T>::one(s);
  std::vector<T> memo(full, one);
  std::vector<char> known(full, 0);
  return detail::pf_subset(a, static_cast<std::uint32_t>(full - 1), memo, known, one);
}

inline Rat pfaffian(const RatMatrix& a, std::size_t bound = kDefaultDimensionBound) {
  return pfaffian(a, Rat(0), bound);
}

/// Calls f(perm, sign) for every permutation of 0..n-1.
void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&, int)>& f);

/// The symmetrized permutation sum
///   (2^M M!)^{-1} sum_sigma sgn(sigma) prod_{i<=M} a(sigma(2i-1), sigma(2i)),  M = floor(n/2),
/// evaluated literally; n <= 8. Used to cross-check `pfaffian`.
Rat pfaffian_by_definition(const RatMatrix& a);

/// Right-hand side of the expansion of pf(A - A^t + B) for any A and skew B:
///   (M!)^{-1} sum_s 2^{s-M} C(M,s) sum_sigma sgn(sigma) prod_{i<=s} a(..) prod_{i>s} b(..).
/// n <= 8.
Rat pfaffian_sum_expansion(const RatMatrix& a, const RatMatrix& b);

/// Fraction-free (Bareiss) determinant over Rat.
Rat determinant(const RatMatrix& a, std::size_t bound = kDefaultDimensionBound);

/// Division-free determinant (Laplace expansion memoized over column sets).
template <typename T>
T determinant_expansion(const Matrix<T>& a, const T& sample, std::size_t bound = kDefaultDimensionBound) {
  if (a.size() > bound) {
    throw Error(ErrorCode::DimensionTooLarge, "determinant dimension " + std::to_string(a.size()) + " exceeds bound");
  }
  const T& s = a.size() == 0 ? sample : a(0, 0);
  const std::size_t full = std::size_t{1} << a.size();
  const T one = RingTraits<T>::one(s);
  std::vector<T> memo(full, one);
  std::vector<char> known(full, 0);
  return detail::det_subset(a, 0, static_cast<std::uint32_t>(full - 1), memo, known, one);
}

inline core::QSeries determinant(const SeriesMatrix& a, const core::QSeries& sample,
                                 std::size_t bound = kDefaultDimensionBound) {
  return determinant_expansion(a, sample, bound);
}

/// The m x m Hankel matrix (c_{i+j+offset}), 0-based i, j.
template <typename T>
Matrix<T> hankel_from_moments(const std::vector<T>& c, std::size_t m, std::size_t offset, const T& sample) {
  if (m == 0) return Matrix<T>(0, sample);
  if (c.size() < 2 * m - 1 + offset) {
    throw Error(ErrorCode::InsufficientMoments, "Hankel matrix of size " + std::to_string(m) + " needs " +
                                                    std::to_string(2 * m - 1 + offset) + " moments");
  }
  Matrix<T> h(m, c[offset]);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) h(i, j) = c[i + j + offset];
  }
  return h;
}

/// prod_{i<j} (x_j - x_i)^2 in m variables.
core::MultiPoly vandermonde_squared(std::size_t m);

/// sum_k C(k) prod_i c_{k_i}, where C are the coefficients of the squared
/// Vandermonde. Equals m! times the Hankel determinant of c.
template <typename T>
T vandermonde_moment_sum(const std::vector<T>& c, std::size_t m, const T& sample) {
  const core::MultiPoly v = vandermonde_squared(m);
  T total = RingTraits<T>::zero(sample);
  for (const auto& [e, coeff] : v.terms()) {
    T term = RingTraits<T>::one(sample);
    for (int k : e) {
      if (static_cast<std::size_t>(k) >= c.size()) throw Error(ErrorCode::InsufficientMoments, "moment index too large");
      term = term * c[static_cast<std::size_t>(k)];
    }
    total += term * coeff;
  }
  return total;
}

}  // namespace ellipsum::linalg

#endif  // ELLIPSUM_MATRIX_HPP
