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

#include <algorithm>
#include <numeric>

#include "ellipsum/matrix.hpp"

namespace ellipsum::linalg {

namespace {

constexpr std::size_t kPermutationSumLimit = 8;

int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return sign_pow(inversions);
}

void check_permutation_size(std::size_t n) {
  if (n > kPermutationSumLimit) {
    throw Error(ErrorCode::DimensionTooLarge, "permutation sums are limited to n <= 8");
  }
}

}  // namespace

void for_each_permutation(std::size_t n, const std::function<void(const std::vector<std::size_t>&, int)>& f) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

Rat pfaffian_by_definition(const RatMatrix& a) {
  check_permutation_size(a.size());
  if (!is_skew_symmetric(a)) throw Error(ErrorCode::NotSkewSymmetric, "pfaffian input is not skew-symmetric");
  const std::size_t m = a.size() / 2;
  Rat total = 0;
  for_each_permutation(a.size(), [&](const std::vector<std::size_t>& p, int sign) {
    Rat term = sign;
    for (std::size_t i = 0; i < m && sgn(term) != 0; ++i) term *= a(p[2 * i], p[2 * i + 1]);
    total += term;
  });
  return total / (pow(Rat(2), static_cast<long>(m)) * rat_factorial(static_cast<unsigned>(m)));
}

Rat pfaffian_sum_expansion(const RatMatrix& a, const RatMatrix& b) {
  check_permutation_size(a.size());
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidParams, "matrix sizes differ");
  if (!is_skew_symmetric(b)) throw Error(ErrorCode::NotSkewSymmetric, "B must be skew-symmetric");
  const std::size_t m = a.size() / 2;
  Rat total = 0;
  for (std::size_t s = 0; s <= m; ++s) {
    Rat inner = 0;
    for_each_permutation(a.size(), [&](const std::vector<std::size_t>& p, int sign) {
      Rat term = sign;
      for (std::size_t i = 0; i < m && sgn(term) != 0; ++i) {
        term *= (i < s) ? a(p[2 * i], p[2 * i + 1]) : b(p[2 * i], p[2 * i + 1]);
      }
      inner += term;
    });
    const BigInt binom = [&] {
      BigInt r;
      mpz_bin_uiui(r.get_mpz_t(), m, s);
      return r;
    }();
    total += inner * Rat(binom) / pow(Rat(2), static_cast<long>(m - s));
  }
  return total / rat_factorial(static_cast<unsigned>(m));
}

Rat determinant(const RatMatrix& a, std::size_t bound) {
  const std::size_t n = a.size();
  if (n > bound) throw Error(ErrorCode::DimensionTooLarge, "determinant dimension exceeds bound");
  if (n == 0) return Rat(1);
  // Bareiss on numerators after clearing denominators row by row.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    scale /= Rat(l);
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return Rat(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return Rat(m[n - 1][n - 1]) * scale * sign;
}

}  // namespace ellipsum::linalg
