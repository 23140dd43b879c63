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
#include <string>

#include "ellipsum/error.hpp"
#include "ellipsum/matrix.hpp"
#include "ellipsum/orthopoly.hpp"
#include "ellipsum/symfun.hpp"

namespace ellipsum::symfun {

namespace {

constexpr std::size_t kMaxQVariables = 8;

}  // namespace

Rat q_lambda_eval(const IntLabel& lambda, const std::vector<Rat>& xs) {
  const std::size_t n = xs.size();
  const std::size_t m = lambda.size();
  if (n > kMaxQVariables) throw Error(ErrorCode::TooManyVariables, "at most 8 variables are supported");
  if (m > n) throw Error(ErrorCode::InvalidParams, "label longer than the number of variables");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (xs[i] == xs[j]) throw Error(ErrorCode::RepeatedPoint, "points must be pairwise distinct");
      if (sgn(xs[i] + xs[j]) == 0) throw Error(ErrorCode::AntipodalPoints, "points x and -x both present");
    }
  }
  const bool negative = std::any_of(lambda.begin(), lambda.end(), [](long e) { return e < 0; });
  if (negative && std::any_of(xs.begin(), xs.end(), [](const Rat& x) { return sgn(x) == 0; })) {
    throw Error(ErrorCode::ZeroPointWithNegativeExponent, "negative exponent at a zero point");
  }
  const std::size_t k = (n - m) / 2;
  // powers[i][a] = x_a^{lambda_i}, ratio[a][b] = (x_a - x_b)/(x_a + x_b)
  std::vector<std::vector<Rat>> powers(m, std::vector<Rat>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a) powers[i][a] = pow(xs[a], lambda[i]);
  }
  std::vector<std::vector<Rat>> ratio(n, std::vector<Rat>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) ratio[a][b] = (xs[a] - xs[b]) / (xs[a] + xs[b]);
    }
  }
  Rat sum = 0;
  linalg::for_each_permutation(n, [&](const std::vector<std::size_t>& p, int sign) {
    Rat term = sign;
    for (std::size_t i = 0; i < m; ++i) term *= powers[i][p[i]];
    for (std::size_t i = 0; i < k; ++i) term *= ratio[p[m + 2 * i]][p[m + 2 * i + 1]];
    sum += term;
  });
  Rat pre = pow(Rat(2), static_cast<long>(m) - static_cast<long>(k)) / rat_factorial(static_cast<unsigned>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pre *= (xs[i] + xs[j]) / (xs[i] - xs[j]);
  }
  return pre * sum;
}

Rat q_balanced_at_ones(const std::vector<long>& ks, unsigned n, Parity parity) {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || (i > 0 && ks[i] >= ks[i - 1])) {
      throw Error(ErrorCode::LabelNotStrict, "need k_1 > ... > k_m >= 1");
    }
  }
  const std::size_t s = ks.size();
  if (s == 0) return Rat(1);
  if (s > n) throw Error(ErrorCode::InvalidParams, "label needs at least as many point pairs as entries");
  const int eps = parity == Parity::even ? 0 : 1;
  std::vector<Rat> pts;
  Rat pre = pow(Rat(8), static_cast<long>(s));
  for (std::size_t i = 0; i < s; ++i) {
    pts.push_back(Rat(-ks[i] * ks[i]));
    pre *= pow(Rat(ks[i]), eps == 0 ? 1 : 3);
    for (std::size_t j = i + 1; j < s; ++j) {
      const Rat d = Rat(ks[i] * ks[i] - ks[j] * ks[j]);
      pre *= d * d;
    }
  }
  if (eps == 1) pre *= sign_pow(static_cast<long>(s));
  return pre * orthopoly::correlation_eval(eps, n, pts, orthopoly::Route::cd);
}

}  // namespace ellipsum::symfun
