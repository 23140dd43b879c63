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
#include "ellipsum/symfun.hpp"

namespace ellipsum::symfun {

namespace {

void require_distinct(const std::vector<Rat>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) {
        throw Error(ErrorCode::RepeatedPoint, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace

Rat s_mu_eval(const IntLabel& mu, const std::vector<Rat>& xs) {
  if (mu.size() != xs.size()) throw Error(ErrorCode::InvalidParams, "label length must equal the number of points");
  require_distinct(xs);
  const bool negative = std::any_of(mu.begin(), mu.end(), [](long e) { return e < 0; });
  if (negative && std::any_of(xs.begin(), xs.end(), [](const Rat& x) { return sgn(x) == 0; })) {
    throw Error(ErrorCode::ZeroPointWithNegativeExponent, "negative exponent at a zero point");
  }
  const std::size_t m = xs.size();
  linalg::RatMatrix a(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = pow(xs[j], mu[i]);
  }
  Rat vandermonde = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) vandermonde *= xs[i] - xs[j];
  }
  return linalg::determinant(a, m) / vandermonde;
}

Rat s_at_ones(const IntLabel& mu) {
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i - 1] <= mu[i]) throw Error(ErrorCode::NotStrictlyDecreasing, "label must be strictly decreasing");
  }
  Rat r = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = i + 1; j < mu.size(); ++j) r *= Rat(mu[i] - mu[j]) / Rat(static_cast<long>(j - i));
  }
  return r;
}

Rat schur_jacobi_trudi(const Partition& lambda, const std::vector<Rat>& xs) {
  const std::size_t len = lambda.size();
  if (len == 0) return Rat(1);
  const long top = lambda[0] + static_cast<long>(len);
  // h[k] = complete homogeneous symmetric polynomial of degree k.
  std::vector<Rat> h(static_cast<std::size_t>(std::max<long>(top, 0)) + 1);
  h[0] = 1;
  for (const Rat& x : xs) {
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  }
  linalg::RatMatrix jt(len, Rat(0));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      const long k = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
      jt(i, j) = (k < 0) ? Rat(0) : h[static_cast<std::size_t>(k)];
    }
  }
  return linalg::determinant(jt, len);
}

Rat schur_eval(const Partition& lambda, const std::vector<Rat>& xs) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1])) {
      throw Error(ErrorCode::InvalidParams, "not a partition");
    }
  }
  Partition lam = lambda;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  const std::size_t m = xs.size();
  if (lam.size() > m) return Rat(0);
  bool distinct = true;
  for (std::size_t i = 0; i < m && distinct; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) distinct = distinct && xs[i] != xs[j];
  }
  if (!distinct) return schur_jacobi_trudi(lam, xs);
  IntLabel mu(m);
  for (std::size_t i = 0; i < m; ++i) {
    mu[i] = (i < lam.size() ? lam[i] : 0) + static_cast<long>(m - 1 - i);
  }
  return s_mu_eval(mu, xs);
}

}  // namespace ellipsum::symfun
