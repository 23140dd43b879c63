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

#include <string>

#include "ellipsum/matrix.hpp"
#include "ellipsum/orthopoly.hpp"

namespace ellipsum::orthopoly {

namespace {

Rat divide(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) throw Error(ErrorCode::SingularHankel, "vanishing norm in Gram-Schmidt");
  return a / b;
}

core::QSeries divide(const core::QSeries& a, const core::QSeries& b) {
  if (sgn(b[0]) == 0) throw Error(ErrorCode::SingularHankel, "norm series has zero constant term");
  return a * core::series_inverse(b);
}

template <typename T>
T inner(const Poly<T>& f, const Poly<T>& g, const std::vector<T>& c) {
  T total = linalg::RingTraits<T>::zero(c[0]);
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (linalg::RingTraits<T>::is_zero(f[a])) continue;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (linalg::RingTraits<T>::is_zero(g[b])) continue;
      total += f[a] * g[b] * c[a + b];
    }
  }
  return total;
}

template <typename T>
MonicOPSeq<T> gram_schmidt(const std::vector<T>& c, unsigned k) {
  if (c.size() < 2 * static_cast<std::size_t>(k) + 1) {
    throw Error(ErrorCode::InsufficientMoments, "Gram-Schmidt to degree " + std::to_string(k) + " needs " +
                                                    std::to_string(2 * k + 1) + " moments");
  }
  const T zero = linalg::RingTraits<T>::zero(c[0]);
  const T one = linalg::RingTraits<T>::one(c[0]);
  MonicOPSeq<T> out;
  for (unsigned d = 0; d <= k; ++d) {
    Poly<T> monomial(d + 1, zero);
    monomial[d] = one;
    Poly<T> p = monomial;
    for (unsigned j = 0; j < d; ++j) {
      const T coef = divide(inner(monomial, out.polys[j], c), out.norms[j]);
      for (std::size_t b = 0; b < out.polys[j].size(); ++b) p[b] -= coef * out.polys[j][b];
    }
    out.norms.push_back(inner(p, monomial, c));
    out.polys.push_back(std::move(p));
    if (d < k) divide(one, out.norms.back());  // reject singular norms early
  }
  return out;
}

}  // namespace

Rat poly_eval(const Poly<Rat>& p, const Rat& x) {
  Rat r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Rat poly_taylor_coeff(const Poly<Rat>& p, const Rat& x, unsigned t) {
  Rat r = 0;
  for (std::size_t a = p.size(); a-- > t;) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), a, t);
    r = r * x + p[a] * Rat(binom);
  }
  return r;
}

MonicOPSeq<Rat> monic_ops(const std::vector<Rat>& c, unsigned k) { return gram_schmidt(c, k); }

MonicOPSeq<core::QSeries> monic_ops(const std::vector<core::QSeries>& c, unsigned k) {
  return gram_schmidt(c, k);
}

Rat norms_product(int eps, unsigned m) {
  if (m == 0) return Rat(1);
  const auto c = scalar_moments(eps == 0 ? MomentId::mu0 : MomentId::mu1, 2 * m);
  const auto ops = monic_ops(c, m - 1);
  Rat r = 1;
  for (const Rat& n : ops.norms) r *= n;
  return r;
}

Rat norms_product_closed_form(int eps, unsigned m) {
  Rat r = 1;
  const unsigned top = 2 * m - 1 + static_cast<unsigned>(eps);
  for (unsigned i = 1; i <= top && m > 0; ++i) r *= rat_factorial(i);
  return r / pow(Rat(2), static_cast<long>(m) * (2 * static_cast<long>(m) - 1 + 2 * eps));
}

}  // namespace ellipsum::orthopoly
