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
#include <map>
#include <vector>

#include "ellipsum/error.hpp"
#include "ellipsum/matrix.hpp"
#include "ellipsum/orthopoly.hpp"
#include "internal.hpp"

namespace ellipsum::identities {

using core::QSeries;

std::map<std::vector<int>, BigInt> ono_A(bool plus, unsigned m) {
  detail::require_range("m", m, 1, 5);
  std::map<std::vector<int>, BigInt> poly{{std::vector<int>(m, plus ? 1 : 3), BigInt(1)}};
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      for (int rep = 0; rep < 2; ++rep) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [e, c] : poly) {
          auto ej = e;
          ej[j] += 2;
          next[ej] += c;
          auto ei = e;
          ei[i] += 2;
          next[ei] -= c;
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        poly = std::move(next);
      }
    }
  }
  return poly;
}

QSeries ono_E(bool plus, unsigned two_k, int q_order) {
  if (two_k < 2 || two_k % 2 != 0) throw Error(ErrorCode::InvalidParams, "E(2k) needs an even argument >= 2");
  detail::require_range("2k", two_k, 2, 40);
  if (q_order < 0) throw Error(ErrorCode::TruncationTooSmall, "negative q-order");
  const unsigned k = two_k / 2;
  const auto b = orthopoly::bernoulli(two_k);
  const Rat c = Rat(k % 2 == 0 ? 1 : -1) * abs(b[two_k]) / Rat(4 * k);
  const auto n_max = static_cast<std::size_t>(q_order);
  std::vector<BigInt> sigma(n_max + 1, 0);
  for (std::size_t d = 1; d <= n_max; ++d) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), BigInt(static_cast<unsigned long>(d)).get_mpz_t(), two_k - 1);
    for (std::size_t n = d; n <= n_max; n += d) sigma[n] += p;
  }
  std::vector<Rat> a(n_max + 1, 0), s(n_max + 1, 0);
  a[0] = c;
  s[0] = c;
  const std::size_t stretch = plus ? 4 : 2;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (stretch * n <= n_max) a[stretch * n] += sigma[n];
    s[n] += (!plus && n % 2 == 1) ? Rat(-sigma[n]) : Rat(sigma[n]);
  }
  BigInt wa, ws;
  mpz_ui_pow_ui(wa.get_mpz_t(), 2, plus ? 4 * k - 1 : 2 * k);
  mpz_ui_pow_ui(ws.get_mpz_t(), 2, plus ? 2 * k - 1 : 0);
  std::vector<Rat> e(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) e[n] = Rat(wa) * a[n] - Rat(ws) * s[n];
  return QSeries::from_q(e);
}

namespace {

// Prefactor of the Eisenstein side; with_mfact adds the 1/m! of the A-sum.
Rat ono_prefactor(int eps, unsigned m, bool with_mfact) {
  BigInt num;
  Rat denom = 1;
  if (eps == 0) {
    mpz_ui_pow_ui(num.get_mpz_t(), 4, m);
    if (m % 2 == 1) num = -num;
    for (unsigned i = 1; i <= 2 * m - 1; ++i) denom *= rat_factorial(i);
  } else {
    mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * m * m + 3 * m);
    for (unsigned i = 1; i <= 2 * m; ++i) denom *= rat_factorial(i);
  }
  if (with_mfact) denom *= rat_factorial(m);
  return Rat(num) / denom;
}

QSeries ot_hankel_series(int eps, unsigned m, int q_order) {
  const bool plus = eps == 0;
  std::map<unsigned, QSeries> cache;
  const auto e_of = [&](unsigned arg) -> const QSeries& {
    auto it = cache.find(arg);
    if (it == cache.end()) it = cache.emplace(arg, ono_E(plus, arg, q_order)).first;
    return it->second;
  };
  linalg::Matrix<QSeries> h(m, QSeries::zero(2 * q_order + 1));
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = 1; j <= m; ++j) h(i - 1, j - 1) = e_of(plus ? 2 * i + 2 * j - 2 : 2 * i + 2 * j);
  return ono_prefactor(eps, m, false) * linalg::determinant(h, e_of(plus ? 2 : 4));
}

}  // namespace

QSeries ot_series(int eps, unsigned m, int q_order) {
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidParams, "eps must be 0 or 1");
  detail::require_range("m", m, 1, 4);
  const bool plus = eps == 0;
  std::map<int, QSeries> cache;
  const auto e_of = [&](int arg) -> const QSeries& {
    auto it = cache.find(arg);
    if (it == cache.end()) it = cache.emplace(arg, ono_E(plus, static_cast<unsigned>(arg), q_order)).first;
    return it->second;
  };
  QSeries total = QSeries::zero(2 * q_order + 1);
  for (const auto& [e, c] : ono_A(plus, m)) {
    QSeries term = QSeries::constant(Rat(c), 2 * q_order + 1);
    for (const int a : e) term = term * e_of(a + 1);
    total = total + term;
  }
  return ono_prefactor(eps, m, true) * total;
}

namespace detail {

namespace {

// sum_{l,m >= 1} w(l) l'^{2k-1} q^{stretch l m}, where l' = scale * l.
void add_double_sum(std::vector<Rat>& acc, int sign, long k, long scale, long stretch, bool alternate_l,
                    bool alternate_lm) {
  const long cap = static_cast<long>(acc.size()) - 1;
  for (long l = 1; stretch * l <= cap; ++l) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(scale * l), static_cast<unsigned long>(2 * k - 1));
    for (long mm = 1; stretch * l * mm <= cap; ++mm) {
      int s = sign;
      if (alternate_l && l % 2 == 1) s = -s;
      if (alternate_lm && ((l - 1) * (mm - 1)) % 2 == 1) s = -s;
      acc[static_cast<std::size_t>(stretch * l * mm)] += s * p;
    }
  }
}

}  // namespace

std::vector<VerifyReport> run_appendix_row(std::string_view tag, const json& p) {
  const std::string id(tag);
  std::vector<VerifyReport> out;
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  if (tag == "ot_sq" || tag == "ot_oct") {
    const int eps = tag == "ot_sq" ? 0 : 1;
    const long m = get_long(p, "m");
    require_range("m", m, 1, 3);
    require_range("order", order, 1, 200);
    const auto mu = static_cast<unsigned>(m);
    const auto ref = box_power(eps == 0 ? 4 * mu * mu : 4 * mu * (mu + 1), n);
    out.push_back(compare_series(id, {{"m", m}, {"order", order}}, ot_series(eps, mu, n), ref, true));
    out.push_back(compare_series(id, {{"m", m}, {"order", order}, {"form", "hankel"}}, ot_hankel_series(eps, mu, n),
                                 ref, true));
    return out;
  }
  if (tag == "oe_plus" || tag == "oe_minus") {
    const long k = get_long(p, "k");
    require_range("k", k, 1, 12);
    require_range("order", order, 1, 2000);
    std::vector<Rat> lhs(static_cast<std::size_t>(order) + 1, 0), rhs(lhs.size(), 0);
    if (tag == "oe_plus") {
      add_double_sum(lhs, 1, k, 1, 1, false, false);
      add_double_sum(lhs, -2, k, 2, 4, false, false);
      add_double_sum(rhs, 1, k, 1, 1, false, true);
    } else {
      add_double_sum(lhs, 2, k, 2, 2, false, false);
      add_double_sum(lhs, -1, k, 1, 1, false, false);
      add_double_sum(rhs, 1, k, 1, 1, true, false);
    }
    out.push_back(compare_values(id, {{"k", k}, {"order", order}}, lhs, rhs, 0, order));
    return out;
  }
  throw Error(ErrorCode::UnknownIdentity, "not an appendix identity: " + id);
}

}  // namespace detail

}  // namespace ellipsum::identities
