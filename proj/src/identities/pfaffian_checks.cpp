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
#include <cstdint>
#include <functional>
#include <random>

#include "ellipsum/matrix.hpp"
#include "ellipsum/symfun.hpp"
#include "internal.hpp"

namespace ellipsum::identities::detail {

namespace {

using core::QSeries;
using linalg::SeriesMatrix;

QSeries poch(const Rat& a, int shift, int order) { return core::poch_trunc(core::PochSpec{a, shift, 2}, order); }

// theta(c u^s1) / theta(d u^s2)
QSeries theta_quotient(const Rat& c, int s1, const Rat& d, int s2, int order) {
  return core::theta_at(c, s1, order) * core::series_inverse(core::theta_at(d, s2, order));
}

QSeries pfaff_of(const SeriesMatrix& a, int order) { return linalg::pfaffian(a, QSeries::zero(order)); }

// 1/(1 - sign u^e) as a u-series, e >= 1.
QSeries geometric(int e, int sign, int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1);
  Rat v = 1;
  for (int j = 0; j * e <= order; ++j) {
    c[static_cast<std::size_t>(j * e)] = v;
    v *= sign;
  }
  return QSeries::from_coefficients(std::move(c));
}

std::vector<Rat> points_of(const json& p, bool even, std::size_t max_size) {
  const auto xs = get_rats(p, "points");
  check_points(xs, even ? 2 : 1, max_size);
  if ((xs.size() % 2 == 0) != even) {
    throw Error(ErrorCode::InvalidPoints, std::string("expected an ") + (even ? "even" : "odd") + " number of points");
  }
  return xs;
}

json params_of(const std::vector<Rat>& xs, long order) { return json{{"points", rats_to_json(xs)}, {"order", order}}; }

Rat monomial_prefactor(const std::vector<Rat>& xs, long top) {
  Rat r = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) r *= pow(xs[i], top - static_cast<long>(i));
  return r;
}

// prod_{i<j} f(x_j / x_i)
QSeries pair_product(const std::vector<Rat>& xs, int order, const std::function<QSeries(const Rat&)>& f) {
  QSeries r = QSeries::one(order);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) r *= f(xs[j] / xs[i]);
  }
  return r;
}

SeriesMatrix skew_matrix(const std::vector<Rat>& xs, int order, const std::function<QSeries(std::size_t, std::size_t)>& f) {
  SeriesMatrix a(xs.size(), QSeries::zero(order));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      a(i, j) = f(i, j);
      a(j, i) = -a(i, j);
    }
  }
  return a;
}

VerifyReport run_eep(const json& p) {
  const auto xs = points_of(p, true, 6);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const auto ratio = [&](const Rat& y) { return theta_quotient(y, 0, -y, 0, n); };
  const auto a = skew_matrix(xs, n, [&](std::size_t i, std::size_t j) { return ratio(xs[j] / xs[i]); });
  return compare_series("eep", params_of(xs, order), pfaff_of(a, n), pair_product(xs, n, ratio), false);
}

VerifyReport run_oep(const json& p) {
  const auto xs = points_of(p, false, 5);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const long m = static_cast<long>(xs.size() - 1) / 2;
  const auto a = skew_matrix(xs, n, [&](std::size_t i, std::size_t j) {
    return QSeries::one(n) - Rat(2) * core::theta_logderiv_at(-xs[j] / xs[i], 0, n);
  });
  const auto ratio = [&](const Rat& y) { return theta_quotient(y, 0, -y, 0, n); };
  const QSeries front = core::series_pow(poch(1, 2, n) * core::series_inverse(poch(-1, 2, n)), static_cast<unsigned>(2 * m));
  return compare_series("oep", params_of(xs, order), pfaff_of(a, n), front * pair_product(xs, n, ratio), false);
}

VerifyReport run_ep(const json& p) {
  const auto xs = points_of(p, true, 6);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const long m = static_cast<long>(xs.size()) / 2;
  const auto ratio = [&](const Rat& y) { return theta_quotient(y, 0, y, 1, n); };
  const auto a = skew_matrix(xs, n, [&](std::size_t i, std::size_t j) { return ratio(xs[j] / xs[i]) * (1 / xs[j]); });
  const QSeries rhs = (monomial_prefactor(xs, m - 1) * pair_product(xs, n, ratio))
                          .shifted_up(static_cast<int>(m * (m - 1) / 2))
                          .truncated(n);
  return compare_series("ep", params_of(xs, order), pfaff_of(a, n), rhs, false);
}

VerifyReport run_op(const json& p) {
  const auto xs = points_of(p, false, 5);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const long m = static_cast<long>(xs.size() - 1) / 2;
  // The entries are L(q^(1/2) x_i/x_j) / q^(1/2); one extra order keeps them exact to n.
  const auto a = skew_matrix(xs, n, [&](std::size_t i, std::size_t j) {
    return core::theta_logderiv_at(xs[i] / xs[j], 1, n + 1).shifted_down(1);
  });
  const auto ratio = [&](const Rat& y) { return theta_quotient(y, 0, y, 1, n); };
  const QSeries front = core::series_pow(poch(1, 2, n) * core::series_inverse(poch(1, 1, n)), static_cast<unsigned>(2 * m));
  const QSeries rhs = (monomial_prefactor(xs, m) * front * pair_product(xs, n, ratio))
                          .shifted_up(static_cast<int>(m * (m - 1) / 2))
                          .truncated(n);
  return compare_series("op", params_of(xs, order), pfaff_of(a, n), rhs, false);
}

// prod over ordered pairs of (num y; q)_inf / (den y; q)_inf with y = x_j/x_i, x_i/x_j.
QSeries two_sided_pairs(const std::vector<Rat>& xs, int order, const Rat& num_sign, int num_shift,
                        const Rat& den_sign, int den_shift) {
  return pair_product(xs, order, [&](const Rat& y) {
    QSeries r = QSeries::one(order);
    for (const Rat& z : {y, Rat(1 / y)}) r *= poch(num_sign * z, num_shift, order) * core::series_inverse(poch(den_sign * z, den_shift, order));
    return r;
  });
}

VerifyReport run_dfe(const json& p, bool even) {
  const auto xs = points_of(p, even, even ? 6 : 5);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const long m = static_cast<long>(xs.size()) / 2;
  const QSeries front = core::series_pow(poch(1, 2, n) * core::series_inverse(poch(1, 1, n)), static_cast<unsigned>(2 * m));
  Rat scale = 1;
  for (const Rat& x : xs) scale /= pow(x, m);
  const long shift = even ? m * (m - 1) / 2 : m * (m + 1) / 2;
  const QSeries lhs = (scale * front * two_sided_pairs(xs, n, 1, 2, 1, 1)).shifted_up(static_cast<int>(shift));

  QSeries rhs = QSeries::zero(n);
  for_each_decreasing(static_cast<std::size_t>(m), even ? 0 : 1, order, [&](const std::vector<long>& ks) {
    QSeries t = QSeries::one(n);
    for (long k : ks) {
      const int e = static_cast<int>(even ? 2 * k + 1 : 2 * k);
      t = (t * geometric(e, 1, n)).shifted_up(static_cast<int>(k)).truncated(n);
    }
    symfun::IntLabel mu(ks.begin(), ks.end());
    if (!even) mu.push_back(0);
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) mu.push_back(even ? -*it - 1 : -*it);
    rhs += symfun::s_mu_eval(mu, xs) * t;
  });
  return compare_series(even ? "dfe_even" : "dfe_odd", params_of(xs, order), lhs, rhs, false);
}

VerifyReport run_mdt(const json& p, bool even) {
  const auto xs = points_of(p, even, even ? 6 : 5);
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  const long m = static_cast<long>(xs.size()) / 2;
  const QSeries front = core::series_pow(poch(1, 2, n) * core::series_inverse(poch(-1, 2, n)), static_cast<unsigned>(2 * m));
  const QSeries lhs = front * two_sided_pairs(xs, n, 1, 2, -1, 2);

  QSeries rhs = QSeries::zero(n);
  for (long s = 0; s <= m; ++s) {
    const Rat c = Rat(even ? 1 : sign_pow(s)) / pow(Rat(2), s);
    for_each_decreasing(static_cast<std::size_t>(s), 1, order / 2, [&](const std::vector<long>& ks) {
      QSeries t = QSeries::one(n);
      for (long k : ks) {
        // (-q)^k / (1 +- q^k)
        t = (Rat(sign_pow(k)) * t * geometric(static_cast<int>(2 * k), even ? -1 : 1, n))
                .shifted_up(static_cast<int>(2 * k))
                .truncated(n);
      }
      symfun::IntLabel lab(ks.begin(), ks.end());
      for (auto it = ks.rbegin(); it != ks.rend(); ++it) lab.push_back(-*it);
      rhs += (c * symfun::q_lambda_eval(lab, xs)) * t;
    });
  }
  return compare_series(even ? "mdt_even" : "mdt_odd", params_of(xs, order), lhs, rhs, false);
}

VerifyReport run_sep(const json& p) {
  const auto xs = get_rats(p, "points");
  check_points(xs, 1, 6);
  const auto cs = get_rats(p, "c");
  if (cs.empty() || cs.size() > 6) throw Error(ErrorCode::InvalidParams, "sep needs 1..6 coefficients c_k");
  const std::size_t m = xs.size();
  linalg::RatMatrix a(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Rat v = (xs[i] - xs[j]) / (xs[i] + xs[j]);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        const long e = static_cast<long>(k) + 1;
        v += cs[k] * (pow(xs[i] / xs[j], e) - pow(xs[j] / xs[i], e));
      }
      a(i, j) = v;
    }
  }
  const Rat lhs = linalg::pfaffian(a);
  Rat front = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) front *= (xs[i] - xs[j]) / (xs[i] + xs[j]);
  }
  Rat sum = 0;
  const long big_m = static_cast<long>(m / 2);
  const long kmax = static_cast<long>(cs.size());
  for (long s = 0; s <= big_m; ++s) {
    for_each_decreasing(static_cast<std::size_t>(s), 1, kmax * s, [&](const std::vector<long>& ks) {
      if (!ks.empty() && ks.front() > kmax) return;
      Rat t = 1 / pow(Rat(4), s);
      for (long k : ks) t *= cs[static_cast<std::size_t>(k - 1)];
      if (t == 0) return;
      symfun::IntLabel lab(ks.begin(), ks.end());
      for (auto it = ks.rbegin(); it != ks.rend(); ++it) lab.push_back(-*it);
      sum += t * symfun::q_lambda_eval(lab, xs);
    });
  }
  const Rat rhs = front * sum;
  json params{{"points", rats_to_json(xs)}, {"c", rats_to_json(cs)}};
  return exact_report("sep", std::move(params), kmax, lhs == rhs, kmax, lhs, rhs);
}

VerifyReport run_spe(const json& p) {
  const long trials = get_long(p, "trials");
  const long mmax = get_long(p, "mmax");
  const long seed = get_long(p, "seed");
  require_range("trials", trials, 1, 1000);
  require_range("mmax", mmax, 1, 8);
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  const json params{{"trials", trials}, {"mmax", mmax}, {"seed", seed}};
  for (long t = 0; t < trials; ++t) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(mmax));
    std::vector<Rat> xs;
    while (xs.size() < m) {
      const Rat x = Rat(static_cast<long>(1 + rng() % 60)) / Rat(static_cast<long>(1 + rng() % 12));
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    linalg::RatMatrix a(m, Rat(0));
    Rat rhs = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) a(i, j) = (xs[i] - xs[j]) / (xs[i] + xs[j]);
        if (i < j) rhs *= (xs[i] - xs[j]) / (xs[i] + xs[j]);
      }
    }
    const Rat lhs = linalg::pfaffian(a);
    if (lhs != rhs) return exact_report("spe", params, trials, false, t, lhs, rhs);
  }
  return exact_report("spe", params, trials, true, 0, 0, 0);
}

}  // namespace

std::vector<VerifyReport> run_pfaffian_row(std::string_view tag, const json& p) {
  if (tag == "spe") return {run_spe(p)};
  if (tag == "sep") return {run_sep(p)};
  const long order = get_long(p, "order");
  const bool short_range = tag.substr(0, 3) == "dfe" || tag.substr(0, 3) == "mdt";
  require_range("order", order, 1, short_range ? 80 : 120);
  if (tag == "eep") return {run_eep(p)};
  if (tag == "oep") return {run_oep(p)};
  if (tag == "ep") return {run_ep(p)};
  if (tag == "op") return {run_op(p)};
  if (tag == "dfe_even") return {run_dfe(p, true)};
  if (tag == "dfe_odd") return {run_dfe(p, false)};
  if (tag == "mdt_even") return {run_mdt(p, true)};
  if (tag == "mdt_odd") return {run_mdt(p, false)};
  throw Error(ErrorCode::UnknownIdentity, "not a pfaffian identity: " + std::string(tag));
}

}  // namespace ellipsum::identities::detail
