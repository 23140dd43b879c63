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
#include <array>
#include <functional>
#include <mutex>
#include <string>

#include "ellipsum/matrix.hpp"
#include "ellipsum/orthopoly.hpp"
#include "ellipsum/symfun.hpp"

namespace ellipsum::orthopoly {

Ensemble::Ensemble(int eps, unsigned max_degree) : eps_(eps) {
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidParams, "eps must be 0 or 1");
  moments_ = scalar_moments(eps == 0 ? MomentId::mu0 : MomentId::mu1, 2 * max_degree);
  ops_ = monic_ops(moments_, max_degree);
}

const Poly<Rat>& Ensemble::p(unsigned k) const {
  if (k >= ops_.polys.size()) throw Error(ErrorCode::InvalidParams, "polynomial degree beyond ensemble table");
  return ops_.polys[k];
}

const Rat& Ensemble::norm(unsigned k) const {
  if (k >= ops_.norms.size()) throw Error(ErrorCode::InvalidParams, "norm index beyond ensemble table");
  return ops_.norms[k];
}

std::shared_ptr<const Ensemble> dual_hahn(int eps, unsigned max_degree) {
  static std::mutex mutex;
  static std::array<std::shared_ptr<const Ensemble>, 2> cache;
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidParams, "eps must be 0 or 1");
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(eps)];
  if (!slot || slot->max_degree() < max_degree) {
    const unsigned degree = std::max(max_degree, slot ? 2 * slot->max_degree() : 8U);
    slot = std::make_shared<const Ensemble>(eps, degree);
  }
  return slot;
}

namespace {

// Occurrence index of points[i] among the earlier equal points.
std::vector<unsigned> multiplicity_ranks(const std::vector<Rat>& points) {
  std::vector<unsigned> rank(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) rank[i] += points[j] == points[i] ? 1U : 0U;
  }
  return rank;
}

void require_distinct(const std::vector<Rat>& points) {
  for (unsigned r : multiplicity_ranks(points)) {
    if (r > 0) throw Error(ErrorCode::RepeatedPoint, "this route needs pairwise distinct points");
  }
}

Rat vandermonde(const std::vector<Rat>& x) {
  Rat v = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[j] - x[i];
  }
  return v;
}

Rat poly_derivative_eval(const Poly<Rat>& p, const Rat& x) { return poly_taylor_coeff(p, x, 1); }

Rat route_cd(const Ensemble& e, unsigned n, const std::vector<Rat>& x) {
  const std::size_t s = x.size();
  const Poly<Rat>& pn = e.p(n);
  const Poly<Rat>& pm = e.p(n - 1);
  linalg::RatMatrix k(s, Rat(0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) {
        k(i, j) = poly_derivative_eval(pn, x[i]) * poly_eval(pm, x[i]) -
                  poly_derivative_eval(pm, x[i]) * poly_eval(pn, x[i]);
      } else {
        k(i, j) = (poly_eval(pn, x[i]) * poly_eval(pm, x[j]) - poly_eval(pm, x[i]) * poly_eval(pn, x[j])) /
                  (x[i] - x[j]);
      }
    }
  }
  const Rat v = vandermonde(x);
  return linalg::determinant(k, s) / (pow(e.norm(n - 1), static_cast<long>(s)) * v * v);
}

Rat route_wronskian(const Ensemble& e, unsigned n, const std::vector<Rat>& x) {
  const std::size_t s = x.size();
  linalg::RatMatrix w(2 * s, Rat(0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < 2 * s; ++j) {
      const Poly<Rat>& p = e.p(n - static_cast<unsigned>(s) + static_cast<unsigned>(j));
      w(i, j) = poly_eval(p, x[i]);
      w(s + i, j) = poly_derivative_eval(p, x[i]);
    }
  }
  Rat norms = 1;
  for (std::size_t i = 1; i <= s; ++i) norms *= e.norm(n - static_cast<unsigned>(i));
  const Rat v = vandermonde(x);
  const Rat v4 = v * v * v * v;
  return Rat(sign_pow(static_cast<long>(s * (s - 1) / 2))) * linalg::determinant(w, 2 * s) / (norms * v4);
}

Rat route_sumsq(const Ensemble& e, unsigned n, const std::vector<Rat>& x) {
  const std::size_t s = x.size();
  Rat total = 0;
  std::vector<unsigned> ks(s);
  // k_1 > ... > k_s >= 0, all <= n - 1
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned bound) {
    if (i == s) {
      linalg::RatMatrix a(s, Rat(0));
      Rat norms = 1;
      for (std::size_t r = 0; r < s; ++r) {
        norms *= e.norm(ks[r]);
        for (std::size_t c = 0; c < s; ++c) a(r, c) = poly_eval(e.p(ks[r]), x[c]);
      }
      const Rat d = linalg::determinant(a, s);
      total += d * d / norms;
      return;
    }
    for (unsigned k = bound; k-- > 0;) {
      ks[i] = k;
      rec(i + 1, k);
    }
  };
  rec(0, n);
  const Rat v = vandermonde(x);
  return total / (v * v);
}

// Partitions with `parts` parts (zeros allowed) bounded by `max_part`.
void for_each_box_partition(std::size_t parts, long max_part,
                            const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> cur(parts);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long bound) {
    if (i == parts) {
      f(cur);
      return;
    }
    for (long v = bound; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, max_part);
}

Rat route_schur(const Ensemble& e, unsigned n, const std::vector<Rat>& x) {
  const std::size_t s = x.size();
  const auto& c = e.moments();
  // Complement index sets [n] \ {lambda_k + s + 1 - k} (1-based), kept 0-based.
  auto complement = [&](const std::vector<long>& lam) {
    std::vector<char> used(n, 0);
    for (std::size_t k = 0; k < s; ++k) used[static_cast<std::size_t>(lam[k]) + s - 1 - k] = 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) rest.push_back(i);
    }
    return rest;
  };
  std::vector<std::vector<long>> labels;
  for_each_box_partition(s, static_cast<long>(n) - static_cast<long>(s),
                         [&](const std::vector<long>& lam) { labels.push_back(lam); });
  std::vector<Rat> schur(labels.size());
  std::vector<std::vector<std::size_t>> comps(labels.size());
  std::vector<long> weight(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    schur[a] = symfun::schur_eval(labels[a], x);
    comps[a] = complement(labels[a]);
    weight[a] = 0;
    for (long v : labels[a]) weight[a] += v;
  }
  const std::size_t r = n - s;
  Rat total = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (sgn(schur[a]) == 0) continue;
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (sgn(schur[b]) == 0) continue;
      linalg::RatMatrix h(r, Rat(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) h(i, j) = c[comps[a][i] + comps[b][j]];
      }
      total += Rat(sign_pow(weight[a] + weight[b])) * linalg::determinant(h, r) * schur[a] * schur[b];
    }
  }
  Rat norms = 1;
  for (unsigned i = 0; i < n; ++i) norms *= e.norm(i);
  return total / norms;
}

}  // namespace

Rat schur_type_P(int eps, unsigned n, const std::vector<Rat>& points) {
  const std::size_t m = points.size();
  if (m == 0) return Rat(1);
  const auto e = dual_hahn(eps, n + static_cast<unsigned>(m));
  const auto rank = multiplicity_ranks(points);
  linalg::RatMatrix num(m, Rat(0));
  linalg::RatMatrix den(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      num(i, j) = poly_taylor_coeff(e->p(n + static_cast<unsigned>(j)), points[i], rank[i]);
      Poly<Rat> monomial(j + 1, Rat(0));
      monomial[j] = 1;
      den(i, j) = poly_taylor_coeff(monomial, points[i], rank[i]);
    }
  }
  return linalg::determinant(num, m) / linalg::determinant(den, m);
}

Route parse_route(std::string_view name) {
  if (name == "cd") return Route::cd;
  if (name == "wronskian") return Route::wronskian;
  if (name == "sumsq") return Route::sumsq;
  if (name == "schur") return Route::schur;
  throw Error(ErrorCode::RouteUnavailable, "unknown correlation route '" + std::string(name) + "'");
}

Rat correlation_eval(int eps, unsigned n, const std::vector<Rat>& points, Route route) {
  const std::size_t s = points.size();
  if (s > n) throw Error(ErrorCode::InvalidParams, "more points than ensemble size");
  if (s == 0) return Rat(1);
  const auto e = dual_hahn(eps, n + 1);
  switch (route) {
    case Route::cd:
      require_distinct(points);
      return route_cd(*e, n, points);
    case Route::wronskian:
      require_distinct(points);
      return route_wronskian(*e, n, points);
    case Route::sumsq:
      require_distinct(points);
      return route_sumsq(*e, n, points);
    case Route::schur:
      return route_schur(*e, n, points);
  }
  throw Error(ErrorCode::RouteUnavailable, "unknown correlation route");
}

HankelCorrelationSides hcl_sides(int eps, unsigned m, unsigned atoms, int q_order) {
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidParams, "eps must be 0 or 1");
  const int u_order = 2 * q_order + 1;
  // w_k = 4 k q^k / (1 + (-q)^k) for eps = 0 and 4 k^3 q^k / (1 - (-q)^k) for eps = 1.
  std::vector<core::QSeries> w(atoms + 1, core::QSeries::zero(u_order));
  for (unsigned k = 1; k <= atoms; ++k) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(q_order) + 1);
    const long kk = k;
    const Rat scale = Rat(4) * pow(Rat(kk), eps == 0 ? 1 : 3);
    for (long l = 1; kk * l <= q_order; ++l) {
      const long e = eps == 0 ? (kk - 1) * (l - 1) : kk * (l - 1);
      coeffs[static_cast<std::size_t>(kk * l)] = scale * sign_pow(e);
    }
    w[k] = core::QSeries::from_q(coeffs);
  }
  const auto ens = dual_hahn(eps, m + 1);
  std::vector<core::QSeries> c;
  for (unsigned j = 0; j + 1 < 2 * m || j == 0; ++j) {
    core::QSeries v = core::QSeries::constant(ens->moments()[j], u_order);
    for (unsigned k = 1; k <= atoms; ++k) v += w[k] * pow(Rat(-static_cast<long>(k * k)), static_cast<long>(j));
    c.push_back(std::move(v));
  }
  HankelCorrelationSides out;
  out.lhs = m == 0 ? core::QSeries::one(u_order)
                   : linalg::determinant(linalg::hankel_from_moments(c, m, 0, c[0]), c[0]);
  core::QSeries sum = core::QSeries::zero(u_order);
  std::vector<unsigned> ks;
  std::function<void(unsigned)> rec = [&](unsigned bound) {
    std::vector<Rat> pts;
    for (unsigned k : ks) pts.push_back(Rat(-static_cast<long>(k * k)));
    const Rat v = vandermonde(pts);
    core::QSeries term = core::QSeries::constant(v * v * correlation_eval(eps, m, pts, Route::cd), u_order);
    for (unsigned k : ks) term = term * w[k];
    sum += term;
    if (ks.size() == m) return;
    for (unsigned k = bound; k >= 1; --k) {
      ks.push_back(k);
      rec(k - 1);
      ks.pop_back();
    }
  };
  rec(atoms);
  Rat norms = 1;
  for (unsigned i = 0; i < m; ++i) norms *= ens->norm(i);
  out.rhs = sum * norms;
  return out;
}

}  // namespace ellipsum::orthopoly
