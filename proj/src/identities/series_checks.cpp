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
#include <functional>

#include "ellipsum/matrix.hpp"
#include "ellipsum/oracle.hpp"
#include "ellipsum/orthopoly.hpp"
#include "ellipsum/symfun.hpp"
#include "internal.hpp"

namespace ellipsum::identities {

namespace {

Rat milne_prefactor(int eps, unsigned m) {
  Rat den = 1;
  for (unsigned i = 1; i <= 2 * m - 1 + static_cast<unsigned>(eps); ++i) den *= rat_factorial(i);
  return pow(Rat(2), static_cast<long>(m) * (2 * static_cast<long>(m) - 1 + 2 * eps)) / den;
}

unsigned milne_squares(int eps, unsigned m) { return eps == 0 ? 4 * m * m : 4 * m * (m + 1); }

void check_eps(int eps) {
  if (eps != 0 && eps != 1) throw Error(ErrorCode::InvalidParams, "eps must be 0 or 1");
}

// k^w q^k / (1 + sign (-q)^k) through an explicit series inverse of the denominator.
core::QSeries lambert_atom(long k, unsigned w, int sign, int q_order) {
  std::vector<Rat> den(static_cast<std::size_t>(q_order) + 1);
  den[0] = 1;
  if (k <= q_order) den[static_cast<std::size_t>(k)] += sign * sign_pow(k);
  const auto inv = core::series_inverse(core::QSeries::from_q(den));
  return (Rat(pow(Rat(k), static_cast<long>(w))) * inv).shifted_up(2 * static_cast<int>(k)).truncated(inv.order());
}

// sum over k_1 > .. > k_s >= 1 (s <= m, sum k_i <= q_order) of
// coeff(k) * prod atom(k_i); prefix products are shared across the tree.
core::QSeries atom_tree_sum(unsigned m, int q_order, const std::function<core::QSeries(long)>& atom,
                            const std::function<Rat(const std::vector<long>&)>& coeff) {
  std::vector<core::QSeries> atoms(static_cast<std::size_t>(q_order) + 1);
  for (long k = 1; k <= q_order; ++k) atoms[static_cast<std::size_t>(k)] = atom(k);
  const core::QSeries one = core::QSeries::one(2 * q_order + 1);
  core::QSeries sum = core::QSeries::zero(one.order());
  std::vector<long> ks;
  const std::function<void(const core::QSeries&, long, long)> rec = [&](const core::QSeries& prefix, long below,
                                                                        long left) {
    const Rat c = coeff(ks);
    if (c != 0) sum += c * prefix;
    if (ks.size() == m) return;
    for (long k = std::min(below - 1, left); k >= 1; --k) {
      ks.push_back(k);
      rec(prefix * atoms[static_cast<std::size_t>(k)], k, left - k);
      ks.pop_back();
    }
  };
  rec(one, q_order + 1, q_order);
  return sum;
}

Rat sq_vandermonde_sq(const std::vector<long>& ks) {
  Rat v = 1;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      const Rat d = Rat(ks[i] * ks[i] - ks[j] * ks[j]);
      v *= d * d;
    }
  }
  return v;
}

core::QSeries lambert(unsigned weight, int num_step, int den_step, core::DenominatorSign sign, bool alternating,
                      int q_order) {
  core::LambertSpec spec;
  spec.weight = weight;
  spec.numerator_step = num_step;
  spec.denominator_step = den_step;
  spec.sign = sign;
  spec.alternating = alternating;
  return core::lambert_sum(spec, q_order);
}

core::QSeries q_times(const core::QSeries& f) { return f.shifted_up(2).truncated(f.order()); }

}  // namespace

core::QSeries box_power(unsigned k, int q_order) {
  return core::series_pow(oracle::base_series(oracle::RepKind::squares, q_order), k);
}

core::QSeries mhd_series(int eps, unsigned m, int q_order) {
  check_eps(eps);
  detail::require_range("m", m, 1, 4);
  const auto mom = orthopoly::moments(eps == 0 ? orthopoly::MomentId::nu0 : orthopoly::MomentId::nu1, 2 * m - 2,
                                      q_order);
  const auto h = linalg::hankel_from_moments(mom.values, m, 0, mom.values[0]);
  return milne_prefactor(eps, m) * linalg::determinant(h, mom.values[0]);
}

core::QSeries opc_series(int eps, unsigned m, int q_order) {
  check_eps(eps);
  detail::require_range("m", m, 1, 4);
  const auto mom = orthopoly::moments(eps == 0 ? orthopoly::MomentId::nu0 : orthopoly::MomentId::nu1, 2 * m,
                                      q_order);
  const auto ops = orthopoly::monic_ops(mom.values, m - 1);
  core::QSeries p = core::QSeries::one(mom.values[0].order());
  for (const auto& n : ops.norms) p *= n;
  return milne_prefactor(eps, m) * p;
}

core::QSeries gcc_series(int eps, unsigned m, int q_order) {
  check_eps(eps);
  detail::require_range("m", m, 1, 3);
  return atom_tree_sum(
      m, q_order, [&](long k) { return lambert_atom(k, eps == 0 ? 1 : 3, eps == 0 ? 1 : -1, q_order); },
      [&](const std::vector<long>& ks) -> Rat {
        std::vector<Rat> pts;
        for (long k : ks) pts.push_back(Rat(-k * k));
        return pow(Rat(4), static_cast<long>(ks.size())) * sq_vandermonde_sq(ks) *
               orthopoly::correlation_eval(eps, m, pts, orthopoly::Route::cd);
      });
}

core::QSeries qss_series(int eps, unsigned m, int q_order) {
  check_eps(eps);
  detail::require_range("m", m, 1, 3);
  const auto parity = eps == 0 ? symfun::Parity::even : symfun::Parity::odd;
  return atom_tree_sum(
      m, q_order, [&](long k) { return lambert_atom(k, 0, eps == 0 ? 1 : -1, q_order); },
      [&](const std::vector<long>& ks) -> Rat {
        const long s = static_cast<long>(ks.size());
        Rat c = Rat(eps == 0 ? 1 : sign_pow(s)) / pow(Rat(2), s);
        return c * symfun::q_balanced_at_ones(ks, m, parity);
      });
}

namespace detail {

namespace {

json mo(long m, long order) { return json{{"m", m}, {"order", order}}; }

}  // namespace

std::vector<VerifyReport> run_series_row(std::string_view tag, const json& p) {
  using core::DenominatorSign;
  using core::QSeries;
  const std::string id(tag);
  std::vector<VerifyReport> out;
  if (tag == "en") {
    const long m = get_long(p, "m");
    require_range("m", m, 1, 8);
    for (long k = 1; k <= m; ++k) {
      for (int eps = 0; eps <= 1; ++eps) {
        const Rat a = orthopoly::norms_product(eps, static_cast<unsigned>(k));
        const Rat b = orthopoly::norms_product_closed_form(eps, static_cast<unsigned>(k));
        if (a != b) {
          out.push_back(exact_report(id, {{"m", m}}, m, false, k, a, b));
          return out;
        }
      }
    }
    out.push_back(exact_report(id, {{"m", m}}, m, true, 0, 0, 0));
    return out;
  }
  const long order = get_long(p, "order");
  const int n = static_cast<int>(order);
  if (tag == "l2" || tag == "l4" || tag == "l8" || tag == "jl" || tag == "jq" || tag == "sq_split") {
    require_range("order", order, 1, 4000);
    const auto box = oracle::base_series(oracle::RepKind::squares, n);
    const json params{{"order", order}};
    if (tag == "l2") {
      const auto rhs = QSeries::one(box.order()) + Rat(4) * lambert(0, 1, 2, DenominatorSign::plus, false, n);
      out.push_back(compare_series(id, params, core::series_pow(box, 2), rhs, true));
    } else if (tag == "l4") {
      const auto rhs = QSeries::one(box.order()) + Rat(8) * lambert(1, 1, 1, DenominatorSign::plus, true, n);
      out.push_back(compare_series(id, params, core::series_pow(box, 4), rhs, true));
    } else if (tag == "l8") {
      const auto rhs = QSeries::one(box.order()) + Rat(16) * lambert(3, 1, 1, DenominatorSign::minus, true, n);
      out.push_back(compare_series(id, params, core::series_pow(box, 8), rhs, true));
    } else if (tag == "jl" || tag == "jq") {
      const auto tri = oracle::base_series(oracle::RepKind::triangles, n);
      const auto tri4_q2 = core::series_pow(tri.substitute_q(2, 1).truncated(box.order()), 4);
      if (tag == "jl") {
        const auto lhs = q_times(tri4_q2 * core::series_pow(box, 2));
        out.push_back(compare_series(id, params, lhs, lambert(2, 1, 2, DenominatorSign::plus, false, n), true));
      } else {
        const auto lhs = Rat(16) * q_times(tri4_q2);
        const auto rhs = core::series_pow(box, 4) - core::series_pow(box.substitute_q(1, -1), 4);
        out.push_back(compare_series(id, params, lhs, rhs, true));
      }
    } else {
      const auto lhs = core::series_pow(box.substitute_q(2, -1).truncated(box.order()), 2);
      out.push_back(compare_series(id, params, lhs, box * box.substitute_q(1, -1), true));
    }
    return out;
  }
  if (tag == "pqn") {
    const long eps = get_long(p, "eps");
    const long k = get_long(p, "k");
    check_eps(static_cast<int>(eps));
    require_range("k", k, 0, 3);
    require_range("order", order, 1, 200);
    const auto mom = orthopoly::moments(eps == 0 ? orthopoly::MomentId::nu0 : orthopoly::MomentId::nu1,
                                        static_cast<unsigned>(2 * k), n);
    const auto norm = orthopoly::monic_ops(mom.values, static_cast<unsigned>(k)).norms.back();
    const unsigned uk = static_cast<unsigned>(k);
    const Rat c = eps == 0 ? rat_factorial(2 * uk + 1) * rat_factorial(2 * uk) / pow(Rat(2), 4 * k + 1)
                           : rat_factorial(2 * uk + 2) * rat_factorial(2 * uk + 1) / pow(Rat(2), 4 * k + 3);
    const auto rhs = c * box_power(eps == 0 ? 8 * uk + 4 : 8 * uk + 8, n);
    out.push_back(compare_series(id, {{"eps", eps}, {"k", k}, {"order", order}}, norm, rhs, true));
    return out;
  }
  const long m = get_long(p, "m");
  const unsigned mu = static_cast<unsigned>(std::max(0L, m));
  if (tag == "opc") {
    const long eps = get_long(p, "eps");
    check_eps(static_cast<int>(eps));
    require_range("m", m, 1, 4);
    require_range("order", order, 1, 200);
    const int e = static_cast<int>(eps);
    out.push_back(compare_series(id, {{"eps", eps}, {"m", m}, {"order", order}}, box_power(milne_squares(e, mu), n),
                                 opc_series(e, mu, n), true));
    return out;
  }
  const int eps = tag.size() > 4 && tag.substr(tag.size() - 4) == "_oct" ? 1 : 0;
  if (tag == "mhd_sq" || tag == "mhd_oct") {
    require_range("m", m, 1, 4);
    require_range("order", order, 1, 400);
    out.push_back(compare_series(id, mo(m, order), box_power(milne_squares(eps, mu), n), mhd_series(eps, mu, n), true));
  } else if (tag == "gcc_sq" || tag == "gcc_oct") {
    require_range("m", m, 1, 3);
    require_range("order", order, 1, 200);
    out.push_back(compare_series(id, mo(m, order), box_power(milne_squares(eps, mu), n), gcc_series(eps, mu, n), true));
  } else if (tag == "qss_sq" || tag == "qss_oct") {
    require_range("m", m, 1, 3);
    require_range("order", order, 1, 200);
    out.push_back(compare_series(id, mo(m, order), box_power(milne_squares(eps, mu), n), qss_series(eps, mu, n), true));
  } else {
    throw Error(ErrorCode::UnknownIdentity, "not a series identity: " + id);
  }
  return out;
}

}  // namespace detail

}  // namespace ellipsum::identities
