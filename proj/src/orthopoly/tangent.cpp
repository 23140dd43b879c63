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

#include "ellipsum/orthopoly.hpp"

namespace ellipsum::orthopoly {

std::vector<Rat> bernoulli(unsigned k) {
  std::vector<Rat> b(k + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    Rat s = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      s += Rat(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / (m + 1);
  }
  return b;
}

std::vector<Rat> tangent_numbers(unsigned k) {
  const std::vector<Rat> b = bernoulli(2 * k);
  std::vector<Rat> t(k + 1);
  for (unsigned i = 1; i <= k; ++i) {
    BigInt four = 1;
    four <<= 2 * i;
    t[i] = Rat(four - 1) * abs(b[2 * i]) / i;
  }
  return t;
}

MomentId parse_moment_id(std::string_view name) {
  if (name == "mu0") return MomentId::mu0;
  if (name == "mu1") return MomentId::mu1;
  if (name == "nu0") return MomentId::nu0;
  if (name == "nu1") return MomentId::nu1;
  if (name == "lambda0") return MomentId::lambda0;
  if (name == "lambda1") return MomentId::lambda1;
  if (name == "tangent") return MomentId::tangent;
  throw Error(ErrorCode::UnknownId, "unknown moment sequence '" + std::string(name) + "'");
}

std::string_view moment_id_name(MomentId id) {
  switch (id) {
    case MomentId::mu0: return "mu0";
    case MomentId::mu1: return "mu1";
    case MomentId::nu0: return "nu0";
    case MomentId::nu1: return "nu1";
    case MomentId::lambda0: return "lambda0";
    case MomentId::lambda1: return "lambda1";
    case MomentId::tangent: return "tangent";
  }
  return "?";
}

namespace {

int eps_of(MomentId id) {
  return (id == MomentId::mu1 || id == MomentId::nu1 || id == MomentId::lambda1) ? 1 : 0;
}

bool has_mu_part(MomentId id) { return id != MomentId::lambda0 && id != MomentId::lambda1; }
bool has_lambda_part(MomentId id) {
  return id == MomentId::nu0 || id == MomentId::nu1 || id == MomentId::lambda0 || id == MomentId::lambda1;
}

// lambda0(x^k) = 4 (-1)^k sum_j q^j j^{2k+1} / (1 + (-q)^j)
// lambda1(x^k) = 4 (-1)^k sum_j q^j j^{2k+3} / (1 - (-q)^j)
core::QSeries lambda_moment(int eps, unsigned k, int q_order) {
  core::LambertSpec spec;
  spec.weight = 2 * k + 1 + 2 * static_cast<unsigned>(eps);
  spec.sign = eps == 0 ? core::DenominatorSign::plus : core::DenominatorSign::minus;
  spec.alternating = true;
  return core::lambert_sum(spec, q_order) * Rat(4 * sign_pow(k));
}

}  // namespace

MomentSeq moments(MomentId id, unsigned upto, int q_order) {
  if (q_order < 0) throw Error(ErrorCode::InvalidParams, "negative q-order");
  const std::vector<Rat> mu = scalar_moments(id, upto);
  MomentSeq out{id, {}};
  out.values.reserve(upto + 1);
  const int u_order = 2 * q_order + 1;
  for (unsigned k = 0; k <= upto; ++k) {
    core::QSeries v = core::QSeries::zero(u_order);
    if (has_mu_part(id)) v += core::QSeries::constant(mu[k], u_order);
    if (has_lambda_part(id)) v += lambda_moment(eps_of(id), k, q_order);
    out.values.push_back(std::move(v));
  }
  return out;
}

std::vector<Rat> scalar_moments(MomentId id, unsigned upto) {
  std::vector<Rat> out(upto + 1);
  if (!has_mu_part(id)) return out;
  const int eps = eps_of(id);
  const std::vector<Rat> t = tangent_numbers(upto + 2);
  for (unsigned k = 0; k <= upto; ++k) out[k] = t[k + 1 + static_cast<unsigned>(eps)];
  return out;
}

}  // namespace ellipsum::orthopoly
