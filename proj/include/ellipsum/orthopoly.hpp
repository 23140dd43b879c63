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

#ifndef ELLIPSUM_ORTHOPOLY_HPP
#define ELLIPSUM_ORTHOPOLY_HPP

#include <memory>
#include <string_view>
#include <vector>

#include "ellipsum/error.hpp"
#include "ellipsum/qseries.hpp"
#include "ellipsum/rational.hpp"

namespace ellipsum::orthopoly {

/// B_0..B_K with B_1 = -1/2.
std::vector<Rat> bernoulli(unsigned k);

/// Entry k holds t_k = (4^k - 1)|B_{2k}|/k for 1 <= k <= K; entry 0 is 0.
/// These are the coefficients of tan(x/2) = sum t_k x^{2k-1}/(2k-1)!.
std::vector<Rat> tangent_numbers(unsigned k);

/// Moment functionals on polynomials in x. mu_eps are the q = 0 dual Hahn
/// functionals, lambda_eps the convergent Lambert parts, nu = mu + lambda.
enum class MomentId { mu0, mu1, nu0, nu1, lambda0, lambda1, tangent };

MomentId parse_moment_id(std::string_view name);
std::string_view moment_id_name(MomentId id);

struct MomentSeq {
  MomentId id;
  std::vector<core::QSeries> values;  // values[k] = functional applied to x^k
};

/// Moments 0..upto; q-dependent ones are truncated at q-order `q_order`.
/// For `tangent`, values[k] = t_{k+1} (the same numbers as mu0).
MomentSeq moments(MomentId id, unsigned upto, int q_order);
/// Constant terms (q = 0) of the moments.
std::vector<Rat> scalar_moments(MomentId id, unsigned upto);

/// Polynomial with coefficients listed from the constant term upwards.
template <typename T>
using Poly = std::vector<T>;

Rat poly_eval(const Poly<Rat>& p, const Rat& x);
/// t-th derivative divided by t!, evaluated at x.
Rat poly_taylor_coeff(const Poly<Rat>& p, const Rat& x, unsigned t);

template <typename T>
struct MonicOPSeq {
  std::vector<Poly<T>> polys;  // polys[k] monic of degree k
  std::vector<T> norms;        // norms[k] = <p_k, p_k>
};

/// Gram-Schmidt on 1, x, x^2, ... for the functional with moments c.
/// Needs c up to index 2K. Throws SingularHankel when a norm is not
/// invertible (zero, or a series with zero constant term).
MonicOPSeq<Rat> monic_ops(const std::vector<Rat>& c, unsigned k);
MonicOPSeq<core::QSeries> monic_ops(const std::vector<core::QSeries>& c, unsigned k);

/// prod_{i<m} ||p_i^{(eps)}||^2 at q = 0, and the closed form
/// prod_{i=1}^{2m-1+eps} i! / 2^{m(2m-1+2eps)}.
Rat norms_product(int eps, unsigned m);
Rat norms_product_closed_form(int eps, unsigned m);

/// Monic orthogonal polynomials of mu_eps at q = 0 together with their moments.
class Ensemble {
 public:
  Ensemble(int eps, unsigned max_degree);

  int eps() const noexcept { return eps_; }
  unsigned max_degree() const noexcept { return static_cast<unsigned>(ops_.polys.size()) - 1; }
  const Poly<Rat>& p(unsigned k) const;
  const Rat& norm(unsigned k) const;
  /// c_k = mu_eps(x^k) for k <= 2 * max_degree.
  const std::vector<Rat>& moments() const noexcept { return moments_; }

 private:
  int eps_;
  std::vector<Rat> moments_;
  MonicOPSeq<Rat> ops_;
};

/// Shared, lazily grown ensembles; safe to call from several threads.
std::shared_ptr<const Ensemble> dual_hahn(int eps, unsigned max_degree);

/// det(p_{n+j-1}(x_i)) / det(x_i^{j-1}) for the eps ensemble. Coincident points
/// are allowed: repeated rows are replaced by successive Taylor coefficients
/// in both determinants, which gives the limit value.
Rat schur_type_P(int eps, unsigned n, const std::vector<Rat>& points);

enum class Route { cd, wronskian, sumsq, schur };

Route parse_route(std::string_view name);

/// C_s^{n,eps}(points), s = points.size() <= n, normalized so that
/// C_0 = 1. Routes cd, wronskian and sumsq need distinct points; the schur
/// route is polynomial in the points and accepts coincident ones.
Rat correlation_eval(int eps, unsigned n, const std::vector<Rat>& points, Route route);

/// Both sides of the Hankel/correlation decomposition with the Lambert part
/// of nu_eps cut off at atoms k <= atoms (weights w_k(q) at -k^2):
///   det(nu Hankel, m x m)  versus
///   prod ||p||^2 sum_s sum_{k_1>..>k_s} prod w_{k_i} Delta(-k^2)^2 C_s^{m,eps}(-k^2).
struct HankelCorrelationSides {
  core::QSeries lhs;
  core::QSeries rhs;
};
HankelCorrelationSides hcl_sides(int eps, unsigned m, unsigned atoms, int q_order);

}  // namespace ellipsum::orthopoly

#endif  // ELLIPSUM_ORTHOPOLY_HPP
