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

#ifndef ELLIPSUM_SYMFUN_HPP
#define ELLIPSUM_SYMFUN_HPP

#include <vector>

#include "ellipsum/rational.hpp"

namespace ellipsum::symfun {

/// Integer label mu in Z^m; entries may be negative.
using IntLabel = std::vector<long>;
using Partition = std::vector<long>;

/// det(x_j^{mu_i}) / prod_{i<j} (x_i - x_j). Points must be distinct, and
/// nonzero wherever a label entry is negative.
Rat s_mu_eval(const IntLabel& mu, const std::vector<Rat>& xs);

/// S_mu(1, ..., 1) = prod_{i<j} (mu_i - mu_j) / (j - i) for strictly
/// decreasing mu.
Rat s_at_ones(const IntLabel& mu);

/// Schur polynomial s_lambda(xs). Distinct points go through the
/// bialternant; otherwise the Jacobi-Trudi determinant in complete
/// homogeneous symmetric polynomials is used.
Rat schur_eval(const Partition& lambda, const std::vector<Rat>& xs);
Rat schur_jacobi_trudi(const Partition& lambda, const std::vector<Rat>& xs);

/// Q_lambda(x_1..x_n) through the alternating-sum expression
///   2^{m-k}/k! prod_{i<j} (x_i+x_j)/(x_i-x_j)
///   * sum_sigma sgn(sigma) prod_{i<=m} x_{sigma(i)}^{lambda_i}
///     prod_{i<=k} (x_{sigma(m+2i-1)} - x_{sigma(m+2i)})/(x_{sigma(m+2i-1)} + x_{sigma(m+2i)}),
/// k = floor((n-m)/2). Requires n <= 8.
Rat q_lambda_eval(const IntLabel& lambda, const std::vector<Rat>& xs);

enum class Parity { even, odd };

/// Q_{(k_1..k_m, -k_m..-k_1)} at 2n (even) or 2n+1 (odd) points all equal to
/// one, via the correlation functions of the dual Hahn ensembles.
Rat q_balanced_at_ones(const std::vector<long>& ks, unsigned n, Parity parity);

}  // namespace ellipsum::symfun

#endif  // ELLIPSUM_SYMFUN_HPP
