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

#ifndef ELLIPSUM_IDENTITIES_HPP
#define ELLIPSUM_IDENTITIES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ellipsum/qseries.hpp"
#include "ellipsum/rational.hpp"

namespace ellipsum::identities {

struct Discrepancy {
  long at = 0;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity check. `checked_upto` is the q- or u-order for
/// series rows, the largest n for count rows and the number of cases for
/// exact rows (see the catalog's order unit).
struct VerifyReport {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  long checked_upto = 0;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  std::optional<double> residual;  // numeric rows only
};

nlohmann::ordered_json to_json(const VerifyReport& r);
/// Decimal with 15 significant digits.
std::string format_residual(double x);

struct CatalogRow {
  std::string tag;
  std::string kind;        // series | count | exact | numeric
  std::string anchor;      // short name of the formula being checked
  std::string order_unit;  // q, u, n, m, k, cases or none
  std::vector<std::string> params;  // accepted parameter names, in job order
  nlohmann::ordered_json defaults;
  std::string ranges;      // human-readable supported range
};

const std::vector<CatalogRow>& catalog();
/// Throws UnknownIdentity.
const CatalogRow& catalog_row(std::string_view tag);
nlohmann::ordered_json catalog_json();
/// Shell-style glob (* and ?) over catalog tags, in catalog order.
std::vector<std::string> match_tags(std::string_view pattern);
bool glob_match(std::string_view pattern, std::string_view text);

/// Runs one catalog row. Parameters not listed are taken from the row's
/// defaults; unknown parameter names raise InvalidParams. A row may emit
/// several reports (one per default point vector or sub-check).
std::vector<VerifyReport> verify(std::string_view tag, const nlohmann::ordered_json& params);

/// Resolves defaults and overrides into one scalar parameter object per job.
/// List-valued defaults (several m, point vectors, ...) expand in row order.
std::vector<nlohmann::ordered_json> plan(std::string_view tag, const nlohmann::ordered_json& overrides);
/// Runs one resolved job from plan().
std::vector<VerifyReport> run_job(std::string_view tag, const nlohmann::ordered_json& resolved);

// Count formulas ----------------------------------------------------------

bool is_count_tag(std::string_view tag);
/// Number of summands (squares or triangles) the formula counts for size m.
unsigned count_tag_summands(std::string_view tag, unsigned m);
bool count_tag_is_squares(std::string_view tag);
/// values[n] for n = 0..nmax as produced by the formula (n = 0 by the
/// trivial-term convention). Throws UnsupportedRange outside the catalog range.
std::vector<Rat> formula_counts(std::string_view tag, unsigned m, long nmax);
Rat count_via_formula(std::string_view tag, unsigned m, long n);

/// Closed eight-squares forms (m = 2, divisor and Lambert versions) and the
/// closed eighteen-squares form (m = 3) of the 2m^2 squares count, as
/// coefficient lists.
std::vector<Rat> hsf_eight_squares_display(long nmax);
std::vector<Rat> hsf_eight_squares_lambert(long nmax);
std::vector<Rat> hsf_eighteen_squares_display(long nmax);

// Series forms of the sums-of-squares generating function -----------------

core::QSeries box_power(unsigned k, int q_order);
core::QSeries mhd_series(int eps, unsigned m, int q_order);
core::QSeries opc_series(int eps, unsigned m, int q_order);
core::QSeries gcc_series(int eps, unsigned m, int q_order);
core::QSeries qss_series(int eps, unsigned m, int q_order);
core::QSeries ot_series(int eps, unsigned m, int q_order);

// Appendix objects ----------------------------------------------------------

/// Coefficients of prod x_i^{1 or 3} prod_{i<j} (x_j^2 - x_i^2)^2 (plus: 1, minus: 3).
std::map<std::vector<int>, BigInt> ono_A(bool plus, unsigned m);
/// E^{+}(2k) or E^{-}(2k) truncated at q-order N.
core::QSeries ono_E(bool plus, unsigned two_k, int q_order);

// Numeric modular transformation -----------------------------------------

/// |theta(e^{2 pi i x}; e^{-2 pi/h}) - (transformed side)| in double precision.
double mtt_residual(double h, double x, unsigned terms);
/// |tri(e^{-2 pi/h}) - sqrt(h)/2 e^{pi/(4h)} box(-e^{-pi h})|.
double mts_residual(double h, unsigned terms);

}  // namespace ellipsum::identities

#endif  // ELLIPSUM_IDENTITIES_HPP
