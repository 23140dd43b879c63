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
#include <cmath>
#include <complex>
#include <numbers>

#include "ellipsum/error.hpp"
#include "internal.hpp"

namespace ellipsum::identities {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

// (a; p)_terms
cplx poch(cplx a, double p, unsigned terms) {
  cplx r = 1;
  double pk = 1;
  for (unsigned k = 0; k < terms; ++k, pk *= p) r *= 1.0 - a * pk;
  return r;
}

cplx theta(cplx x, double p, unsigned terms) { return poch(x, p, terms) * poch(p / x, p, terms); }

void check_numeric(double h, unsigned terms) {
  if (!(h >= 0.5 && h <= 2.0)) throw Error(ErrorCode::UnsupportedRange, "h must lie in [0.5, 2]");
  if (terms < 10 || terms > 2000) throw Error(ErrorCode::UnsupportedRange, "terms must lie in [10, 2000]");
}

struct Sides {
  cplx lhs, rhs;
};

Sides mtt_sides(double h, double x, unsigned terms) {
  const double p = std::exp(-2 * pi / h);
  const double big_p = std::exp(-2 * pi * h);
  const cplx i(0, 1);
  const cplx lhs = theta(std::exp(2 * pi * i * x), p, terms);
  const cplx rhs = -i * std::sqrt(h) * std::exp(-pi / 4 * (h - 1 / h)) * poch(big_p, big_p, terms) /
                   poch(p, p, terms) * std::exp(pi * x * (i + h * (1 - x))) *
                   theta(std::exp(-2 * pi * h * x), big_p, terms);
  return {lhs, rhs};
}

Sides mts_sides(double h, unsigned terms) {
  const double q = std::exp(-2 * pi / h);
  const cplx tri = poch(q * q, q * q, terms) / poch(q, q * q, terms);
  const double r = -std::exp(-pi * h);
  const cplx box_r = poch(r * r, r * r, terms) * std::pow(poch(-r, r * r, terms), 2);
  return {tri, std::sqrt(h) / 2 * std::exp(pi / (4 * h)) * box_r};
}

std::string show(cplx z) { return format_residual(z.real()) + (z.imag() < 0 ? "" : "+") + format_residual(z.imag()) + "i"; }

}  // namespace

double mtt_residual(double h, double x, unsigned terms) {
  check_numeric(h, terms);
  const auto s = mtt_sides(h, x, terms);
  return std::abs(s.lhs - s.rhs);
}

double mts_residual(double h, unsigned terms) {
  check_numeric(h, terms);
  const auto s = mts_sides(h, terms);
  return std::abs(s.lhs - s.rhs);
}

namespace detail {

std::vector<VerifyReport> run_numeric_row(std::string_view tag, const json& p) {
  const double h = get_double(p, "h");
  const long terms_l = get_long(p, "terms");
  const double tol = get_double(p, "tol");
  if (terms_l < 10 || terms_l > 2000) throw Error(ErrorCode::UnsupportedRange, "terms must lie in [10, 2000]");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidParams, "tol must be positive");
  const auto terms = static_cast<unsigned>(terms_l);
  check_numeric(h, terms);
  VerifyReport r;
  r.id = std::string(tag);
  Sides s;
  if (tag == "mtt_numeric") {
    const double x = get_double(p, "x");
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidParams, "x must be finite");
    s = mtt_sides(h, x, terms);
    r.params = {{"h", h}, {"x", x}, {"terms", terms_l}, {"tol", tol}};
  } else if (tag == "mts_numeric") {
    s = mts_sides(h, terms);
    r.params = {{"h", h}, {"terms", terms_l}, {"tol", tol}};
  } else {
    throw Error(ErrorCode::UnknownIdentity, "not a numeric identity: " + r.id);
  }
  const double res = std::abs(s.lhs - s.rhs);
  r.checked_upto = terms_l;
  r.residual = res;
  r.pass = res < tol;
  if (!r.pass) r.first_discrepancy = Discrepancy{terms_l, show(s.lhs), show(s.rhs)};
  return {r};
}

}  // namespace detail

}  // namespace ellipsum::identities
