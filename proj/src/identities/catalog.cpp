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
#include <vector>

#include "internal.hpp"

namespace ellipsum::identities {

namespace {

using json = nlohmann::ordered_json;

json points(std::initializer_list<std::initializer_list<int>> vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(json(v));
  return a;
}

std::vector<CatalogRow> build() {
  std::vector<CatalogRow> rows;
  const auto add = [&](std::string tag, std::string kind, std::string anchor, std::string unit,
                       std::vector<std::string> params, json defaults, std::string ranges) {
    rows.push_back(CatalogRow{std::move(tag), std::move(kind), std::move(anchor), std::move(unit), std::move(params),
                              std::move(defaults), std::move(ranges)});
  };
  const json classical = {{"nmax", 1000}};
  add("s2", "count", "Gauss two squares divisor sum", "n", {"nmax"}, classical, "1 <= n <= 20000");
  add("s4", "count", "Jacobi four squares divisor sum (with the twisted form)", "n", {"nmax"}, classical,
      "1 <= n <= 20000");
  add("s8", "count", "Jacobi eight squares divisor sum", "n", {"nmax"}, classical, "1 <= n <= 20000");
  add("t2", "count", "Legendre two triangles divisor sum", "n", {"nmax"}, classical, "1 <= n <= 20000");
  add("t4", "count", "Legendre four triangles divisor sum", "n", {"nmax"}, classical, "1 <= n <= 20000");
  add("t8", "count", "Legendre eight triangles divisor sum", "n", {"nmax"}, classical, "1 <= n <= 20000");

  const json lambert = {{"order", 400}};
  add("l2", "series", "Lambert series for two squares", "q", {"order"}, lambert, "1 <= order <= 4000");
  add("l4", "series", "Lambert series for four squares", "q", {"order"}, lambert, "1 <= order <= 4000");
  add("l8", "series", "Lambert series for eight squares", "q", {"order"}, lambert, "1 <= order <= 4000");
  add("jl", "series", "Lambert series for q tri(q^2)^4 box(q)^2", "q", {"order"}, lambert, "1 <= order <= 4000");
  add("jq", "series", "Jacobi quartic identity 16 q tri(q^2)^4 = box(q)^4 - box(-q)^4", "q", {"order"}, lambert,
      "1 <= order <= 4000");
  add("sq_split", "series", "box(-q^2)^2 = box(q) box(-q)", "q", {"order"}, lambert, "1 <= order <= 4000");

  add("kmt1", "count", "Kac-Wakimoto 4m^2 triangles", "n", {"m", "nmax"}, {{"m", {1, 2}}, {"nmax", 100}},
      "1 <= m <= 2, 1 <= n <= 400");
  add("kmt2", "count", "Kac-Wakimoto 4m(m+1) triangles", "n", {"m", "nmax"}, {{"m", {1, 2}}, {"nmax", 100}},
      "1 <= m <= 2, 1 <= n <= 400");
  add("gm", "count", "Getz-Mahlburg 2m triangles", "n", {"m", "nmax"}, {{"m", {1, 2, 3}}, {"nmax", 200}},
      "1 <= m <= 3, 1 <= n <= 400");
  add("hti", "count", "2m^2 triangles identity", "n", {"m", "nmax"}, {{"m", {1, 2}}, {"nmax", 100}},
      "1 <= m <= 3, 1 <= n <= 200");
  add("milne16", "count", "Milne sixteen squares formula", "n", {"nmax"}, {{"nmax", 100}}, "1 <= n <= 400");

  add("mhd_sq", "series", "Milne Hankel determinant for 4m^2 squares", "q", {"m", "order"},
      {{"m", {1, 2, 3}}, {"order", 200}}, "1 <= m <= 4, 1 <= order <= 400");
  add("mhd_oct", "series", "Milne Hankel determinant for 4m(m+1) squares", "q", {"m", "order"},
      {{"m", {1, 2, 3}}, {"order", 200}}, "1 <= m <= 4, 1 <= order <= 400");
  add("opc", "series", "Milne formulas as products of q-dependent norms", "q", {"eps", "m", "order"},
      {{"eps", {0, 1}}, {"m", {1, 2, 3}}, {"order", 100}}, "eps in {0,1}, 1 <= m <= 4, 1 <= order <= 200");
  add("pqn", "series", "norms of the q-dependent orthogonal polynomials", "q", {"eps", "k", "order"},
      {{"eps", {0, 1}}, {"k", {0, 1, 2}}, {"order", 60}}, "eps in {0,1}, 0 <= k <= 3, 1 <= order <= 200");
  add("en", "exact", "dual Hahn norm products at q = 0", "m", {"m"}, {{"m", 4}}, "1 <= m <= 8");

  add("gcc_sq", "series", "correlation-function expansion for 4m^2 squares", "q", {"m", "order"},
      {{"m", {1, 2}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 200");
  add("gcc_oct", "series", "correlation-function expansion for 4m(m+1) squares", "q", {"m", "order"},
      {{"m", {1, 2}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 200");
  add("sst_sq", "count", "4m^2 squares via correlation functions", "n", {"m", "nmax"},
      {{"m", {1, 2, 3}}, {"nmax", 100}}, "1 <= m <= 3, 1 <= n <= 200");
  add("sst_oct", "count", "4m(m+1) squares via correlation functions", "n", {"m", "nmax"},
      {{"m", {1, 2, 3}}, {"nmax", 100}}, "1 <= m <= 3, 1 <= n <= 200");
  add("mt_sq", "count", "Milne 4m^2 squares via Schur functions", "n", {"m", "nmax"},
      {{"m", {1, 2, 3}}, {"nmax", 100}}, "1 <= m <= 3, 1 <= n <= 200");
  add("mt_oct", "count", "Milne 4m(m+1) squares via Schur functions", "n", {"m", "nmax"},
      {{"m", {1, 2, 3}}, {"nmax", 100}}, "1 <= m <= 3, 1 <= n <= 200");
  add("qss_sq", "series", "4m^2 squares via Schur Q-polynomials at ones", "q", {"m", "order"},
      {{"m", {1, 2}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 200");
  add("qss_oct", "series", "4m(m+1) squares via Schur Q-polynomials at ones", "q", {"m", "order"},
      {{"m", {1, 2}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 200");
  add("hsf", "count", "2m^2 squares via Schur-type polynomials", "n", {"m", "nmax"},
      {{"m", {1, 2, 3}}, {"nmax", 100}}, "1 <= m <= 3, 1 <= n <= 500");

  add("spe", "exact", "Schur pfaffian of (x_i - x_j)/(x_i + x_j)", "cases", {"trials", "mmax", "seed"},
      {{"trials", 20}, {"mmax", 5}, {"seed", 1}}, "1 <= trials <= 1000, 1 <= mmax <= 8");
  add("eep", "series", "pfaffian of theta(x_j/x_i)/theta(-x_j/x_i)", "u", {"points", "order"},
      {{"points", points({{1, 2}, {2, 3, 5, 7}})}, {"order", 40}}, "even dimension 2..6, 1 <= order <= 120");
  add("oep", "series", "pfaffian of the theta log-derivative at -x_j/x_i", "u", {"points", "order"},
      {{"points", points({{1, 2, 3}, {2, 3, 5, 7, 11}})}, {"order", 40}}, "odd dimension 1..5, 1 <= order <= 120");
  add("ep", "series", "pfaffian of theta(x_j/x_i)/(x_j theta(q^(1/2) x_j/x_i))", "u", {"points", "order"},
      {{"points", points({{1, 2}, {2, 3, 5, 7}})}, {"order", 40}}, "even dimension 2..6, 1 <= order <= 120");
  add("op", "series", "pfaffian of the theta log-derivative at q^(1/2) x_i/x_j", "u", {"points", "order"},
      {{"points", points({{1, 2, 3}, {2, 3, 5}, {2, 3, 5, 7, 11}})}, {"order", 40}},
      "odd dimension 1..5, 1 <= order <= 120");
  add("dfe_even", "series", "multivariable Lambert series expansion, even dimension", "u", {"points", "order"},
      {{"points", points({{1, 2}, {2, 3, 5, 7}})}, {"order", 40}}, "even dimension 2..6, 1 <= order <= 80");
  add("dfe_odd", "series", "multivariable Lambert series expansion, odd dimension", "u", {"points", "order"},
      {{"points", points({{1, 2, 3}, {2, 3, 5, 7, 11}})}, {"order", 40}}, "odd dimension 1..5, 1 <= order <= 80");
  add("mdt_even", "series", "Schur Q-polynomial expansion of the theta product, even dimension", "u",
      {"points", "order"}, {{"points", points({{2, 1}, {2, 3, 5, 7}})}, {"order", 40}},
      "even dimension 2..6, 1 <= order <= 80");
  add("mdt_odd", "series", "Schur Q-polynomial expansion of the theta product, odd dimension", "u",
      {"points", "order"}, {{"points", points({{1, 2, 3}, {2, 3, 5}})}, {"order", 40}},
      "odd dimension 1..5, 1 <= order <= 80");
  add("sep", "exact", "pfaffian of (x_i-x_j)/(x_i+x_j) plus a finite Laurent perturbation", "k",
      {"points", "c"}, {{"points", points({{1, 2}, {1, 2, 3}, {2, 3, 5, 7}, {1, 2, 3, 5, 7}})},
                        {"c", {"1", "-1/2", "1/3"}}},
      "dimension 1..6, up to 6 perturbation coefficients");

  add("ot_sq", "series", "Ono 4m^2 squares via Eisenstein series (and its Hankel form)", "q", {"m", "order"},
      {{"m", {1, 2, 3}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 400");
  add("ot_oct", "series", "Ono 4m(m+1) squares via Eisenstein series (and its Hankel form)", "q", {"m", "order"},
      {{"m", {1, 2, 3}}, {"order", 100}}, "1 <= m <= 3, 1 <= order <= 400");
  add("oe_plus", "series", "divisor-sum identity behind E+", "q", {"k", "order"}, {{"k", {1, 2, 3, 4}}, {"order", 200}},
      "1 <= k <= 6, 1 <= order <= 2000");
  add("oe_minus", "series", "divisor-sum identity behind E-", "q", {"k", "order"},
      {{"k", {1, 2, 3, 4}}, {"order", 200}}, "1 <= k <= 6, 1 <= order <= 2000");

  add("mtt_numeric", "numeric", "modular transformation of theta (double precision)", "none",
      {"h", "x", "terms", "tol"}, {{"h", {0.7, 1.0, 1.3}}, {"x", 0.3}, {"terms", 60}, {"tol", 1e-9}},
      "0.5 <= h <= 2, 10 <= terms <= 2000");
  add("mts_numeric", "numeric", "modular transformation tri(e^(-2 pi/h)) vs box(-e^(-pi h))", "none",
      {"h", "terms", "tol"}, {{"h", {0.7, 1.0, 1.3}}, {"terms", 60}, {"tol", 1e-9}},
      "0.5 <= h <= 2, 10 <= terms <= 2000");
  return rows;
}

}  // namespace

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = build();
  return rows;
}

const CatalogRow& catalog_row(std::string_view tag) {
  for (const auto& r : catalog()) {
    if (r.tag == tag) return r;
  }
  throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(tag) + "'");
}

nlohmann::ordered_json catalog_json() {
  json rows = json::array();
  for (const auto& r : catalog()) {
    rows.push_back({{"id", r.tag},
                    {"kind", r.kind},
                    {"anchor", r.anchor},
                    {"order_unit", r.order_unit},
                    {"params", r.params},
                    {"defaults", r.defaults},
                    {"ranges", r.ranges}});
  }
  return rows;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  // Iterative wildcard match with single-star backtracking.
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> match_tags(std::string_view pattern) {
  std::vector<std::string> out;
  for (const auto& r : catalog()) {
    if (glob_match(pattern, r.tag)) out.push_back(r.tag);
  }
  return out;
}

}  // namespace ellipsum::identities
