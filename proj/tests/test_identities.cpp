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
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ellipsum/error.hpp"
#include "ellipsum/identities.hpp"
#include "ellipsum/oracle.hpp"
#include "ellipsum/orthopoly.hpp"

using namespace ellipsum;
using namespace ellipsum::identities;
using core::QSeries;
using nlohmann::ordered_json;

namespace {

bool all_pass(const std::vector<VerifyReport>& rs) {
  if (rs.empty()) return false;
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

// E(2k) from the Lambert sums over q^n n^{2k-1} / (1 -+ (-q)^n).
QSeries e_lambert_oracle(bool plus, unsigned k, int order) {
  const auto b = orthopoly::bernoulli(2 * k);
  std::vector<Rat> s(static_cast<std::size_t>(order) + 1, 0);
  for (long n = 1; n <= order; ++n) {
    const Rat w = pow(Rat(n), 2 * static_cast<long>(k) - 1);
    for (long l = 1; n * l <= order; ++l) {
      const int sign = plus ? sign_pow((l - 1) * (n + 1)) : sign_pow((l - 1) * n);
      s[static_cast<std::size_t>(n * l)] += sign * w;
    }
  }
  const long kk = k;
  const Rat con = (pow(Rat(4), kk) - 1) * abs(b[2 * k]) / kk;
  std::vector<Rat> e(s.size());
  const Rat pre = plus ? sign_pow(kk) * pow(Rat(2), 2 * kk - 3) : ratio(sign_pow(kk), 4);
  const int inner = plus ? sign_pow(kk + 1) : sign_pow(kk);
  for (std::size_t n = 0; n < e.size(); ++n) e[n] = pre * ((n == 0 ? con : Rat(0)) + 4 * inner * s[n]);
  return QSeries::from_q(e);
}

}  // namespace

TEST_CASE("catalog") {
  const auto& rows = catalog();
  CHECK(rows.size() >= 40);
  std::set<std::string> tags;
  for (const auto& r : rows) {
    CHECK(tags.insert(r.tag).second);
    CHECK(!r.anchor.empty());
    CHECK(std::set<std::string>{"series", "count", "exact", "numeric"}.count(r.kind) == 1);
  }
  for (const char* t : {"s2", "s4", "s8", "t2", "t4", "t8"}) CHECK(catalog_row(t).kind == "count");
  CHECK(catalog_row("hsf").ranges == "1 <= m <= 3, 1 <= n <= 500");
  CHECK_THROWS_AS(catalog_row("nope"), Error);
  CHECK(catalog_json().size() == rows.size());
  CHECK(catalog_json()[0].contains("ranges"));
}

TEST_CASE("glob matching") {
  CHECK(glob_match("mhd_*", "mhd_sq"));
  CHECK(glob_match("?4", "s4"));
  CHECK(!glob_match("?4", "s44"));
  CHECK(glob_match("*", ""));
  CHECK(match_tags("mhd_*") == std::vector<std::string>{"mhd_sq", "mhd_oct"});
  CHECK(match_tags("zz*").empty());
}

TEST_CASE("count formulas") {
  CHECK(count_via_formula("s2", 1, 5) == 8);
  CHECK(count_via_formula("hsf", 1, 5) == 8);
  CHECK(count_via_formula("mt_sq", 2, 1) == 32);
  CHECK(is_count_tag("gm"));
  CHECK(!is_count_tag("l4"));
  CHECK(count_tag_summands("mt_oct", 1) == 8);
  CHECK(count_tag_summands("gm", 3) == 6);
  CHECK(count_tag_is_squares("hsf"));
  CHECK(!count_tag_is_squares("kmt1"));
  const auto vals = formula_counts("t4", 1, 20);
  const auto oracle_vals = oracle::rep_counts(oracle::RepKind::triangles, 4, 20);
  for (long n = 1; n <= 20; ++n) CHECK(vals[static_cast<std::size_t>(n)] == Rat(oracle_vals[static_cast<std::size_t>(n)]));
  CHECK_THROWS_AS(formula_counts("hsf", 4, 10), Error);
}

TEST_CASE("closed eight-squares forms") {
  const auto r8 = oracle::rep_counts(oracle::RepKind::squares, 8, 30);
  const auto a = hsf_eight_squares_display(30), b = hsf_eight_squares_lambert(30);
  for (long n = 1; n <= 30; ++n) {
    CHECK(a[static_cast<std::size_t>(n)] == Rat(r8[static_cast<std::size_t>(n)]));
    CHECK(b[static_cast<std::size_t>(n)] == Rat(r8[static_cast<std::size_t>(n)]));
  }
}

TEST_CASE("polynomial coefficients A") {
  CHECK(ono_A(true, 1) == std::map<std::vector<int>, BigInt>{{{1}, 1}});
  CHECK(ono_A(false, 1) == std::map<std::vector<int>, BigInt>{{{3}, 1}});
  // x1 x2 (x2^2 - x1^2)^2
  CHECK(ono_A(true, 2) == std::map<std::vector<int>, BigInt>{{{1, 5}, 1}, {{3, 3}, -2}, {{5, 1}, 1}});
  CHECK_THROWS_AS(ono_A(true, 0), Error);
}

TEST_CASE("Eisenstein-type series E") {
  CHECK(ono_E(true, 2, 4).q_coeff(0) == ratio(-1, 4));
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(first_difference(ono_E(true, 2 * k, 60), e_lambert_oracle(true, k, 60)) == -1);
    CHECK(first_difference(ono_E(false, 2 * k, 60), e_lambert_oracle(false, k, 60)) == -1);
  }
  CHECK_THROWS_AS(ono_E(true, 3, 10), Error);
}

TEST_CASE("series forms of powers of the theta series") {
  for (int eps : {0, 1}) {
    for (unsigned m = 1; m <= 2; ++m) {
      const unsigned k = eps == 0 ? 4 * m * m : 4 * m * (m + 1);
      const QSeries target = series_pow(oracle::base_series(oracle::RepKind::squares, 60), k);
      CHECK(first_difference(box_power(k, 60), target) == -1);
      CHECK(first_difference(mhd_series(eps, m, 60), target) == -1);
      CHECK(first_difference(opc_series(eps, m, 60), target) == -1);
      CHECK(first_difference(gcc_series(eps, m, 60), target) == -1);
      CHECK(first_difference(qss_series(eps, m, 60), target) == -1);
      CHECK(first_difference(ot_series(eps, m, 60), target) == -1);
    }
  }
}

TEST_CASE("modular transformations in floating point") {
  CHECK(mts_residual(1.0, 40) < 1e-10);
  CHECK(mtt_residual(1.0, 0.3, 40) < 1e-10);
  CHECK(mtt_residual(1.3, 0.5, 60) < 1e-9);
  CHECK_THROWS_AS(mts_residual(5.0, 40), Error);
}

TEST_CASE("checks through the dispatcher") {
  CHECK(all_pass(verify("l4", ordered_json{{"order", 60}})));
  CHECK(all_pass(verify("jq", ordered_json{{"order", 400}})));
  CHECK(all_pass(verify("mdt_even", ordered_json{{"points", ordered_json::array({ordered_json::array({"2", "1"})})},
                                                  {"order", 40}})));
  CHECK(all_pass(verify("mhd_sq", ordered_json{{"m", 1}, {"order", 50}})));
  CHECK_THROWS_AS(verify("nope", ordered_json::object()), Error);
}

TEST_CASE("job planning") {
  CHECK(plan("mhd_sq", ordered_json::object()).size() == catalog_row("mhd_sq").defaults["m"].size());
  const auto jobs = plan("opc", ordered_json{{"m", ordered_json::array({1, 2})}, {"order", 20}});
  REQUIRE(jobs.size() == 4);
  CHECK(jobs[0]["eps"] == 0);
  CHECK(jobs[0]["m"] == 1);
  CHECK(jobs[1]["m"] == 2);
  CHECK(jobs[3]["eps"] == 1);
  CHECK(jobs[3]["order"] == 20);
  CHECK_THROWS_AS(plan("l4", ordered_json{{"bogus", 1}}), Error);
  for (const auto& job : jobs) CHECK(all_pass(run_job("opc", job)));
}

TEST_CASE("report schema") {
  const auto rs = verify("l4", ordered_json{{"order", 10}});
  REQUIRE(rs.size() == 1);
  const auto j = to_json(rs[0]);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"id", "params", "checked_upto", "status", "first_discrepancy"});
  CHECK(j["status"] == "pass");
  CHECK(j["first_discrepancy"].is_null());
  CHECK(j["checked_upto"] == 10);

  const auto bad = verify("hsf", ordered_json{{"m", 3}, {"nmax", 10}});
  bool failed = false;
  for (const auto& r : bad) {
    if (r.pass) continue;
    failed = true;
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->at == 3);
  }
  CHECK(failed);

  const auto num = verify("mts_numeric", ordered_json::object());
  REQUIRE(!num.empty());
  CHECK(to_json(num[0]).contains("residual"));
  CHECK(format_residual(0.5) == "0.5");
}
