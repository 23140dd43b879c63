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
// Acceptance run: one line per criterion. Usage: acceptance <path to ellipsum_cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellipsum/identities.hpp"
#include "ellipsum/matrix.hpp"
#include "ellipsum/oracle.hpp"
#include "ellipsum/orthopoly.hpp"

using namespace ellipsum;
using core::QSeries;
using nlohmann::ordered_json;

namespace {

enum class Outcome { pass, fail, finding };

struct Result {
  Outcome outcome = Outcome::pass;
  std::string detail;

  void fail(const std::string& what) {
    if (outcome == Outcome::pass || outcome == Outcome::finding) outcome = Outcome::fail;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void finding(const std::string& what) {
    if (outcome == Outcome::pass) outcome = Outcome::finding;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

QSeries box_oracle(unsigned k, int order) {
  return series_pow(oracle::base_series(oracle::RepKind::squares, order), k);
}

void expect_reports(Result& res, std::string_view tag, const ordered_json& params) {
  for (const auto& r : identities::verify(tag, params)) {
    if (!r.pass) res.fail(identities::to_json(r).dump());
  }
}

void expect_counts(Result& res, std::string_view tag, unsigned m, long nmax) {
  const auto vals = identities::formula_counts(tag, m, nmax);
  const auto kind = identities::count_tag_is_squares(tag) ? oracle::RepKind::squares : oracle::RepKind::triangles;
  const auto ref = oracle::rep_counts(kind, identities::count_tag_summands(tag, m), static_cast<int>(nmax));
  for (long n = 1; n <= nmax; ++n) {
    if (vals[static_cast<std::size_t>(n)] != Rat(ref[static_cast<std::size_t>(n)])) {
      res.fail(std::string(tag) + " m=" + std::to_string(m) + " differs at n=" + std::to_string(n));
      return;
    }
  }
}

void expect_series(Result& res, const std::string& what, const QSeries& a, const QSeries& b) {
  const int at = first_difference(a, b);
  if (at >= 0) res.fail(what + " differs at u^" + std::to_string(at));
}

Rat random_rat(std::mt19937_64& rng) {
  return ratio(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
}

linalg::RatMatrix random_skew(std::mt19937_64& rng, std::size_t n) {
  linalg::RatMatrix a(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = random_rat(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

bool run_command(const std::string& cmd, std::string& out, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return false;
  std::array<char, 65536> buf{};
  out.clear();
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return true;
}

Result c1() {
  Result res;
  using oracle::ClassicalId;
  for (const auto id : {ClassicalId::s2, ClassicalId::s4, ClassicalId::s8, ClassicalId::t2, ClassicalId::t4,
                        ClassicalId::t8}) {
    const auto ref = oracle::rep_counts(oracle::classical_kind(id), oracle::classical_summands(id), 1000);
    for (long n = 1; n <= 1000; ++n) {
      if (oracle::divisor_count(id, n) != ref[static_cast<std::size_t>(n)]) {
        res.fail("classical formula differs at n=" + std::to_string(n));
        break;
      }
    }
  }
  return res;
}

Result c2() {
  Result res;
  for (const char* tag : {"l2", "l4", "l8", "jl", "jq", "sq_split"}) expect_reports(res, tag, {{"order", 400}});
  return res;
}

Result c3() {
  Result res;
  for (int eps : {0, 1})
    for (unsigned m = 1; m <= 3; ++m) {
      const unsigned k = eps == 0 ? 4 * m * m : 4 * m * (m + 1);
      expect_series(res, "mhd eps=" + std::to_string(eps) + " m=" + std::to_string(m),
                    identities::mhd_series(eps, m, 200), box_oracle(k, 200));
    }
  return res;
}

Result c4() {
  Result res;
  for (const char* tag : {"mt_sq", "mt_oct", "sst_sq", "sst_oct"})
    for (unsigned m = 1; m <= 3; ++m) expect_counts(res, tag, m, 100);
  expect_counts(res, "milne16", 1, 100);
  const auto a = identities::formula_counts("milne16", 1, 100), b = identities::formula_counts("mt_sq", 2, 100);
  for (std::size_t n = 1; n <= 100; ++n)
    if (a[n] != b[n]) {
      res.fail("milne16 and mt_sq(m=2) differ at n=" + std::to_string(n));
      break;
    }
  return res;
}

Result c5() {
  Result res;
  for (int eps : {0, 1})
    for (unsigned m = 1; m <= 2; ++m) {
      const unsigned k = eps == 0 ? 4 * m * m : 4 * m * (m + 1);
      expect_series(res, "qss eps=" + std::to_string(eps) + " m=" + std::to_string(m),
                    identities::qss_series(eps, m, 100), box_oracle(k, 100));
    }
  return res;
}

Result c6() {
  Result res;
  for (unsigned m = 1; m <= 2; ++m) {
    expect_counts(res, "kmt1", m, 100);
    expect_counts(res, "kmt2", m, 100);
    expect_counts(res, "hti", m, 100);
  }
  for (unsigned m = 1; m <= 3; ++m) expect_counts(res, "gm", m, 200);
  return res;
}

Result c7() {
  Result res;
  const auto h1 = identities::formula_counts("hsf", 1, 500);
  for (long n = 1; n <= 500; ++n)
    if (h1[static_cast<std::size_t>(n)] != Rat(oracle::divisor_count(oracle::ClassicalId::s2, n))) {
      res.finding("hsf m=1 differs from the two-squares formula at n=" + std::to_string(n));
      break;
    }
  for (unsigned m = 2; m <= 3; ++m) {
    for (const auto& r : identities::verify("hsf", {{"m", m}, {"nmax", 100}})) {
      if (!r.pass) res.finding(identities::to_json(r).dump());
    }
  }
  return res;
}

Result c8() {
  Result res;
  for (const char* tag : {"eep", "oep", "ep", "op"}) expect_reports(res, tag, {{"order", 40}});
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    linalg::RatMatrix a(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rat(rng);
    const auto b = random_skew(rng, n);
    linalg::RatMatrix m(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j) - a(j, i) + b(i, j);
    if (linalg::pfaffian_sum_expansion(a, b) != linalg::pfaffian(m)) res.fail("pfaffian sum expansion, trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 3 : 5;
    const auto a = random_skew(rng, n);
    auto shifted = a;
    std::vector<Rat> v(n);
    for (auto& x : v) x = random_rat(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) shifted(i, j) += v[i] - v[j];
    if (linalg::pfaffian(shifted) != linalg::pfaffian(a)) res.fail("odd pfaffian shift invariance, trial " + std::to_string(trial));
  }
  expect_reports(res, "spe", {{"trials", 20}, {"mmax", 5}, {"seed", 1}});
  return res;
}

Result c9() {
  Result res;
  for (const char* tag : {"dfe_even", "dfe_odd", "mdt_even", "mdt_odd"}) expect_reports(res, tag, {{"order", 40}});
  return res;
}

Result c10() {
  Result res;
  expect_reports(res, "en", {{"m", 4}});
  expect_reports(res, "pqn", {{"k", {0, 1, 2}}, {"order", 60}});
  std::mt19937_64 rng(20260102);
  for (int set = 0; set < 20; ++set) {
    const int eps = set % 2;
    const unsigned n = 2 + static_cast<unsigned>(set % 3);
    std::vector<Rat> pts;
    while (pts.size() < 2) {
      const Rat x = random_rat(rng);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    for (std::size_t s = 1; s <= 2; ++s) {
      const std::vector<Rat> p(pts.begin(), pts.begin() + static_cast<long>(s));
      const Rat ref = orthopoly::correlation_eval(eps, n, p, orthopoly::Route::cd);
      for (const auto route : {orthopoly::Route::wronskian, orthopoly::Route::sumsq, orthopoly::Route::schur}) {
        if (orthopoly::correlation_eval(eps, n, p, route) != ref) res.fail("correlation routes disagree, set " + std::to_string(set));
      }
    }
  }
  for (int eps : {0, 1})
    for (unsigned m = 1; m <= 2; ++m) {
      const auto sides = orthopoly::hcl_sides(eps, m, 20, 20);
      expect_series(res, "hcl eps=" + std::to_string(eps) + " m=" + std::to_string(m), sides.lhs, sides.rhs);
    }
  return res;
}

Result c11() {
  Result res;
  for (int eps : {0, 1})
    for (unsigned m = 1; m <= 2; ++m)
      expect_series(res, "ot vs mhd eps=" + std::to_string(eps) + " m=" + std::to_string(m),
                    identities::ot_series(eps, m, 100), identities::mhd_series(eps, m, 100));
  expect_reports(res, "ot_sq", {{"m", {1, 2}}, {"order", 100}});
  expect_reports(res, "ot_oct", {{"m", {1, 2}}, {"order", 100}});
  expect_reports(res, "oe_plus", {{"k", {1, 2, 3, 4}}, {"order", 200}});
  expect_reports(res, "oe_minus", {{"k", {1, 2, 3, 4}}, {"order", 200}});
  return res;
}

Result c12() {
  Result res;
  constexpr double tol = 1e-9;
  constexpr unsigned terms = 60;
  for (double h : {0.7, 1.0, 1.3}) {
    const double a = identities::mts_residual(h, terms);
    if (!(a < tol)) res.fail("mts residual " + identities::format_residual(a) + " at h=" + std::to_string(h));
    for (double x : {0.3, 0.5}) {
      const double b = identities::mtt_residual(h, x, terms);
      if (!(b < tol)) res.fail("mtt residual " + identities::format_residual(b) + " at h=" + std::to_string(h));
    }
  }
  return res;
}

Result c13(const std::string& cli) {
  Result res;
  std::string one, eight;
  int s1 = 0, s8 = 0;
  const std::string base = "'" + cli + "' verify '*' --format json --jobs ";
  if (!run_command(base + "1", one, s1) || !run_command(base + "8", eight, s8)) {
    res.fail("could not run " + cli);
    return res;
  }
  if (one.size() < 1000) res.fail("catalog run produced only " + std::to_string(one.size()) + " bytes");
  if (one != eight) res.fail("outputs differ between --jobs 1 and --jobs 8");
  if (s1 != s8) res.fail("exit status differs between --jobs 1 and --jobs 8");
  if (!ordered_json::accept(one)) res.fail("output is not valid JSON");
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <ellipsum_cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "classical divisor sums vs oracle, n <= 1000", 5, c1},
      {2, "Lambert forms to q-order 400", 10, c2},
      {3, "Hankel determinant forms, m <= 3, q-order 200", 60, c3},
      {4, "Schur and correlation count formulas, n <= 100", 120, c4},
      {5, "Schur Q-polynomial forms, m <= 2, q-order 100", 120, c5},
      {6, "triangle identities", 120, c6},
      {7, "2m^2 squares via Schur-type polynomials", 120, c7},
      {8, "pfaffian identities", 120, c8},
      {9, "multivariable expansions to u-order 40", 120, c9},
      {10, "orthogonal-polynomial layer", 120, c10},
      {11, "Eisenstein series forms", 120, c11},
      {12, "numeric modular transformations, tol 1e-9, 60 terms", 10, c12},
      {13, "determinism of --jobs 1 vs --jobs 8", 600, [&] { return c13(cli); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) res.fail("took longer than the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    const char* word = res.outcome == Outcome::pass ? "PASS" : res.outcome == Outcome::finding ? "FINDING" : "FAIL";
    if (res.outcome == Outcome::fail) ++failures;
    std::printf("%-7s %2d  %-52s %7.2f s", word, c.id, c.name, secs);
    if (!res.detail.empty()) std::printf("  %s", res.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
