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
#include <cstdio>
#include <cstdlib>
#include <set>

#include "internal.hpp"

namespace ellipsum::identities {

std::string format_residual(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["checked_upto"] = r.checked_upto;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.first_discrepancy) {
    j["first_discrepancy"] = {{"at", r.first_discrepancy->at},
                              {"lhs", r.first_discrepancy->lhs},
                              {"rhs", r.first_discrepancy->rhs}};
  } else {
    j["first_discrepancy"] = nullptr;
  }
  // Round-trips through the 15-digit text so the dump shows those digits.
  if (r.residual) j["residual"] = std::strtod(format_residual(*r.residual).c_str(), nullptr);
  return j;
}

}  // namespace ellipsum::identities

namespace ellipsum::identities::detail {

namespace {

Error bad_param(const char* key, const std::string& why) {
  return Error(ErrorCode::InvalidParams, std::string("parameter '") + key + "': " + why);
}

Rat rat_of(const json& v, const char* key) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw bad_param(key, "expected an integer or a \"p/q\" string");
}

}  // namespace

long get_long(const json& p, const char* key) {
  if (!p.contains(key)) throw bad_param(key, "missing");
  const auto& v = p.at(key);
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    const Rat r = parse_rat(v.get<std::string>());
    if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  }
  throw bad_param(key, "expected an integer");
}

double get_double(const json& p, const char* key) {
  if (!p.contains(key)) throw bad_param(key, "missing");
  const auto& v = p.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (end != s.c_str() && *end == '\0') return d;
  }
  throw bad_param(key, "expected a number");
}

std::vector<Rat> get_rats(const json& p, const char* key) {
  if (!p.contains(key)) throw bad_param(key, "missing");
  const auto& v = p.at(key);
  if (!v.is_array()) throw bad_param(key, "expected a list");
  std::vector<Rat> out;
  for (const auto& e : v) out.push_back(rat_of(e, key));
  return out;
}

json rats_to_json(const std::vector<Rat>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

void require_range(const char* what, long value, long lo, long hi) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::UnsupportedRange, std::string(what) + " = " + std::to_string(value) + " outside [" +
                                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

VerifyReport compare_series(std::string id, json params, const core::QSeries& lhs, const core::QSeries& rhs,
                            bool q_units) {
  VerifyReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  const int order = std::min(lhs.order(), rhs.order());
  r.checked_upto = q_units ? order / 2 : order;
  const int step = q_units ? 2 : 1;
  const int last = q_units ? 2 * static_cast<int>(r.checked_upto) : order;
  r.pass = true;
  for (int e = 0; e <= last; e += step) {
    if (lhs[e] != rhs[e]) {
      r.pass = false;
      r.first_discrepancy = Discrepancy{q_units ? e / 2 : e, to_string(lhs[e]), to_string(rhs[e])};
      break;
    }
  }
  // A pure q-identity must not hide a mismatch at an odd u-exponent.
  if (r.pass && q_units) {
    for (int e = 1; e <= last; e += 2) {
      if (lhs[e] != rhs[e]) throw Error(ErrorCode::InvalidParams, r.id + ": odd u-exponent in a q-series check");
    }
  }
  return r;
}

VerifyReport compare_values(std::string id, json params, const std::vector<Rat>& lhs, const std::vector<Rat>& rhs,
                            long from, long to) {
  VerifyReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.checked_upto = to;
  r.pass = true;
  for (long n = from; n <= to; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (lhs.at(i) != rhs.at(i)) {
      r.pass = false;
      r.first_discrepancy = Discrepancy{n, to_string(lhs[i]), to_string(rhs[i])};
      break;
    }
  }
  return r;
}

VerifyReport exact_report(std::string id, json params, long cases, bool pass, long at, const Rat& lhs,
                          const Rat& rhs) {
  VerifyReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.checked_upto = cases;
  r.pass = pass;
  if (!pass) r.first_discrepancy = Discrepancy{at, to_string(lhs), to_string(rhs)};
  return r;
}

void check_points(const std::vector<Rat>& xs, std::size_t min_size, std::size_t max_size) {
  if (xs.size() < min_size || xs.size() > max_size) {
    throw Error(ErrorCode::InvalidPoints, "expected between " + std::to_string(min_size) + " and " +
                                              std::to_string(max_size) + " points, got " +
                                              std::to_string(xs.size()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0) throw Error(ErrorCode::InvalidPoints, "zero point");
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) throw Error(ErrorCode::InvalidPoints, "repeated point " + to_string(xs[i]));
      if (xs[i] == -xs[j]) throw Error(ErrorCode::InvalidPoints, "antipodal pair " + to_string(xs[i]));
    }
  }
}

void for_each_decreasing(std::size_t s, long lo, long budget, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> ks;
  const std::function<void(long, long)> rec = [&](long below, long left) {
    if (ks.size() == s) {
      f(ks);
      return;
    }
    const long slots = static_cast<long>(s - ks.size());
    // The remaining entries are at least lo, lo+1, ...; keep room for them.
    for (long k = lo + slots - 1; k < below; ++k) {
      long need = 0;
      for (long t = 0; t < slots; ++t) need += lo + t;
      need += k - (lo + slots - 1);
      if (need > left) break;
      ks.push_back(k);
      rec(k, left - k);
      ks.pop_back();
    }
  };
  rec(budget + 1, budget);
}

}  // namespace ellipsum::identities::detail
