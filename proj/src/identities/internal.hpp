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

// Shared helpers for the identity checks. Not installed.

#ifndef ELLIPSUM_SRC_IDENTITIES_INTERNAL_HPP
#define ELLIPSUM_SRC_IDENTITIES_INTERNAL_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ellipsum/error.hpp"
#include "ellipsum/identities.hpp"

namespace ellipsum::identities::detail {

using json = nlohmann::ordered_json;

long get_long(const json& p, const char* key);
double get_double(const json& p, const char* key);
std::vector<Rat> get_rats(const json& p, const char* key);
json rats_to_json(const std::vector<Rat>& xs);
void require_range(const char* what, long value, long lo, long hi);

/// Compares q-series (q_units) or u-series coefficient by coefficient up to the
/// smaller order.
VerifyReport compare_series(std::string id, json params, const core::QSeries& lhs, const core::QSeries& rhs,
                            bool q_units);
/// Compares entries from..to of two coefficient lists.
VerifyReport compare_values(std::string id, json params, const std::vector<Rat>& lhs, const std::vector<Rat>& rhs,
                            long from, long to);
VerifyReport exact_report(std::string id, json params, long cases, bool pass, long at, const Rat& lhs,
                          const Rat& rhs);

/// Rejects repeated, zero or antipodal points.
void check_points(const std::vector<Rat>& xs, std::size_t min_size, std::size_t max_size);

/// Enumerates l_1..l_s >= 1 with the given parities (1 odd, 0 even, -1 any)
/// and adds weight * prod sign(i, k_i, l_i) to acc[sum k_i l_i] for every
/// total weight <= acc.size() - 1.
template <typename SignFn>
void distribute_l(const std::vector<long>& ks, const std::vector<int>& parity, const SignFn& sign,
                  const Rat& weight, std::vector<Rat>& acc) {
  thread_local std::vector<long> total;
  thread_local std::vector<std::size_t> touched;
  if (total.size() < acc.size()) total.assign(acc.size(), 0);
  touched.clear();
  const long cap = static_cast<long>(acc.size()) - 1;
  struct Walker {
    const std::vector<long>& ks;
    const std::vector<int>& parity;
    const SignFn& sign;
    long cap;
    void run(std::size_t i, long used, int sg) const {
      if (i == ks.size()) {
        const auto w = static_cast<std::size_t>(used);
        if (total[w] == 0) touched.push_back(w);
        total[w] += sg;
        return;
      }
      const long k = ks[i];
      const long start = parity[i] == 0 ? 2 : 1;
      const long stride = parity[i] == -1 ? 1 : 2;
      for (long l = start; used + k * l <= cap; l += stride) run(i + 1, used + k * l, sg * sign(i, k, l));
    }
  };
  Walker{ks, parity, sign, cap}.run(0, 0, 1);
  for (const auto w : touched) {
    if (total[w] != 0) acc[w] += weight * total[w];
    total[w] = 0;
  }
}

/// Calls f on every strictly decreasing tuple k_1 > .. > k_s >= lo whose sum
/// is at most budget.
void for_each_decreasing(std::size_t s, long lo, long budget, const std::function<void(const std::vector<long>&)>& f);

std::vector<VerifyReport> run_count_row(std::string_view tag, const json& p);
std::vector<VerifyReport> run_series_row(std::string_view tag, const json& p);
std::vector<VerifyReport> run_pfaffian_row(std::string_view tag, const json& p);
std::vector<VerifyReport> run_appendix_row(std::string_view tag, const json& p);
std::vector<VerifyReport> run_numeric_row(std::string_view tag, const json& p);

}  // namespace ellipsum::identities::detail

#endif  // ELLIPSUM_SRC_IDENTITIES_INTERNAL_HPP
