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
#include <set>

#include "internal.hpp"

namespace ellipsum::identities {

namespace {

using json = nlohmann::ordered_json;

bool is_list_valued(const std::string& name, const json& v) {
  if (!v.is_array()) return false;
  if (name == "c") return false;
  if (name == "points") return !v.empty() && v.front().is_array();
  return true;
}

enum class Group { count, series, pfaffian, appendix, numeric };

Group group_of(std::string_view tag) {
  static const std::set<std::string_view> counts = {
      "s2", "s4", "s8", "t2", "t4", "t8", "kmt1", "kmt2", "gm", "hti", "milne16",
      "sst_sq", "sst_oct", "mt_sq", "mt_oct", "hsf"};
  static const std::set<std::string_view> pfaff = {"spe",     "eep",      "oep",     "ep",     "op",
                                                    "dfe_even", "dfe_odd", "mdt_even", "mdt_odd", "sep"};
  static const std::set<std::string_view> appendix = {"ot_sq", "ot_oct", "oe_plus", "oe_minus"};
  if (counts.count(tag)) return Group::count;
  if (pfaff.count(tag)) return Group::pfaffian;
  if (appendix.count(tag)) return Group::appendix;
  if (tag == "mtt_numeric" || tag == "mts_numeric") return Group::numeric;
  return Group::series;
}

}  // namespace

std::vector<nlohmann::ordered_json> plan(std::string_view tag, const nlohmann::ordered_json& overrides) {
  const CatalogRow& row = catalog_row(tag);
  if (!overrides.is_null() && !overrides.is_object()) {
    throw Error(ErrorCode::InvalidParams, "parameters must be a JSON object");
  }
  if (overrides.is_object()) {
    for (const auto& [key, value] : overrides.items()) {
      if (std::find(row.params.begin(), row.params.end(), key) == row.params.end()) {
        throw Error(ErrorCode::InvalidParams, row.tag + " does not take parameter '" + key + "'");
      }
    }
  }
  std::vector<json> jobs{json::object()};
  for (const auto& name : row.params) {
    const json& v = overrides.is_object() && overrides.contains(name) ? overrides.at(name) : row.defaults.at(name);
    if (is_list_valued(name, v) && v.empty()) throw Error(ErrorCode::InvalidParams, "empty list for '" + name + "'");
    std::vector<json> next;
    for (const auto& job : jobs) {
      if (is_list_valued(name, v)) {
        for (const auto& e : v) {
          json j = job;
          j[name] = e;
          next.push_back(std::move(j));
        }
      } else {
        json j = job;
        j[name] = v;
        next.push_back(std::move(j));
      }
    }
    jobs = std::move(next);
  }
  return jobs;
}

std::vector<VerifyReport> run_job(std::string_view tag, const nlohmann::ordered_json& resolved) {
  const CatalogRow& row = catalog_row(tag);
  for (const auto& name : row.params) {
    if (!resolved.contains(name)) throw Error(ErrorCode::InvalidParams, "missing parameter '" + name + "'");
    if (is_list_valued(name, resolved.at(name))) {
      throw Error(ErrorCode::InvalidParams, "parameter '" + name + "' must be resolved by plan()");
    }
  }
  switch (group_of(tag)) {
    case Group::count: return detail::run_count_row(tag, resolved);
    case Group::series: return detail::run_series_row(tag, resolved);
    case Group::pfaffian: return detail::run_pfaffian_row(tag, resolved);
    case Group::appendix: return detail::run_appendix_row(tag, resolved);
    case Group::numeric: return detail::run_numeric_row(tag, resolved);
  }
  return {};
}

std::vector<VerifyReport> verify(std::string_view tag, const nlohmann::ordered_json& params) {
  std::vector<VerifyReport> out;
  for (const auto& job : plan(tag, params)) {
    auto part = run_job(tag, job);
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ellipsum::identities
