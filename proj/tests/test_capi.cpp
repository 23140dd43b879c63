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
#include <string>

#include "doctest.h"
#include "ellipsum/ellipsum.h"
#include "json.hpp"

using nlohmann::json;

namespace {

json take_json(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  ellipsum_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("catalog and tag matching") {
  char* out = nullptr;
  REQUIRE(ellipsum_catalog_json(&out) == ELLIPSUM_OK);
  const json cat = take_json(out);
  CHECK(cat.size() >= 40);
  CHECK(cat[0]["id"] == "s2");

  REQUIRE(ellipsum_match_tags("s?", &out) == ELLIPSUM_OK);
  CHECK(take_json(out) == json::array({"s2", "s4", "s8"}));
  CHECK(std::string(ellipsum_version()).size() > 0);
  CHECK(std::string(ellipsum_status_name(ELLIPSUM_E_RANGE_TOO_LARGE)).size() > 0);
}

TEST_CASE("verify and reports") {
  ellipsum_reports* reps = nullptr;
  REQUIRE(ellipsum_verify("s2", "{\"nmax\": 50}", &reps) == ELLIPSUM_OK);
  REQUIRE(ellipsum_reports_count(reps) == 1);
  CHECK(ellipsum_reports_all_pass(reps) == 1);
  char* out = nullptr;
  REQUIRE(ellipsum_reports_json(reps, 0, &out) == ELLIPSUM_OK);
  const json r = take_json(out);
  CHECK(r["id"] == "s2");
  CHECK(r["status"] == "pass");
  CHECK(r["checked_upto"] == 50);
  CHECK(ellipsum_reports_json(reps, 1, &out) != ELLIPSUM_OK);
  ellipsum_reports_free(reps);
  ellipsum_reports_free(nullptr);

  REQUIRE(ellipsum_verify("l4", nullptr, &reps) == ELLIPSUM_OK);
  CHECK(ellipsum_reports_all_pass(reps) == 1);
  ellipsum_reports_free(reps);
}

TEST_CASE("plan then run") {
  char* out = nullptr;
  REQUIRE(ellipsum_plan("mhd_sq", "{\"m\": [1, 2], \"order\": 30}", &out) == ELLIPSUM_OK);
  const json jobs = take_json(out);
  REQUIRE(jobs.size() == 2);
  for (const auto& job : jobs) {
    ellipsum_reports* reps = nullptr;
    REQUIRE(ellipsum_run_job("mhd_sq", job.dump().c_str(), &reps) == ELLIPSUM_OK);
    CHECK(ellipsum_reports_all_pass(reps) == 1);
    ellipsum_reports_free(reps);
  }
}

TEST_CASE("error codes") {
  ellipsum_reports* reps = nullptr;
  CHECK(ellipsum_verify("nope", nullptr, &reps) == ELLIPSUM_E_UNKNOWN_IDENTITY);
  CHECK(std::string(ellipsum_last_error()).find("nope") != std::string::npos);
  CHECK(ellipsum_verify("l4", "{\"order\": 0}", &reps) != ELLIPSUM_OK);
  CHECK(ellipsum_verify("l4", "{not json", &reps) == ELLIPSUM_E_INVALID_PARAMS);
  CHECK(ellipsum_verify("l4", "{\"bogus\": 1}", &reps) == ELLIPSUM_E_INVALID_PARAMS);
  CHECK(ellipsum_verify(nullptr, nullptr, &reps) == ELLIPSUM_E_NULL_ARGUMENT);
  CHECK(ellipsum_verify("l4", nullptr, nullptr) == ELLIPSUM_E_NULL_ARGUMENT);
  CHECK(ellipsum_catalog_json(nullptr) == ELLIPSUM_E_NULL_ARGUMENT);
  char* out = nullptr;
  CHECK(ellipsum_count_table("squares", 100, 10, nullptr, 1, &out) == ELLIPSUM_E_RANGE_TOO_LARGE);
  CHECK(ellipsum_count_table("squares", 4, 100000, nullptr, 1, &out) == ELLIPSUM_E_RANGE_TOO_LARGE);
  CHECK(ellipsum_count_table("cubes", 4, 10, nullptr, 1, &out) == ELLIPSUM_E_INVALID_PARAMS);
  CHECK(ellipsum_count_table("squares", 4, 10, "zz", 1, &out) == ELLIPSUM_E_UNKNOWN_IDENTITY);
  CHECK(ellipsum_count_table("squares", 4, 10, "l4", 1, &out) == ELLIPSUM_E_INVALID_PARAMS);
  CHECK(ellipsum_count_table("squares", 8, 10, "s4", 1, &out) == ELLIPSUM_E_INVALID_PARAMS);
}

TEST_CASE("count tables") {
  char* out = nullptr;
  REQUIRE(ellipsum_count_table("squares", 4, 5, nullptr, 1, &out) == ELLIPSUM_OK);
  const json sq = take_json(out);
  REQUIRE(sq.size() == 5);
  const long expect[] = {8, 24, 32, 24, 48};
  for (int i = 0; i < 5; ++i) {
    CHECK(sq[i]["n"] == i + 1);
    CHECK(sq[i]["oracle"] == std::to_string(expect[i]));
    CHECK(sq[i]["formula"].is_null());
  }

  REQUIRE(ellipsum_count_table("triangles", 4, 3, "t4", 1, &out) == ELLIPSUM_OK);
  const json tri = take_json(out);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0]["oracle"] == "4");
  CHECK(tri[2]["oracle"] == "8");
  for (const auto& row : tri) CHECK(row["match"] == true);

  REQUIRE(ellipsum_count_table("squares", 16, 3, "mt_sq", 2, &out) == ELLIPSUM_OK);
  const json mt = take_json(out);
  CHECK(mt[0]["oracle"] == "32");
  CHECK(mt[1]["formula"] == "480");
  for (const auto& row : mt) CHECK(row["match"] == true);
}
