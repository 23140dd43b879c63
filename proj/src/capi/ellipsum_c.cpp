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
#include "ellipsum/ellipsum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ellipsum/error.hpp"
#include "ellipsum/identities.hpp"
#include "ellipsum/oracle.hpp"

struct ellipsum_reports {
  std::vector<ellipsum::identities::VerifyReport> items;
};

namespace {

using json = nlohmann::ordered_json;
using ellipsum::ErrorCode;

thread_local std::string last_error;

constexpr long kCountMaxN = 2000;
constexpr unsigned kCountMaxK = 64;

ellipsum_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownIdentity:
    case ErrorCode::UnknownId:
      return ELLIPSUM_E_UNKNOWN_IDENTITY;
    case ErrorCode::InvalidParams:
      return ELLIPSUM_E_INVALID_PARAMS;
    case ErrorCode::UnsupportedRange:
    case ErrorCode::DimensionTooLarge:
    case ErrorCode::TooManyVariables:
      return ELLIPSUM_E_UNSUPPORTED_RANGE;
    case ErrorCode::RangeTooLarge:
      return ELLIPSUM_E_RANGE_TOO_LARGE;
    case ErrorCode::InvalidPoints:
    case ErrorCode::RepeatedPoint:
    case ErrorCode::AntipodalPoints:
    case ErrorCode::ZeroPointWithNegativeExponent:
      return ELLIPSUM_E_INVALID_POINTS;
    case ErrorCode::TruncationTooSmall:
      return ELLIPSUM_E_TRUNCATION_TOO_SMALL;
    default:
      return ELLIPSUM_E_ARITHMETIC;
  }
}

ellipsum_status fail(ellipsum_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
ellipsum_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return ELLIPSUM_OK;
  } catch (const ellipsum::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail(ELLIPSUM_E_INVALID_PARAMS, std::string("InvalidParams: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(ELLIPSUM_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ELLIPSUM_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

json parse_object(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  json j = json::parse(text);
  if (!j.is_object()) throw ellipsum::Error(ErrorCode::InvalidParams, "parameters must be a JSON object");
  return j;
}

#define ELLIPSUM_REQUIRE(ptr)                                               \
  do {                                                                      \
    if ((ptr) == nullptr) return fail(ELLIPSUM_E_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* ellipsum_version(void) { return "1.0.0"; }

const char* ellipsum_status_name(ellipsum_status status) {
  switch (status) {
    case ELLIPSUM_OK: return "Ok";
    case ELLIPSUM_E_UNKNOWN_IDENTITY: return "UnknownIdentity";
    case ELLIPSUM_E_INVALID_PARAMS: return "InvalidParams";
    case ELLIPSUM_E_UNSUPPORTED_RANGE: return "UnsupportedRange";
    case ELLIPSUM_E_RANGE_TOO_LARGE: return "RangeTooLarge";
    case ELLIPSUM_E_INVALID_POINTS: return "InvalidPoints";
    case ELLIPSUM_E_TRUNCATION_TOO_SMALL: return "TruncationTooSmall";
    case ELLIPSUM_E_ARITHMETIC: return "ArithmeticError";
    case ELLIPSUM_E_NULL_ARGUMENT: return "NullArgument";
    case ELLIPSUM_E_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* ellipsum_last_error(void) { return last_error.c_str(); }

void ellipsum_string_free(char* s) { std::free(s); }

ellipsum_status ellipsum_catalog_json(char** out_json) {
  ELLIPSUM_REQUIRE(out_json);
  return guarded([&] { *out_json = dup_string(ellipsum::identities::catalog_json().dump()); });
}

ellipsum_status ellipsum_match_tags(const char* pattern, char** out_json) {
  ELLIPSUM_REQUIRE(pattern);
  ELLIPSUM_REQUIRE(out_json);
  return guarded([&] { *out_json = dup_string(json(ellipsum::identities::match_tags(pattern)).dump()); });
}

ellipsum_status ellipsum_plan(const char* tag, const char* overrides_json, char** out_json) {
  ELLIPSUM_REQUIRE(tag);
  ELLIPSUM_REQUIRE(out_json);
  return guarded([&] {
    json jobs = json::array();
    for (auto& j : ellipsum::identities::plan(tag, parse_object(overrides_json))) jobs.push_back(std::move(j));
    *out_json = dup_string(jobs.dump());
  });
}

ellipsum_status ellipsum_run_job(const char* tag, const char* resolved_json, ellipsum_reports** out) {
  ELLIPSUM_REQUIRE(tag);
  ELLIPSUM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<ellipsum_reports>();
    r->items = ellipsum::identities::run_job(tag, parse_object(resolved_json));
    *out = r.release();
  });
}

ellipsum_status ellipsum_verify(const char* tag, const char* params_json, ellipsum_reports** out) {
  ELLIPSUM_REQUIRE(tag);
  ELLIPSUM_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<ellipsum_reports>();
    r->items = ellipsum::identities::verify(tag, parse_object(params_json));
    *out = r.release();
  });
}

size_t ellipsum_reports_count(const ellipsum_reports* reports) { return reports ? reports->items.size() : 0; }

int ellipsum_reports_all_pass(const ellipsum_reports* reports) {
  if (reports == nullptr) return 0;
  for (const auto& r : reports->items) {
    if (!r.pass) return 0;
  }
  return 1;
}

ellipsum_status ellipsum_reports_json(const ellipsum_reports* reports, size_t index, char** out_json) {
  ELLIPSUM_REQUIRE(reports);
  ELLIPSUM_REQUIRE(out_json);
  if (index >= reports->items.size()) return fail(ELLIPSUM_E_INVALID_PARAMS, "report index out of range");
  return guarded([&] { *out_json = dup_string(ellipsum::identities::to_json(reports->items[index]).dump()); });
}

void ellipsum_reports_free(ellipsum_reports* reports) { delete reports; }

ellipsum_status ellipsum_count_table(const char* kind, unsigned k, long nmax, const char* using_tag, unsigned m,
                                     char** out_json) {
  ELLIPSUM_REQUIRE(kind);
  ELLIPSUM_REQUIRE(out_json);
  return guarded([&] {
    namespace id = ellipsum::identities;
    const auto rk = ellipsum::oracle::parse_rep_kind(kind);
    if (k < 1) throw ellipsum::Error(ErrorCode::InvalidParams, "k must be at least 1");
    if (nmax < 1) throw ellipsum::Error(ErrorCode::InvalidParams, "nmax must be at least 1");
    if (k > kCountMaxK || nmax > kCountMaxN) {
      throw ellipsum::Error(ErrorCode::RangeTooLarge, "count tables are limited to k <= " +
                                                          std::to_string(kCountMaxK) + " and nmax <= " +
                                                          std::to_string(kCountMaxN));
    }
    std::vector<ellipsum::Rat> formula;
    const bool with_formula = using_tag != nullptr && *using_tag != '\0';
    if (with_formula) {
      if (!id::is_count_tag(using_tag)) {
        id::catalog_row(using_tag);  // UnknownIdentity for tags outside the catalog
        throw ellipsum::Error(ErrorCode::InvalidParams, std::string(using_tag) + " is not a count identity");
      }
      const bool squares = rk == ellipsum::oracle::RepKind::squares;
      if (id::count_tag_is_squares(using_tag) != squares || id::count_tag_summands(using_tag, m) != k) {
        throw ellipsum::Error(ErrorCode::InvalidParams, std::string(using_tag) + " with m = " + std::to_string(m) +
                                                            " does not count " + std::to_string(k) + " " + kind);
      }
      formula = id::formula_counts(using_tag, m, nmax);
    }
    const auto oracle = ellipsum::oracle::rep_counts(rk, k, static_cast<int>(nmax));
    json rows = json::array();
    for (long n = 1; n <= nmax; ++n) {
      const auto i = static_cast<std::size_t>(n);
      json row{{"n", n}, {"oracle", oracle[i].get_str()}};
      if (with_formula) {
        row["formula"] = formula[i].get_str();
        row["match"] = formula[i] == ellipsum::Rat(oracle[i]);
      } else {
        row["formula"] = nullptr;
        row["match"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    *out_json = dup_string(rows.dump());
  });
}

}  // extern "C"
