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
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ellipsum/ellipsum.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct CliError {
  std::string message;
};

// Takes ownership of a string from the library.
std::string take(char* s) {
  std::string r = s ? s : "";
  ellipsum_string_free(s);
  return r;
}

void check(ellipsum_status st) {
  if (st != ELLIPSUM_OK) throw CliError{ellipsum_last_error()};
}

json catalog() {
  char* out = nullptr;
  check(ellipsum_catalog_json(&out));
  return json::parse(take(out));
}

std::vector<std::string> match(const std::string& pattern) {
  char* out = nullptr;
  check(ellipsum_match_tags(pattern.c_str(), &out));
  return json::parse(take(out)).get<std::vector<std::string>>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

// "1,2,3" -> [1,2,3]; entries that are not integers are kept as strings.
json scalar_list(const std::string& text, bool rational) {
  json out = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CliError{"empty entry in list '" + text + "'"};
    if (rational) {
      out.push_back(item);
      continue;
    }
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0') throw CliError{"not an integer: '" + item + "'"};
    out.push_back(v);
  }
  return out;
}

json list_or_scalar(const std::string& text) {
  json v = scalar_list(text, false);
  return v.size() == 1 ? v[0] : v;
}

struct VerifyOptions {
  std::vector<std::string> globs;
  std::optional<long> order;
  std::string m, k, nmax;
  std::vector<std::string> points;
  std::string format = "json";
  unsigned jobs = 1;
};

struct Job {
  std::string tag;
  std::string params;
  std::vector<std::string> reports;  // JSON text
  bool pass = true;
  std::string error;
  bool done = false;
};

json overrides_for(const json& row, const VerifyOptions& o, std::optional<long> order) {
  json ov = json::object();
  const auto accepts = [&](const char* key) {
    for (const auto& p : row["params"]) {
      if (p == key) return true;
    }
    return false;
  };
  if (order && accepts("order")) ov["order"] = *order;
  if (!o.m.empty() && accepts("m")) ov["m"] = list_or_scalar(o.m);
  if (!o.k.empty() && accepts("k")) ov["k"] = list_or_scalar(o.k);
  if (!o.nmax.empty() && accepts("nmax")) ov["nmax"] = list_or_scalar(o.nmax);
  if (!o.points.empty() && accepts("points")) {
    if (o.points.size() == 1) {
      ov["points"] = scalar_list(o.points[0], true);
    } else {
      json all = json::array();
      for (const auto& p : o.points) all.push_back(scalar_list(p, true));
      ov["points"] = all;
    }
  }
  return ov;
}

std::optional<long> env_order() {
  const char* env = std::getenv("ELLIPSUM_ORDER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw CliError{std::string("ELLIPSUM_ORDER must be a positive integer, got '") + env + "'"};
  return v;
}

void print_report(const std::string& format, const std::string& text, bool first) {
  if (format == "json") {
    std::cout << (first ? "" : ",\n") << text;
    return;
  }
  const json r = json::parse(text);
  const bool pass = r["status"] == "pass";
  if (format == "csv") {
    std::string at, lhs, rhs, residual;
    if (!r["first_discrepancy"].is_null()) {
      at = std::to_string(r["first_discrepancy"]["at"].get<long>());
      lhs = r["first_discrepancy"]["lhs"];
      rhs = r["first_discrepancy"]["rhs"];
    }
    if (r.contains("residual")) residual = r["residual"].dump();
    std::cout << r["id"].get<std::string>() << ',' << csv_field(r["params"].dump()) << ',' << r["checked_upto"] << ','
              << r["status"].get<std::string>() << ',' << at << ',' << csv_field(lhs) << ',' << csv_field(rhs) << ','
              << residual << '\n';
    return;
  }
  std::cout << (pass ? "PASS " : "FAIL ") << r["id"].get<std::string>() << ' ' << r["params"].dump()
            << " checked_upto=" << r["checked_upto"];
  if (r.contains("residual")) std::cout << " residual=" << r["residual"].dump();
  if (!pass && !r["first_discrepancy"].is_null()) {
    const auto& d = r["first_discrepancy"];
    std::cout << " first discrepancy at " << d["at"] << ": " << d["lhs"].get<std::string>()
              << " != " << d["rhs"].get<std::string>();
  }
  std::cout << '\n';
}

int cmd_verify(const VerifyOptions& o) {
  const json cat = catalog();
  std::vector<std::string> tags;
  for (const auto& g : o.globs) {
    const auto hits = match(g);
    if (hits.empty()) throw CliError{"UnknownIdentity: no catalog row matches '" + g + "'"};
  }
  for (const auto& row : cat) {
    const std::string tag = row["id"];
    for (const auto& g : o.globs) {
      const auto hits = match(g);
      if (std::find(hits.begin(), hits.end(), tag) != hits.end()) {
        tags.push_back(tag);
        break;
      }
    }
  }
  const std::optional<long> order = o.order ? o.order : env_order();
  if (order && *order < 1) throw CliError{"InvalidParams: order must be at least 1"};

  std::vector<Job> jobs;
  for (const auto& row : cat) {
    const std::string tag = row["id"];
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) continue;
    char* planned = nullptr;
    check(ellipsum_plan(tag.c_str(), overrides_for(row, o, order).dump().c_str(), &planned));
    for (const auto& params : json::parse(take(planned))) jobs.push_back(Job{tag, params.dump(), {}, true, {}, false});
  }

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      Job result = jobs[i];
      ellipsum_reports* reports = nullptr;
      if (ellipsum_run_job(result.tag.c_str(), result.params.c_str(), &reports) != ELLIPSUM_OK) {
        result.error = ellipsum_last_error();
      } else {
        for (std::size_t r = 0; r < ellipsum_reports_count(reports); ++r) {
          char* text = nullptr;
          if (ellipsum_reports_json(reports, r, &text) == ELLIPSUM_OK) result.reports.push_back(take(text));
        }
        result.pass = ellipsum_reports_all_pass(reports) != 0;
        ellipsum_reports_free(reports);
      }
      std::lock_guard<std::mutex> lock(mu);
      result.done = true;
      jobs[i] = std::move(result);
      cv.notify_all();
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);

  int exit_code = kOk;
  bool first = true;
  if (o.format == "json") std::cout << "[\n";
  if (o.format == "csv") std::cout << "id,params,checked_upto,status,at,lhs,rhs,residual\n";
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Job job;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return jobs[i].done; });
      job = jobs[i];
    }
    if (!job.error.empty()) {
      std::cerr << "error: " << job.tag << ' ' << job.params << ": " << job.error << '\n';
      exit_code = kUsage;
      continue;
    }
    for (const auto& r : job.reports) {
      print_report(o.format, r, first);
      first = false;
    }
    if (!job.pass && exit_code == kOk) exit_code = kFailed;
    std::cout.flush();
  }
  if (o.format == "json") std::cout << (first ? "" : "\n") << "]\n";
  for (auto& t : pool) t.join();
  return exit_code;
}

int cmd_count(const std::string& kind, unsigned k, long nmax, const std::string& using_tag, unsigned m,
              const std::string& format) {
  char* out = nullptr;
  check(ellipsum_count_table(kind.c_str(), k, nmax, using_tag.empty() ? nullptr : using_tag.c_str(), m, &out));
  const json rows = json::parse(take(out));
  bool all_match = true;
  for (const auto& r : rows) {
    if (r["match"].is_boolean() && !r["match"].get<bool>()) all_match = false;
  }
  if (format == "json") {
    std::cout << rows.dump(2) << '\n';
  } else {
    if (format == "csv") std::cout << "n,oracle,formula,match\n";
    for (const auto& r : rows) {
      const std::string formula = r["formula"].is_null() ? "" : r["formula"].get<std::string>();
      const std::string matched = r["match"].is_null() ? "" : (r["match"].get<bool>() ? "true" : "false");
      if (format == "csv") {
        std::cout << r["n"] << ',' << r["oracle"].get<std::string>() << ',' << formula << ',' << matched << '\n';
      } else {
        std::cout << r["n"] << '\t' << r["oracle"].get<std::string>();
        if (!formula.empty()) std::cout << '\t' << formula << '\t' << (matched == "true" ? "ok" : "MISMATCH");
        std::cout << '\n';
      }
    }
  }
  return all_match ? kOk : kFailed;
}

int cmd_table(const std::string& tag_glob, const std::string& format) {
  const json cat = catalog();
  std::vector<std::string> keep;
  if (!tag_glob.empty()) {
    keep = match(tag_glob);
    if (keep.empty()) throw CliError{"UnknownIdentity: no catalog row matches '" + tag_glob + "'"};
  }
  json rows = json::array();
  for (const auto& row : cat) {
    if (keep.empty() || std::find(keep.begin(), keep.end(), row["id"].get<std::string>()) != keep.end()) {
      rows.push_back(row);
    }
  }
  if (format == "json") {
    std::cout << rows.dump(2) << '\n';
    return kOk;
  }
  if (format == "csv") std::cout << "id,kind,order_unit,params,ranges,anchor\n";
  for (const auto& r : rows) {
    std::string params;
    for (const auto& p : r["params"]) params += (params.empty() ? "" : " ") + p.get<std::string>();
    if (format == "csv") {
      std::cout << r["id"].get<std::string>() << ',' << r["kind"].get<std::string>() << ','
                << r["order_unit"].get<std::string>() << ',' << csv_field(params) << ','
                << csv_field(r["ranges"].get<std::string>()) << ',' << csv_field(r["anchor"].get<std::string>())
                << '\n';
    } else {
      std::printf("%-12s %-8s %-5s %-24s %-40s %s\n", r["id"].get<std::string>().c_str(),
                  r["kind"].get<std::string>().c_str(), r["order_unit"].get<std::string>().c_str(), params.c_str(),
                  r["ranges"].get<std::string>().c_str(), r["anchor"].get<std::string>().c_str());
    }
  }
  std::cout.flush();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of sums-of-squares and sums-of-triangles identities"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  VerifyOptions vo;
  long order_flag = 0;
  auto* verify = app.add_subcommand("verify", "run catalog verifications for tags matching the globs");
  verify->add_option("ids", vo.globs, "tag globs, e.g. mhd_* or hsf")->required();
  verify->add_option("-N,--order", order_flag, "truncation order (overrides ELLIPSUM_ORDER)");
  verify->add_option("--m", vo.m, "m or a comma list of m");
  verify->add_option("--k", vo.k, "k or a comma list of k");
  verify->add_option("--nmax", vo.nmax, "largest n for count identities");
  verify->add_option("--points", vo.points, "point vector x1,x2,... (repeat for several)");
  verify->add_option("--format", vo.format, "json, csv or text")->check(CLI::IsMember(formats));
  verify->add_option("--jobs", vo.jobs, "parallel jobs")->check(CLI::Range(1u, 256u));

  std::string kind, using_tag, count_format = "json";
  unsigned k = 0, m = 1;
  long nmax = 10;
  auto* count = app.add_subcommand("count", "table of representation counts");
  count->add_option("kind", kind, "squares or triangles")->required();
  count->add_option("k", k, "number of summands")->required();
  count->add_option("--nmax", nmax, "largest n");
  count->add_option("--using", using_tag, "count identity giving the formula column");
  count->add_option("--m", m, "size parameter of the --using identity");
  count->add_option("--format", count_format, "json, csv or text")->check(CLI::IsMember(formats));

  std::string tag_glob, table_format = "text";
  auto* table = app.add_subcommand("table", "list the identity catalog");
  table->add_flag("--catalog", "list catalog rows (the default)");
  table->add_option("--tag", tag_glob, "only rows matching this glob");
  table->add_option("--format", table_format, "json, csv or text")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      if (verify->count("--order") > 0) vo.order = order_flag;
      return cmd_verify(vo);
    }
    if (*count) return cmd_count(kind, k, nmax, using_tag, m, count_format);
    return cmd_table(tag_glob, table_format);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
