/*
Copyright 2026 The sdgnet Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "sdgnet/csv.hpp"
#include "sdgnet/error.hpp"
#include "sdgnet/store.hpp"
#include "sdgnet/transfer.hpp"
#include "test_support.hpp"

namespace sdgnet {
namespace {

using Millis = std::chrono::duration<double, std::milli>;

// Tolerances.
constexpr double kEnumerationLimitMs = 1000.0;
constexpr double kSummaryLimitMs = 1000.0;
constexpr double kUglyLimitMs = 1000.0;
constexpr double kOracleLimitMs = 10000.0;
constexpr double kPercentLow = 2.86 - 0.01;
constexpr double kPercentHigh = 2.87 + 0.01;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check, double limit_ms = 0) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome = check();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double ms = Millis(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0 && ms >= limit_ms) {
    outcome.pass = false;
    outcome.detail += "; exceeded " + std::to_string(static_cast<int>(limit_ms)) + " ms";
  }
  if (!outcome.pass) ++failures;
  std::printf("[%s] %-28s %8.1f ms  %s\n", outcome.pass ? "PASS" : "FAIL", name, ms,
              outcome.detail.c_str());
}

std::unique_ptr<Service> ugly_service() {
  auto service = testing::seeded_service(testing::extended_catalog());
  std::ifstream in(testing::data_path("fixtures/ugly_edges.csv"));
  service->import_edges(in);
  return service;
}

/// The fixture's pairs read straight from the file.
std::set<PairKey> fixture_pairs(const char* relative) {
  std::ifstream in(testing::data_path(relative));
  std::set<PairKey> out;
  auto rows = csv::read_all(in);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    out.insert(PairKey(parse_target_code(rows[i].fields[0]), parse_target_code(rows[i].fields[1])));
  }
  return out;
}

Outcome pair_enumeration() {
  const Catalog catalog = load_catalog(testing::data_path("sdg_targets.csv"));
  const auto pairs = all_pairs(catalog.targets());
  return {catalog.targets().size() == 169 && pairs.size() == 14196,
          std::to_string(catalog.targets().size()) + " targets, " + std::to_string(pairs.size()) +
              " pairs (expected 14196)"};
}

Outcome summary_fixture() {
  // 983 positive, 36 negative and 237 neutral edges over the first 1256
  // canonical pairs of the official catalog.
  const auto pairs = all_pairs(testing::official_catalog().targets());
  std::ostringstream csv;
  csv << "target_a,target_b,score,explanation,mitigation\n";
  for (std::size_t i = 0; i < 1256; ++i) {
    int score = 0;
    if (i < 983) {
      score = 1 + static_cast<int>(i % 3);
    } else if (i < 983 + 36) {
      score = -1 - static_cast<int>(i % 3);
    }
    csv << pairs[i].lo().str() << ',' << pairs[i].hi().str() << ',' << score;
    csv << (score < 0 ? ",conflict,mitigate\n" : ",,\n");
  }
  auto service = testing::seeded_service();
  std::istringstream in(csv.str());
  service->import_edges(in);
  const SummaryStats s = summarize(service->snapshot());
  const double percent = s.negative_percent();
  char buf[160];
  std::snprintf(buf, sizeof buf, "colored %zu (+%zu -%zu 0:%zu), negative %.2f%% in [%.2f, %.2f]",
                s.colored, s.positive, s.negative, s.neutral, percent, kPercentLow, kPercentHigh);
  return {s.colored == 1256 && s.positive == 983 && s.negative == 36 && s.neutral == 237 &&
              percent >= kPercentLow && percent <= kPercentHigh,
          buf};
}

Outcome ugly_fidelity() {
  auto service = ugly_service();
  const auto ugly = ugly_edges(service->snapshot());
  std::set<PairKey> got;
  for (const auto& e : ugly) got.insert(e.key);
  const auto expected = fixture_pairs("fixtures/ugly_edges.csv");
  bool first_six = ugly.size() >= 6;
  for (std::size_t i = 0; first_six && i < 6; ++i) first_six = ugly[i].score->value() == -3;
  const bool ordered = std::is_sorted(ugly.begin(), ugly.end(), [](const auto& a, const auto& b) {
    return a.score->value() < b.score->value();
  });
  const bool spot = got.contains(testing::pair("13.1", "14.C")) &&
                    got.contains(testing::pair("8.1", "11.6"));
  return {expected.size() == 17 && got == expected && first_six && ordered && spot,
          std::to_string(ugly.size()) + " rows, set match " + (got == expected ? "yes" : "no") +
              ", first six -3 " + (first_six ? "yes" : "no") + ", nondecreasing " +
              (ordered ? "yes" : "no")};
}

Outcome ranking() {
  auto service = ugly_service();
  const auto rank = rank_by_negative(service->snapshot());
  // Brute count straight from the fixture rows.
  std::map<TargetCode, std::size_t> brute;
  for (const auto& p : fixture_pairs("fixtures/ugly_edges.csv")) {
    ++brute[p.lo()];
    ++brute[p.hi()];
  }
  const std::size_t best =
      std::max_element(brute.begin(), brute.end(), [](const auto& a, const auto& b) {
        return a.second < b.second;
      })->second;
  const bool ok = !rank.empty() && rank[0].code == testing::code("13.1") && rank[0].count == 3 &&
                  brute[testing::code("13.1")] == 3 && best == 3;
  return {ok, rank.empty() ? "empty ranking"
                           : "first " + rank[0].code.str() + " with " +
                                 std::to_string(rank[0].count) + " (brute max " +
                                 std::to_string(best) + ")"};
}

Outcome longest_path_oracle() {
  std::mt19937_64 rng(20210630);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::size_t matched = 0, longest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, size(rng), 0.5, trial % 4 == 0 ? -1 : 1);
    const auto sub = beautiful_subgraph(g);
    const Dag dag = orient_canonical(sub);
    const PathResult dp = longest_positive_path(g);
    const std::size_t brute = testing::brute_force_longest_path(dag);
    if (dp.edge_count == brute && testing::is_simple_path_in(dp, sub)) ++matched;
    longest = std::max(longest, dp.edge_count);
  }
  return {matched == 100, std::to_string(matched) + "/100 graphs match, longest path " +
                              std::to_string(longest) + " edges"};
}

Outcome acyclicity() {
  std::mt19937_64 rng(1000);
  std::size_t passed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing::random_graph(rng, 2 + trial % 30, 0.5);
    std::vector<TargetCode> order;
    for (const auto& t : g.targets()) order.push_back(t.code);
    std::shuffle(order.begin(), order.end(), rng);
    const Dag dag = orient_acyclic(g, order);
    try {
      if (topological_sort(dag).size() == dag.nodes.size() && !testing::has_cycle(dag)) ++passed;
    } catch (const Error&) {
    }
  }
  return {passed == 1000, std::to_string(passed) + "/1000 orientations sort"};
}

Outcome single_score() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 8, 32}) {
    auto service = testing::seeded_service();
    const auto admin = service->accounts().create_admin("admin", "admin-secret", "Admin");
    const auto alice = testing::approved_expert(*service, "alice", admin.id);
    const auto bob = testing::approved_expert(*service, "bob", admin.id);
    service->survey().generate_assignments(alice.id, {13});
    const PairKey key = testing::pair("13.1", "13.2");
    std::atomic<int> success{0}, rejected{0}, other{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < n; ++i) {
      threads.emplace_back([&, i] {
        const UserId who = i % 4 == 3 ? bob.id : alice.id;
        try {
          service->survey().submit_answer(who, key, 2);
          ++success;
        } catch (const Error& e) {
          (e.code() == Errc::AlreadyScored || e.code() == Errc::NotAssigned ? rejected : other)++;
        }
      });
    }
    for (auto& t : threads) t.join();
    const bool stored_once = store::answers(service->db()).size() == 1;
    ok = ok && success == 1 && rejected == n - 1 && other == 0 && stored_once;
    detail += "N=" + std::to_string(n) + ": " + std::to_string(success.load()) + " ok/" +
              std::to_string(rejected.load()) + " rejected  ";
  }
  return {ok, detail};
}

Outcome workflow_rules() {
  auto service = testing::seeded_service();
  const auto admin = service->accounts().create_admin("admin", "admin-secret", "Admin");
  const auto alice = testing::approved_expert(*service, "alice", admin.id);
  service->survey().generate_assignments(alice.id, {13});

  const auto missing = testing::error_of([&] {
    service->survey().submit_answer(alice.id, testing::pair("13.1", "13.2"), -2, "why", "");
  });
  SignupProfile p{"pending", "pending-secret", "Pending", "PhD", 9, "", false, {}};
  service->accounts().signup(p);
  const auto pending = testing::error_of([&] { service->accounts().login("pending", "pending-secret"); });
  const auto third = testing::error_of([&] { service->public_graph({1, 2, 3}); });
  const bool ok = missing == Errc::MissingMitigation && pending == Errc::PendingAccount &&
                  third == Errc::InvalidInput;
  auto name = [](const std::optional<Errc>& e) {
    return e ? std::string(to_string(*e)) : std::string("accepted");
  };
  return {ok, "missing mitigation: " + name(missing) + ", pending login: " + name(pending) +
                  ", third goal: " + name(third)};
}

Outcome export_round_trip() {
  auto service = testing::seeded_service(testing::extended_catalog());
  const auto admin = service->accounts().create_admin("admin", "admin-secret", "Admin");
  const auto alice = testing::approved_expert(*service, "alice", admin.id, true);
  const auto bob = testing::approved_expert(*service, "bob", admin.id, false);
  std::ifstream ugly(testing::data_path("fixtures/ugly_edges.csv"));
  service->import_edges(ugly);
  service->survey().generate_assignments(alice.id, {9});
  service->survey().generate_assignments(bob.id, {10});
  service->survey().submit_answer(alice.id, testing::pair("9.1", "9.2"), -1, "cost, \"scale\"",
                                  "phase\nin");
  service->survey().submit_answer(bob.id, testing::pair("10.1", "10.2"), 3);

  const std::string first = service->export_csv(admin.id);
  store::wipe_answers(service->db());
  const bool wiped = store::answers(service->db()).empty();
  std::istringstream in(first);
  service->import_edges(in);
  const std::string second = service->export_csv(admin.id);
  const std::size_t lines = static_cast<std::size_t>(std::count(first.begin(), first.end(), '\n'));
  return {wiped && first == second,
          std::to_string(first.size()) + " bytes, " + std::to_string(lines) + " lines, identical " +
              (first == second ? "yes" : "no")};
}

}  // namespace
}  // namespace sdgnet

int main() {
  using namespace sdgnet;
  report("pair-enumeration", pair_enumeration, kEnumerationLimitMs);
  report("summary-fixture", summary_fixture, kSummaryLimitMs);
  report("ugly-report-fidelity", ugly_fidelity, kUglyLimitMs);
  report("negative-ranking", ranking);
  report("longest-path-oracle", longest_path_oracle, kOracleLimitMs);
  report("orientation-acyclicity", acyclicity);
  report("single-score-enforcement", single_score);
  report("workflow-rules", workflow_rules);
  report("export-round-trip", export_round_trip);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
