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

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdgnet/catalog.hpp"
#include "sdgnet/dag.hpp"
#include "sdgnet/error.hpp"
#include "sdgnet/graph.hpp"
#include "sdgnet/service.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(SDGNET_DATA_DIR) / relative;
}

inline const Catalog& official_catalog() {
  static const Catalog catalog = load_catalog(data_path("sdg_targets.csv"));
  return catalog;
}

inline const Catalog& extended_catalog() {
  static const Catalog catalog = load_catalog(data_path("fixtures/extended_catalog.csv"));
  return catalog;
}

inline TargetCode code(const char* text) { return parse_target_code(text); }

inline PairKey pair(const char* a, const char* b) { return PairKey(code(a), code(b)); }

/// Deterministic clock starting at 2021-06-30T00:00:00Z, one second per call.
inline Clock stepping_clock(Timestamp start = parse_iso8601("2021-06-30T00:00:00Z")) {
  auto counter = std::make_shared<std::atomic<std::int64_t>>(0);
  return [start, counter] { return start + std::chrono::seconds(counter->fetch_add(1)); };
}

inline ServiceConfig memory_config() {
  ServiceConfig config;
  config.database_url = ":memory:";
  config.accounts.hash_strength = HashStrength::Minimal;
  return config;
}

inline std::unique_ptr<Service> seeded_service(const Catalog& catalog = official_catalog(),
                                               Clock clock = stepping_clock()) {
  auto service = std::make_unique<Service>(memory_config(), std::move(clock));
  service->seed(catalog);
  return service;
}

/// Creates an approved expert through signup + admin approval.
inline ExpertUser approved_expert(Service& service, const std::string& login,
                                  UserId admin, bool acknowledge = true) {
  SignupProfile p;
  p.login = login;
  p.secret = login + "-secret";
  p.full_name = "Expert " + login;
  p.education = "PhD";
  p.years_experience = 10;
  p.acknowledge = acknowledge;
  const ExpertUser u = service.accounts().signup(p);
  return service.accounts().approve(admin, u.id);
}

/// Synthetic targets 1.1 .. 1.n (n <= 17 * 40 spread across goals).
inline std::vector<Target> synthetic_targets(std::size_t n) {
  std::vector<Target> out;
  for (std::size_t i = 0; i < n; ++i) {
    const int goal = static_cast<int>(i % 17) + 1;
    const int number = static_cast<int>(i / 17) + 1;
    out.push_back({TargetCode::numbered(goal, number), "target " + std::to_string(i)});
  }
  return out;
}

/// Random colored graph: each pair present with probability `density`,
/// score uniform in [min_score, 3].
inline GraphSnapshot random_graph(std::mt19937_64& rng, std::size_t n, double density,
                                  int min_score = -3) {
  auto targets = synthetic_targets(n);
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<int> score(min_score, 3);
  std::vector<Interaction> edges;
  for (const auto& key : all_pairs(targets)) {
    if (present(rng)) {
      edges.push_back(Interaction{key, InteractionScore(score(rng)), "", "", {}, {}});
    }
  }
  return GraphSnapshot(std::move(targets), std::move(edges));
}

// Oracles. These deliberately share no code with the library algorithms.

/// True iff the directed edges contain no cycle (colour-marking DFS).
inline bool has_cycle(const Dag& dag) {
  const std::size_t n = dag.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : dag.edges) out[e.from].push_back(e.to);
  std::vector<int> colour(n, 0);
  bool cycle = false;
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    colour[u] = 1;
    for (std::size_t v : out[u]) {
      if (colour[v] == 1) cycle = true;
      if (colour[v] == 0) visit(v);
    }
    colour[u] = 2;
  };
  for (std::size_t u = 0; u < n && !cycle; ++u) {
    if (colour[u] == 0) visit(u);
  }
  return cycle;
}

/// Longest directed path (edge count) by enumerating every path from every
/// start node. Exponential; for small graphs only.
inline std::size_t brute_force_longest_path(const Dag& dag) {
  const std::size_t n = dag.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : dag.edges) out[e.from].push_back(e.to);
  std::size_t best = 0;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t u, std::size_t len) {
    best = std::max(best, len);
    on_path[u] = true;
    for (std::size_t v : out[u]) {
      if (!on_path[v]) walk(v, len + 1);
    }
    on_path[u] = false;
  };
  for (std::size_t u = 0; u < n; ++u) walk(u, 0);
  return best;
}

/// True iff `path` is a simple path whose consecutive nodes share an edge
/// of `graph`.
inline bool is_simple_path_in(const PathResult& path, const GraphSnapshot& graph) {
  std::set<TargetCode> seen(path.nodes.begin(), path.nodes.end());
  if (seen.size() != path.nodes.size()) return false;
  if (path.nodes.empty()) return path.edge_count == 0;
  if (path.edge_count != path.nodes.size() - 1) return false;
  for (const auto& c : path.nodes) {
    if (!graph.contains(c)) return false;
  }
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    if (!graph.find(PairKey(path.nodes[i - 1], path.nodes[i]))) return false;
  }
  return true;
}

}  // namespace sdgnet::testing

namespace sdgnet::testing {

/// The Errc thrown by `f`, or nothing when it returns normally.
template <class F>
std::optional<Errc> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace sdgnet::testing
