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

#include "sdgnet/dag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>

#include "sdgnet/error.hpp"

namespace sdgnet {

Dag orient_acyclic(const GraphSnapshot& graph, std::span<const TargetCode> order) {
  const auto& targets = graph.targets();
  std::vector<std::size_t> position(targets.size(), GraphSnapshot::npos);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t idx = graph.index_of(order[rank]);
    if (idx == GraphSnapshot::npos) continue;
    if (position[idx] != GraphSnapshot::npos) {
      throw Error(Errc::InvalidInput,
                  "order lists " + order[rank].str() + " more than once");
    }
    position[idx] = rank;
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (position[i] == GraphSnapshot::npos) {
      throw Error(Errc::InvalidInput,
                  "order is missing node " + targets[i].code.str());
    }
  }

  Dag dag;
  dag.nodes.reserve(targets.size());
  for (const auto& t : targets) dag.nodes.push_back(t.code);
  dag.edges.reserve(graph.interactions().size());
  for (const auto& [key, interaction] : graph.interactions()) {
    std::size_t u = graph.index_of(key.lo());
    std::size_t v = graph.index_of(key.hi());
    if (position[v] < position[u]) std::swap(u, v);
    dag.edges.push_back({u, v, interaction});
  }
  return dag;
}

Dag orient_canonical(const GraphSnapshot& graph) {
  std::vector<TargetCode> order;
  order.reserve(graph.node_count());
  for (const auto& t : graph.targets()) order.push_back(t.code);
  return orient_acyclic(graph, order);
}

namespace {

void check_edges(const Dag& dag) {
  for (const auto& e : dag.edges) {
    if (e.from >= dag.nodes.size() || e.to >= dag.nodes.size()) {
      throw Error(Errc::InvalidInput, "edge endpoint outside the node list");
    }
  }
}

// Node indices in topological order, ties broken by smallest code.
std::vector<std::size_t> topological_indices(const Dag& dag) {
  check_edges(dag);
  const std::size_t n = dag.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : dag.edges) {
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }

  auto later = [&](std::size_t a, std::size_t b) {
    return dag.nodes[b] < dag.nodes[a] || (dag.nodes[a] == dag.nodes[b] && b < a);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t u = ready.top();
    ready.pop();
    order.push_back(u);
    for (std::size_t v : out[u]) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (order.size() != n) {
    throw Error(Errc::Cycle, "graph has a cycle; " + std::to_string(n - order.size()) +
                                 " nodes could not be ordered");
  }
  return order;
}

}  // namespace

std::vector<TargetCode> topological_sort(const Dag& dag) {
  std::vector<TargetCode> out;
  for (std::size_t i : topological_indices(dag)) out.push_back(dag.nodes[i]);
  return out;
}

PathResult longest_path(const Dag& dag) {
  const auto order = topological_indices(dag);
  const std::size_t n = dag.nodes.size();
  if (n == 0) return {};

  std::vector<std::vector<std::size_t>> in(n);
  for (const auto& e : dag.edges) in[e.to].push_back(e.from);

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> length(n, 0);
  std::vector<std::size_t> prev(n, none);
  for (std::size_t v : order) {
    for (std::size_t u : in[v]) {
      const std::size_t candidate = length[u] + 1;
      if (candidate > length[v] ||
          (candidate == length[v] && prev[v] != none && dag.nodes[u] < dag.nodes[prev[v]])) {
        length[v] = candidate;
        prev[v] = u;
      }
    }
  }

  std::size_t end = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (length[v] > length[end] ||
        (length[v] == length[end] && dag.nodes[v] < dag.nodes[end])) {
      end = v;
    }
  }

  PathResult result;
  result.edge_count = length[end];
  for (std::size_t v = end; v != none; v = prev[v]) result.nodes.push_back(dag.nodes[v]);
  std::reverse(result.nodes.begin(), result.nodes.end());
  return result;
}

PathResult longest_positive_path(const GraphSnapshot& graph, const PathOptions& options) {
  const GraphSnapshot beautiful = beautiful_subgraph(graph, options.policy);
  if (beautiful.node_count() == 0) return {};

  PathResult best = longest_path(orient_canonical(beautiful));
  if (options.restarts <= 1) return best;

  std::vector<TargetCode> order;
  for (const auto& t : beautiful.targets()) order.push_back(t.code);
  std::mt19937_64 rng(options.seed);
  for (unsigned r = 1; r < options.restarts; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    PathResult candidate = longest_path(orient_acyclic(beautiful, order));
    if (candidate.edge_count > best.edge_count) best = std::move(candidate);
  }
  return best;
}

}  // namespace sdgnet
