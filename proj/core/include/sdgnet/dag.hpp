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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdgnet/graph.hpp"

namespace sdgnet {

struct OrientedEdge {
  std::size_t from = 0;  // index into Dag::nodes
  std::size_t to = 0;
  Interaction origin;
};

/// Directed graph over target codes. Built acyclic by orient_acyclic, but
/// constructible by hand, so topological_sort still checks for cycles.
struct Dag {
  std::vector<TargetCode> nodes;
  std::vector<OrientedEdge> edges;
};

struct PathResult {
  std::vector<TargetCode> nodes;
  std::size_t edge_count = 0;

  friend bool operator==(const PathResult&, const PathResult&) = default;
};

/// Directs every stored interaction {u, v} as u -> v iff u precedes v in
/// `order`. `order` must list each graph node exactly once (extra codes not
/// in the graph are ignored); throws Error(InvalidInput) otherwise.
Dag orient_acyclic(const GraphSnapshot& graph, std::span<const TargetCode> order);

/// orient_acyclic with the canonical code order.
Dag orient_canonical(const GraphSnapshot& graph);

/// Kahn's algorithm; among ready nodes the smallest code goes first, so the
/// result is the lexicographically least topological order.
/// Throws Error(Cycle) if the edges contain a cycle.
std::vector<TargetCode> topological_sort(const Dag& dag);

/// Longest path by edge count, one dynamic-programming pass over a
/// topological order, O(V + E). Ties prefer the smallest end code and the
/// smallest predecessor code. A DAG with nodes but no edges yields its
/// smallest node as a zero-length path.
PathResult longest_path(const Dag& dag);

struct PathOptions {
  BeautyPolicy policy = BeautyPolicy::StrictPositive;
  /// Number of orientations tried. The first is always canonical, the rest
  /// are random permutations drawn from `seed`. The best path wins, earliest
  /// on ties.
  unsigned restarts = 1;
  std::uint64_t seed = 0;
};

/// Longest path through the beautiful subgraph under an acyclic orientation.
/// This is a lower bound on the undirected longest path, exact only for the
/// chosen orientation.
PathResult longest_positive_path(const GraphSnapshot& graph, const PathOptions& options = {});

}  // namespace sdgnet
