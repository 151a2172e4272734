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

#include "sdgnet/graph_json.hpp"

namespace sdgnet {

namespace {

nlohmann::json edge_json(const PairKey& key, const std::optional<InteractionScore>& score) {
  return {{"source", key.lo().str()},
          {"target", key.hi().str()},
          {"score", score ? nlohmann::json(score->value()) : nlohmann::json(nullptr)},
          {"class", to_string(classify(score))}};
}

}  // namespace

nlohmann::json graph_to_json(const GraphSnapshot& graph, const Catalog* names,
                             const GraphJsonOptions& options) {
  auto nodes = nlohmann::json::array();
  for (const auto& t : graph.targets()) {
    nodes.push_back({{"code", t.code.str()},
                     {"goal", t.code.goal()},
                     {"label", names ? names->label(t.code) : t.code.str()}});
  }

  auto edges = nlohmann::json::array();
  if (options.include_uncolored) {
    const auto& targets = graph.targets();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      for (std::size_t j = i + 1; j < targets.size(); ++j) {
        const PairKey key(targets[i].code, targets[j].code);
        const Interaction* found = graph.find(key);
        edges.push_back(edge_json(key, found ? found->score : std::nullopt));
      }
    }
  } else {
    for (const auto& [key, interaction] : graph.interactions()) {
      edges.push_back(edge_json(key, interaction.score));
    }
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

nlohmann::json path_to_json(const PathResult& path) {
  auto nodes = nlohmann::json::array();
  for (const auto& code : path.nodes) nodes.push_back(code.str());
  return {{"nodes", std::move(nodes)}, {"edge_count", path.edge_count}};
}

}  // namespace sdgnet
