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

#include <nlohmann/json.hpp>

#include "sdgnet/catalog.hpp"
#include "sdgnet/dag.hpp"
#include "sdgnet/graph.hpp"

namespace sdgnet {

struct GraphJsonOptions {
  /// Emit every missing pair as an uncolored edge (score null) as well.
  bool include_uncolored = false;
};

/// {nodes: [{code, goal, label}], edges: [{source, target, score|null, class}]}
///
/// Labels come from `names` ("13.1 Climate Action") when given.
nlohmann::json graph_to_json(const GraphSnapshot& graph, const Catalog* names = nullptr,
                             const GraphJsonOptions& options = {});

nlohmann::json path_to_json(const PathResult& path);

}  // namespace sdgnet
