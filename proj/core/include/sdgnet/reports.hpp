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

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sdgnet/catalog.hpp"
#include "sdgnet/dag.hpp"
#include "sdgnet/graph.hpp"

namespace sdgnet {

enum class ReportKind { Summary, Ugly, Beautiful, BeautifulGraph, Ranking, LongestPath };

/// "summary", "ugly", "beautiful", "beautiful-graph", "ranking" (or "rank"),
/// "longest-path".
ReportKind parse_report_kind(std::string_view text);
std::string_view to_string(ReportKind kind) noexcept;

struct ReportOptions {
  BeautyPolicy policy = BeautyPolicy::StrictPositive;
  unsigned restarts = 1;
  std::uint64_t seed = 0;
};

nlohmann::json build_report(ReportKind kind, const GraphSnapshot& graph, const Catalog& catalog,
                            const ReportOptions& options = {});

/// Plain-text table for terminals.
std::string render_text(ReportKind kind, const nlohmann::json& report);

}  // namespace sdgnet
