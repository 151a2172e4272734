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

#include "sdgnet/reports.hpp"

#include <cstdio>
#include <sstream>

#include "sdgnet/error.hpp"
#include "sdgnet/graph_json.hpp"

namespace sdgnet {

ReportKind parse_report_kind(std::string_view text) {
  if (text == "summary") return ReportKind::Summary;
  if (text == "ugly") return ReportKind::Ugly;
  if (text == "beautiful") return ReportKind::Beautiful;
  if (text == "beautiful-graph") return ReportKind::BeautifulGraph;
  if (text == "ranking" || text == "rank") return ReportKind::Ranking;
  if (text == "longest-path") return ReportKind::LongestPath;
  throw Error(Errc::NotFound, "unknown report '" + std::string(text) + "'");
}

std::string_view to_string(ReportKind kind) noexcept {
  switch (kind) {
    case ReportKind::Summary: return "summary";
    case ReportKind::Ugly: return "ugly";
    case ReportKind::Beautiful: return "beautiful";
    case ReportKind::BeautifulGraph: return "beautiful-graph";
    case ReportKind::Ranking: return "ranking";
    case ReportKind::LongestPath: return "longest-path";
  }
  return "summary";
}

namespace {

nlohmann::json summary_json(const SummaryStats& s) {
  return {{"total_pairs", s.total_pairs}, {"colored", s.colored},
          {"positive", s.positive},       {"negative", s.negative},
          {"neutral", s.neutral},         {"uncolored", s.uncolored},
          {"negative_share", s.negative_share},
          {"negative_percent", s.negative_percent()}};
}

nlohmann::json ugly_json(const GraphSnapshot& graph, const Catalog& catalog) {
  auto rows = nlohmann::json::array();
  for (const auto& e : ugly_edges(graph)) {
    rows.push_back({{"score", e.score->value()},
                    {"label", to_string(e.score->label())},
                    {"source", e.key.lo().str()},
                    {"target", e.key.hi().str()},
                    {"source_label", catalog.label(e.key.lo())},
                    {"target_label", catalog.label(e.key.hi())},
                    {"explanation", e.explanation},
                    {"mitigation", e.mitigation}});
  }
  auto targets = nlohmann::json::array();
  for (const auto& code : ugly_targets(graph)) targets.push_back(code.str());
  return {{"edges", std::move(rows)}, {"targets", std::move(targets)}};
}

nlohmann::json beautiful_json(const GraphSnapshot& graph, const Catalog& catalog,
                              BeautyPolicy policy) {
  auto targets = nlohmann::json::array();
  for (const auto& code : beautiful_targets(graph, policy)) {
    targets.push_back({{"code", code.str()}, {"label", catalog.label(code)}});
  }
  return {{"policy", to_string(policy)}, {"count", targets.size()}, {"targets", targets}};
}

nlohmann::json ranking_json(const GraphSnapshot& graph, const Catalog& catalog) {
  auto rows = nlohmann::json::array();
  for (const auto& r : rank_by_negative(graph)) {
    rows.push_back({{"code", r.code.str()}, {"label", catalog.label(r.code)}, {"count", r.count}});
  }
  return {{"ranking", std::move(rows)}};
}

}  // namespace

nlohmann::json build_report(ReportKind kind, const GraphSnapshot& graph, const Catalog& catalog,
                            const ReportOptions& options) {
  switch (kind) {
    case ReportKind::Summary:
      return summary_json(summarize(graph));
    case ReportKind::Ugly:
      return ugly_json(graph, catalog);
    case ReportKind::Beautiful:
      return beautiful_json(graph, catalog, options.policy);
    case ReportKind::BeautifulGraph: {
      auto out = graph_to_json(beautiful_subgraph(graph, options.policy), &catalog);
      out["policy"] = to_string(options.policy);
      return out;
    }
    case ReportKind::Ranking:
      return ranking_json(graph, catalog);
    case ReportKind::LongestPath: {
      const PathResult path = longest_positive_path(
          graph, PathOptions{options.policy, options.restarts, options.seed});
      auto out = path_to_json(path);
      auto labels = nlohmann::json::array();
      for (const auto& code : path.nodes) labels.push_back(catalog.label(code));
      out["labels"] = std::move(labels);
      out["policy"] = to_string(options.policy);
      out["restarts"] = options.restarts;
      return out;
    }
  }
  return {};
}

std::string render_text(ReportKind kind, const nlohmann::json& report) {
  std::ostringstream out;
  switch (kind) {
    case ReportKind::Summary: {
      char pct[32];
      std::snprintf(pct, sizeof pct, "%.2f%%", report.at("negative_percent").get<double>());
      out << "total pairs: " << report.at("total_pairs") << '\n'
          << "colored:     " << report.at("colored") << '\n'
          << "  positive:  " << report.at("positive") << '\n'
          << "  negative:  " << report.at("negative") << " (" << pct << ")\n"
          << "  neutral:   " << report.at("neutral") << '\n'
          << "uncolored:   " << report.at("uncolored") << '\n';
      break;
    }
    case ReportKind::Ugly:
      for (const auto& row : report.at("edges")) {
        out << row.at("score").get<int>() << '\t' << row.at("source_label").get<std::string>()
            << '\t' << row.at("target_label").get<std::string>() << '\n';
      }
      break;
    case ReportKind::Beautiful:
      out << report.at("count") << " beautiful targets (policy "
          << report.at("policy").get<std::string>() << ")\n";
      for (const auto& t : report.at("targets")) out << t.at("label").get<std::string>() << '\n';
      break;
    case ReportKind::BeautifulGraph:
      out << report.at("nodes").size() << " nodes, " << report.at("edges").size()
          << " edges (policy " << report.at("policy").get<std::string>() << ")\n";
      for (const auto& e : report.at("edges")) {
        out << e.at("source").get<std::string>() << " -- " << e.at("target").get<std::string>()
            << " (" << e.at("score") << ")\n";
      }
      break;
    case ReportKind::Ranking:
      for (const auto& r : report.at("ranking")) {
        out << r.at("count") << '\t' << r.at("label").get<std::string>() << '\n';
      }
      break;
    case ReportKind::LongestPath: {
      out << "edges: " << report.at("edge_count") << '\n';
      for (const auto& label : report.at("labels")) out << label.get<std::string>() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace sdgnet
