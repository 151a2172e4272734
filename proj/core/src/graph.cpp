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

#include "sdgnet/graph.hpp"

#include <algorithm>
#include <cmath>

#include "sdgnet/error.hpp"

namespace sdgnet {

std::string_view to_string(ScaleLabel label) noexcept {
  switch (label) {
    case ScaleLabel::Cancelling: return "cancelling";
    case ScaleLabel::Counteracting: return "counteracting";
    case ScaleLabel::Constraining: return "constraining";
    case ScaleLabel::Consistent: return "consistent";
    case ScaleLabel::Enabling: return "enabling";
    case ScaleLabel::Reinforcing: return "reinforcing";
    case ScaleLabel::Indivisible: return "indivisible";
  }
  return "unknown";
}

InteractionScore::InteractionScore(int value) : value_(value) {
  if (!valid(value)) {
    throw Error(Errc::InvalidScore,
                "score must be in [-3, +3], got " + std::to_string(value));
  }
}

PairKey::PairKey(const TargetCode& a, const TargetCode& b)
    : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) {
    throw Error(Errc::InvalidInput, "a pair needs two distinct targets, got " +
                                        a.str() + " twice");
  }
}

PairKey PairKey::parse(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw Error(Errc::InvalidInput,
                "pair must look like '13.1-14.C', got '" + std::string(text) + "'");
  }
  return PairKey(parse_target_code(text.substr(0, dash)),
                 parse_target_code(text.substr(dash + 1)));
}

std::string_view to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::Positive: return "positive";
    case EdgeClass::Negative: return "negative";
    case EdgeClass::Neutral: return "neutral";
    case EdgeClass::Uncolored: return "uncolored";
  }
  return "unknown";
}

EdgeClass classify(const std::optional<InteractionScore>& score) noexcept {
  if (!score) return EdgeClass::Uncolored;
  if (score->value() > 0) return EdgeClass::Positive;
  if (score->value() < 0) return EdgeClass::Negative;
  return EdgeClass::Neutral;
}

std::string_view to_string(BeautyPolicy policy) noexcept {
  return policy == BeautyPolicy::StrictPositive ? "strict" : "nonnegative";
}

BeautyPolicy parse_beauty_policy(std::string_view text) {
  if (text == "strict" || text == "strict-positive" || text == "strictpositive") {
    return BeautyPolicy::StrictPositive;
  }
  if (text == "nonnegative" || text == "non-negative") {
    return BeautyPolicy::NonNegative;
  }
  throw Error(Errc::InvalidInput,
              "policy must be 'strict' or 'nonnegative', got '" +
                  std::string(text) + "'");
}

namespace {

int policy_threshold(BeautyPolicy policy) {
  return policy == BeautyPolicy::StrictPositive ? 1 : 0;
}

}  // namespace

GraphSnapshot::GraphSnapshot(std::vector<Target> targets,
                             std::vector<Interaction> interactions)
    : targets_(std::move(targets)) {
  std::sort(targets_.begin(), targets_.end(),
            [](const Target& a, const Target& b) { return a.code < b.code; });
  for (std::size_t i = 1; i < targets_.size(); ++i) {
    if (targets_[i - 1].code == targets_[i].code) {
      throw Error(Errc::Duplicate,
                  "duplicate target " + targets_[i].code.str() + " in snapshot");
    }
  }
  for (auto& interaction : interactions) {
    if (!contains(interaction.key.lo()) || !contains(interaction.key.hi())) {
      throw Error(Errc::InvalidInput, "interaction " + interaction.key.str() +
                                          " references a target outside the graph");
    }
    const PairKey key = interaction.key;
    if (!interactions_.emplace(key, std::move(interaction)).second) {
      throw Error(Errc::Duplicate, "duplicate interaction " + key.str());
    }
  }
}

std::size_t GraphSnapshot::index_of(const TargetCode& code) const {
  auto it = std::lower_bound(
      targets_.begin(), targets_.end(), code,
      [](const Target& t, const TargetCode& c) { return t.code < c; });
  if (it == targets_.end() || it->code != code) return npos;
  return static_cast<std::size_t>(it - targets_.begin());
}

bool GraphSnapshot::contains(const TargetCode& code) const {
  return index_of(code) != npos;
}

const Interaction* GraphSnapshot::find(const PairKey& key) const {
  auto it = interactions_.find(key);
  return it == interactions_.end() ? nullptr : &it->second;
}

double SummaryStats::negative_percent() const {
  return std::round(negative_share * 100.0 * 100.0) / 100.0;
}

std::vector<PairKey> all_pairs(std::span<const Target> targets) {
  std::vector<TargetCode> codes;
  codes.reserve(targets.size());
  for (const auto& t : targets) codes.push_back(t.code);
  std::sort(codes.begin(), codes.end());
  if (auto dup = std::adjacent_find(codes.begin(), codes.end()); dup != codes.end()) {
    throw Error(Errc::Duplicate, "duplicate target code " + dup->str());
  }
  std::vector<PairKey> pairs;
  if (codes.size() < 2) return pairs;
  pairs.reserve(codes.size() * (codes.size() - 1) / 2);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      pairs.emplace_back(codes[i], codes[j]);
    }
  }
  return pairs;
}

SummaryStats summarize(const GraphSnapshot& graph) {
  SummaryStats s;
  const std::size_t n = graph.node_count();
  s.total_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  for (const auto& [key, interaction] : graph.interactions()) {
    switch (classify(interaction)) {
      case EdgeClass::Positive: ++s.positive; break;
      case EdgeClass::Negative: ++s.negative; break;
      case EdgeClass::Neutral: ++s.neutral; break;
      case EdgeClass::Uncolored: break;
    }
  }
  s.colored = s.positive + s.negative + s.neutral;
  s.uncolored = s.total_pairs - s.colored;
  s.negative_share = s.colored == 0 ? 0.0
                                    : static_cast<double>(s.negative) /
                                          static_cast<double>(s.colored);
  return s;
}

std::vector<Interaction> ugly_edges(const GraphSnapshot& graph) {
  std::vector<Interaction> out;
  for (const auto& [key, interaction] : graph.interactions()) {
    if (classify(interaction) == EdgeClass::Negative) out.push_back(interaction);
  }
  // Stable sort over map order keeps pair order on ties.
  std::stable_sort(out.begin(), out.end(), [](const Interaction& a, const Interaction& b) {
    return a.score->value() < b.score->value();
  });
  return out;
}

std::set<TargetCode> ugly_targets(const GraphSnapshot& graph) {
  std::set<TargetCode> out;
  for (const auto& [key, interaction] : graph.interactions()) {
    if (classify(interaction) == EdgeClass::Negative) {
      out.insert(key.lo());
      out.insert(key.hi());
    }
  }
  return out;
}

std::set<TargetCode> beautiful_targets(const GraphSnapshot& graph, BeautyPolicy policy) {
  const int threshold = policy_threshold(policy);
  std::map<TargetCode, bool> passing;  // seen with a colored edge -> all pass
  for (const auto& [key, interaction] : graph.interactions()) {
    if (!interaction.colored()) continue;
    const bool ok = interaction.score->value() >= threshold;
    for (const TargetCode& end : {key.lo(), key.hi()}) {
      auto [it, inserted] = passing.emplace(end, ok);
      if (!inserted) it->second = it->second && ok;
    }
  }
  std::set<TargetCode> out;
  for (const auto& [code, ok] : passing) {
    if (ok) out.insert(code);
  }
  return out;
}

GraphSnapshot beautiful_subgraph(const GraphSnapshot& graph, BeautyPolicy policy) {
  const int threshold = policy_threshold(policy);
  const auto members = beautiful_targets(graph, policy);
  std::vector<Target> targets;
  for (const auto& t : graph.targets()) {
    if (members.contains(t.code)) targets.push_back(t);
  }
  std::vector<Interaction> edges;
  for (const auto& [key, interaction] : graph.interactions()) {
    if (interaction.colored() && interaction.score->value() >= threshold &&
        members.contains(key.lo()) && members.contains(key.hi())) {
      edges.push_back(interaction);
    }
  }
  return GraphSnapshot(std::move(targets), std::move(edges));
}

std::vector<NegativeCount> rank_by_negative(const GraphSnapshot& graph) {
  std::map<TargetCode, std::size_t> counts;
  for (const auto& [key, interaction] : graph.interactions()) {
    if (classify(interaction) == EdgeClass::Negative) {
      ++counts[key.lo()];
      ++counts[key.hi()];
    }
  }
  std::vector<NegativeCount> out;
  out.reserve(counts.size());
  for (const auto& [code, count] : counts) out.push_back({code, count});
  std::stable_sort(out.begin(), out.end(),
                   [](const NegativeCount& a, const NegativeCount& b) {
                     return a.count > b.count;
                   });
  return out;
}

}  // namespace sdgnet
