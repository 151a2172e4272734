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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgnet/catalog.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {

using UserId = std::int64_t;

/// Seven-point interaction scale, -3 (cancelling) to +3 (indivisible).
enum class ScaleLabel {
  Cancelling = -3,
  Counteracting = -2,
  Constraining = -1,
  Consistent = 0,
  Enabling = 1,
  Reinforcing = 2,
  Indivisible = 3,
};

std::string_view to_string(ScaleLabel label) noexcept;

class InteractionScore {
 public:
  static constexpr int kMin = -3;
  static constexpr int kMax = 3;

  /// Throws Error(InvalidScore) outside [-3, +3].
  explicit InteractionScore(int value);

  static bool valid(int value) noexcept { return value >= kMin && value <= kMax; }

  int value() const noexcept { return value_; }
  ScaleLabel label() const noexcept { return static_cast<ScaleLabel>(value_); }

  friend auto operator<=>(const InteractionScore&, const InteractionScore&) = default;

 private:
  int value_;
};

/// Unordered target pair in canonical form (lo < hi).
class PairKey {
 public:
  /// Throws Error(InvalidInput) when a == b.
  PairKey(const TargetCode& a, const TargetCode& b);

  /// Accepts "13.1-14.C" in either order.
  static PairKey parse(std::string_view text);

  const TargetCode& lo() const noexcept { return lo_; }
  const TargetCode& hi() const noexcept { return hi_; }
  bool touches(const TargetCode& code) const noexcept {
    return lo_ == code || hi_ == code;
  }
  const TargetCode& other(const TargetCode& code) const noexcept {
    return lo_ == code ? hi_ : lo_;
  }

  std::string str() const { return lo_.str() + '-' + hi_.str(); }

  friend auto operator<=>(const PairKey&, const PairKey&) = default;

 private:
  TargetCode lo_;
  TargetCode hi_;
};

struct Interaction {
  PairKey key;
  std::optional<InteractionScore> score;  // present iff colored
  std::string explanation;
  std::string mitigation;
  std::optional<UserId> scorer;
  std::optional<Timestamp> scored_at;

  bool colored() const noexcept { return score.has_value(); }

  static Interaction uncolored(const PairKey& key) { return Interaction{key, {}, {}, {}, {}, {}}; }
};

enum class EdgeClass { Positive, Negative, Neutral, Uncolored };

std::string_view to_string(EdgeClass c) noexcept;

EdgeClass classify(const std::optional<InteractionScore>& score) noexcept;
inline EdgeClass classify(const Interaction& interaction) noexcept {
  return classify(interaction.score);
}

/// Which colored edges count as "beautiful".
enum class BeautyPolicy {
  StrictPositive,  // every colored incident edge scores >= +1
  NonNegative,     // every colored incident edge scores >= 0
};

std::string_view to_string(BeautyPolicy policy) noexcept;
/// "strict" / "nonnegative" (also accepts "strict-positive", "non-negative").
BeautyPolicy parse_beauty_policy(std::string_view text);

/// Immutable colored-graph view shared by every analytic.
///
/// Targets are kept in canonical code order. Interactions not present in the
/// map are uncolored; the map may also hold explicit uncolored entries.
class GraphSnapshot {
 public:
  GraphSnapshot() = default;
  /// Throws Error when an interaction endpoint is not among `targets`, a key
  /// repeats, or a target code repeats.
  GraphSnapshot(std::vector<Target> targets, std::vector<Interaction> interactions);

  const std::vector<Target>& targets() const noexcept { return targets_; }
  const std::map<PairKey, Interaction>& interactions() const noexcept {
    return interactions_;
  }

  std::size_t node_count() const noexcept { return targets_.size(); }
  bool contains(const TargetCode& code) const;
  /// Position in targets(), or npos.
  std::size_t index_of(const TargetCode& code) const;
  const Interaction* find(const PairKey& key) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Target> targets_;
  std::map<PairKey, Interaction> interactions_;
};

struct SummaryStats {
  std::size_t total_pairs = 0;
  std::size_t colored = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t neutral = 0;
  std::size_t uncolored = 0;
  double negative_share = 0.0;  // negative / colored, 0 when nothing is colored

  /// negative_share in percent, rounded to two decimals.
  double negative_percent() const;
};

struct NegativeCount {
  TargetCode code;
  std::size_t count = 0;

  friend bool operator==(const NegativeCount&, const NegativeCount&) = default;
};

/// Every unordered pair of distinct codes, canonical order.
/// Throws Error(Duplicate) when codes repeat.
std::vector<PairKey> all_pairs(std::span<const Target> targets);

SummaryStats summarize(const GraphSnapshot& graph);

/// Negative interactions, most negative first, ties by pair order.
std::vector<Interaction> ugly_edges(const GraphSnapshot& graph);

/// Targets incident to at least one negative interaction.
std::set<TargetCode> ugly_targets(const GraphSnapshot& graph);

/// Targets with at least one colored incident edge, all of which pass the
/// policy threshold. Uncolored edges are ignored.
std::set<TargetCode> beautiful_targets(const GraphSnapshot& graph,
                                       BeautyPolicy policy = BeautyPolicy::StrictPositive);

/// Induced subgraph on beautiful_targets keeping the colored edges that pass
/// the policy threshold. Beautiful targets left without edges stay as
/// isolated nodes.
GraphSnapshot beautiful_subgraph(const GraphSnapshot& graph,
                                 BeautyPolicy policy = BeautyPolicy::StrictPositive);

/// Targets with >= 1 negative edge, by descending count then code.
std::vector<NegativeCount> rank_by_negative(const GraphSnapshot& graph);

}  // namespace sdgnet
