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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sdgnet {

inline constexpr int kGoalCount = 17;
inline constexpr std::size_t kOfficialTargetCount = 169;

/// Identifies one SDG target, e.g. "13.1", "16.B" or "17.15".
///
/// A suffix is either a positive number or one of the letters A-D. Codes are
/// totally ordered by goal, then numeric suffixes ascending, then letter
/// suffixes ascending, so 13.1 < 13.3 < 13.A < 13.B.
class TargetCode {
 public:
  TargetCode() = default;

  static TargetCode numbered(int goal, int number);
  static TargetCode lettered(int goal, char letter);

  int goal() const noexcept { return goal_; }
  bool has_letter() const noexcept { return rank_ >= kLetterBase; }
  int number() const noexcept { return has_letter() ? 0 : rank_; }
  char letter() const noexcept {
    return has_letter() ? static_cast<char>('A' + rank_ - kLetterBase) : '\0';
  }

  std::string str() const;

  friend auto operator<=>(const TargetCode&, const TargetCode&) = default;

 private:
  static constexpr int kLetterBase = 1 << 20;

  TargetCode(int goal, int rank) : goal_(goal), rank_(rank) {}

  int goal_ = 0;
  int rank_ = 0;
};

/// Parses "<goal>.<suffix>". Letter suffixes are case-insensitive and
/// canonicalized to uppercase. Throws Error(InvalidInput) on malformed text.
TargetCode parse_target_code(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TargetCode& code);

struct Goal {
  int id = 0;
  std::string name;
};

struct Target {
  TargetCode code;
  std::string description;
};

/// The immutable node set: goals plus targets in file order.
class Catalog {
 public:
  Catalog() = default;
  /// Validates every invariant; throws Error on the first violation.
  Catalog(std::vector<Goal> goals, std::vector<Target> targets);

  const std::vector<Goal>& goals() const noexcept { return goals_; }
  const std::vector<Target>& targets() const noexcept { return targets_; }
  std::size_t size() const noexcept { return targets_.size(); }
  bool empty() const noexcept { return targets_.empty(); }

  const Target* find(const TargetCode& code) const;
  const Goal* goal(int id) const;
  bool contains(const TargetCode& code) const { return find(code) != nullptr; }

  /// "13.1 Climate Action", or just the code when the goal is unknown.
  std::string label(const TargetCode& code) const;

 private:
  std::vector<Goal> goals_;
  std::vector<Target> targets_;
  std::map<TargetCode, std::size_t> index_;
};

/// Reads the `goal_id,target_code,goal_name,description` CSV format.
/// Any invalid row rejects the whole source; the message names the line.
Catalog parse_catalog(std::istream& in, std::string_view source_name = "catalog");
Catalog load_catalog(const std::filesystem::path& path);

/// Writes the same CSV format parse_catalog reads.
void write_catalog(std::ostream& out, const Catalog& catalog);

/// Targets whose goal is in `goals`, in canonical code order.
std::vector<Target> targets_for_goals(const Catalog& catalog,
                                      const std::set<int>& goals);

}  // namespace sdgnet

template <>
struct std::hash<sdgnet::TargetCode> {
  std::size_t operator()(const sdgnet::TargetCode& code) const noexcept {
    return std::hash<std::string>{}(code.str());
  }
};
