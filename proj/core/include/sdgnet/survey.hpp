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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sdgnet/catalog.hpp"
#include "sdgnet/graph.hpp"
#include "sdgnet/store.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {

inline constexpr int kMinYearsExperience = 5;

enum class UserStatus { Pending, Approved };
enum class Role { Expert, Admin, System };

std::string_view to_string(UserStatus status) noexcept;
std::string_view to_string(Role role) noexcept;

struct ExpertUser {
  UserId id = 0;
  std::string login;
  std::string full_name;
  std::string education;
  int years_experience = 0;
  std::string affiliations;
  bool acknowledge = false;
  std::optional<UserId> curator;
  UserStatus status = UserStatus::Pending;
  Role role = Role::Expert;
};

/// Throws Error(NotFound).
ExpertUser load_user(store::Database& db, UserId id);
std::optional<ExpertUser> find_user_by_login(store::Database& db, std::string_view login);

enum class AssignmentState { Pending, Skipped, Answered };

std::string_view to_string(AssignmentState state) noexcept;

struct Assignment {
  UserId user = 0;
  PairKey pair;
  AssignmentState state = AssignmentState::Pending;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Progress {
  std::size_t answered = 0;
  std::size_t skipped = 0;
  std::size_t pending = 0;

  std::size_t total() const noexcept { return answered + skipped + pending; }
  friend bool operator==(const Progress&, const Progress&) = default;
};

// Workflow rules, independent of storage.

/// Pairs with both endpoints among the targets of `goals`, minus
/// `unavailable`, in canonical order. Throws Error(InvalidInput) for an empty
/// selection and Error(NotFound) for an unknown goal.
std::vector<PairKey> plan_assignments(const Catalog& catalog, const std::set<int>& goals,
                                      const std::set<PairKey>& unavailable);

/// Score in [-3, +3]; negative scores need a non-blank explanation and
/// mitigation. Throws Error(InvalidScore) or Error(MissingMitigation).
void validate_answer(int score, std::string_view explanation, std::string_view mitigation);

/// Pending and Skipped become Skipped; Answered is terminal.
AssignmentState after_skip(AssignmentState state);

/// Assignment and scoring workflow over the persistent store.
///
/// Each operation runs in one database transaction, so outcomes per pair are
/// linearizable: at most one submit_answer ever succeeds for a pair and no
/// pair is bound to two users.
class Survey {
 public:
  Survey(store::Database& db, const Catalog& catalog, Clock clock = system_clock());

  /// Adds `goals` to the user's stored selection and generates assignments
  /// for the whole union. Returns the new assignments.
  std::vector<Assignment> select_goals(UserId user, const std::set<int>& goals);
  std::set<int> selected_goals(UserId user);

  /// Binds every unclaimed, uncolored pair inside `goals` to `user`.
  /// Throws Error(NotApproved) for pending users.
  std::vector<Assignment> generate_assignments(UserId user, const std::set<int>& goals);

  Interaction submit_answer(UserId user, const PairKey& pair, int score,
                            std::string explanation = {}, std::string mitigation = {});

  Assignment skip(UserId user, const PairKey& pair);

  Progress progress(UserId user);

  /// The user's assignments in canonical pair order.
  std::vector<Assignment> assignments(UserId user);
  std::vector<Assignment> all_assignments();

  /// Up to `limit` open assignments: pending ones first, then skipped ones.
  std::vector<Assignment> next(UserId user, std::size_t limit);

 private:
  store::Database& db_;
  const Catalog& catalog_;
  Clock clock_;
};

}  // namespace sdgnet
