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

#include "sdgnet/survey.hpp"

#include <algorithm>
#include <cctype>

#include "sdgnet/error.hpp"

namespace sdgnet {

std::string_view to_string(UserStatus status) noexcept {
  return status == UserStatus::Approved ? "approved" : "pending";
}

std::string_view to_string(Role role) noexcept {
  switch (role) {
    case Role::Expert: return "expert";
    case Role::Admin: return "admin";
    case Role::System: return "system";
  }
  return "expert";
}

std::string_view to_string(AssignmentState state) noexcept {
  switch (state) {
    case AssignmentState::Pending: return "pending";
    case AssignmentState::Skipped: return "skipped";
    case AssignmentState::Answered: return "answered";
  }
  return "pending";
}

namespace {

AssignmentState parse_state(std::string_view text) {
  if (text == "skipped") return AssignmentState::Skipped;
  if (text == "answered") return AssignmentState::Answered;
  return AssignmentState::Pending;
}

Role parse_role(std::string_view text) {
  if (text == "admin") return Role::Admin;
  if (text == "system") return Role::System;
  return Role::Expert;
}

constexpr std::string_view kUserColumns =
    "SELECT id, login, full_name, education, years_experience, affiliations, "
    "acknowledge, curator_id, status, role FROM users";

ExpertUser read_user(const store::Statement& row) {
  ExpertUser u;
  u.id = row.int64(0);
  u.login = row.text(1);
  u.full_name = row.text(2);
  u.education = row.text(3);
  u.years_experience = static_cast<int>(row.int64(4));
  u.affiliations = row.text(5);
  u.acknowledge = row.int64(6) != 0;
  u.curator = row.optional_int64(7);
  u.status = row.text(8) == "approved" ? UserStatus::Approved : UserStatus::Pending;
  u.role = parse_role(row.text(9));
  return u;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

Assignment read_assignment(const store::Statement& row) {
  return Assignment{row.int64(2),
                    PairKey(parse_target_code(row.text(0)), parse_target_code(row.text(1))),
                    parse_state(row.text(3))};
}

void sort_by_pair(std::vector<Assignment>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const Assignment& a, const Assignment& b) { return a.pair < b.pair; });
}

}  // namespace

ExpertUser load_user(store::Database& db, UserId id) {
  return db.transaction([&] {
    auto query = db.prepare(std::string(kUserColumns) + " WHERE id = ?1");
    query.bind(1, id);
    if (!query.step()) throw Error(Errc::NotFound, "unknown user " + std::to_string(id));
    return read_user(query);
  });
}

std::optional<ExpertUser> find_user_by_login(store::Database& db, std::string_view login) {
  return db.transaction([&]() -> std::optional<ExpertUser> {
    auto query = db.prepare(std::string(kUserColumns) + " WHERE login = ?1");
    query.bind(1, login);
    if (!query.step()) return std::nullopt;
    return read_user(query);
  });
}

std::vector<PairKey> plan_assignments(const Catalog& catalog, const std::set<int>& goals,
                                      const std::set<PairKey>& unavailable) {
  if (goals.empty()) {
    throw Error(Errc::InvalidInput, "goal selection must not be empty");
  }
  const auto targets = targets_for_goals(catalog, goals);
  std::vector<PairKey> out;
  for (const auto& pair : all_pairs(targets)) {
    if (!unavailable.contains(pair)) out.push_back(pair);
  }
  return out;
}

void validate_answer(int score, std::string_view explanation, std::string_view mitigation) {
  if (!InteractionScore::valid(score)) {
    throw Error(Errc::InvalidScore,
                "score must be in [-3, +3], got " + std::to_string(score));
  }
  if (score < 0 && (blank(explanation) || blank(mitigation))) {
    throw Error(Errc::MissingMitigation,
                "a negative score requires both an explanation and a mitigation");
  }
}

AssignmentState after_skip(AssignmentState state) {
  if (state == AssignmentState::Answered) {
    throw Error(Errc::InvalidState, "an answered pair cannot be skipped");
  }
  return AssignmentState::Skipped;
}

Survey::Survey(store::Database& db, const Catalog& catalog, Clock clock)
    : db_(db), catalog_(catalog), clock_(std::move(clock)) {}

std::vector<Assignment> Survey::select_goals(UserId user, const std::set<int>& goals) {
  return db_.transaction([&] {
    if (goals.empty()) throw Error(Errc::InvalidInput, "goal selection must not be empty");
    for (int g : goals) {
      if (catalog_.goal(g) == nullptr) {
        throw Error(Errc::NotFound, "unknown goal id " + std::to_string(g));
      }
    }
    const ExpertUser u = load_user(db_, user);
    if (u.status != UserStatus::Approved) {
      throw Error(Errc::NotApproved, "user " + u.login + " is not approved");
    }
    auto insert = db_.prepare(
        "INSERT OR IGNORE INTO user_goal_selections (user_id, goal_id) VALUES (?1, ?2)");
    for (int g : goals) {
      insert.bind(1, user).bind(2, g);
      insert.run();
      insert.reset();
    }
    return generate_assignments(user, selected_goals(user));
  });
}

std::set<int> Survey::selected_goals(UserId user) {
  return db_.transaction([&] {
    std::set<int> out;
    auto query = db_.prepare("SELECT goal_id FROM user_goal_selections WHERE user_id = ?1");
    query.bind(1, user);
    while (query.step()) out.insert(static_cast<int>(query.int64(0)));
    return out;
  });
}

std::vector<Assignment> Survey::generate_assignments(UserId user, const std::set<int>& goals) {
  return db_.transaction([&] {
    const ExpertUser u = load_user(db_, user);
    if (u.status != UserStatus::Approved) {
      throw Error(Errc::NotApproved, "user " + u.login + " is not approved");
    }

    std::set<PairKey> unavailable;
    for (auto* sql : {"SELECT lo, hi FROM survey_answers", "SELECT lo, hi FROM assignments"}) {
      auto query = db_.prepare(sql);
      while (query.step()) {
        unavailable.emplace(parse_target_code(query.text(0)), parse_target_code(query.text(1)));
      }
    }
    const auto pairs = plan_assignments(catalog_, goals, unavailable);

    auto seq_query = db_.prepare("SELECT COALESCE(MAX(seq), 0) FROM assignments");
    seq_query.step();
    std::int64_t seq = seq_query.int64(0);

    auto insert = db_.prepare(
        "INSERT INTO assignments (lo, hi, user_id, state, seq) VALUES (?1, ?2, ?3, 'pending', ?4)");
    std::vector<Assignment> created;
    created.reserve(pairs.size());
    for (const auto& pair : pairs) {
      insert.bind(1, pair.lo().str()).bind(2, pair.hi().str()).bind(3, user).bind(4, ++seq);
      insert.run();
      insert.reset();
      created.push_back({user, pair, AssignmentState::Pending});
    }
    return created;
  });
}

Interaction Survey::submit_answer(UserId user, const PairKey& pair, int score,
                                  std::string explanation, std::string mitigation) {
  validate_answer(score, explanation, mitigation);
  return db_.transaction([&] {
    const ExpertUser u = load_user(db_, user);
    if (u.status != UserStatus::Approved) {
      throw Error(Errc::NotApproved, "user " + u.login + " is not approved");
    }
    if (store::find_answer(db_, pair)) {
      throw Error(Errc::AlreadyScored, "pair " + pair.str() + " has already been scored");
    }

    auto query = db_.prepare("SELECT user_id, state FROM assignments WHERE lo = ?1 AND hi = ?2");
    query.bind(1, pair.lo().str()).bind(2, pair.hi().str());
    if (!query.step() || query.int64(0) != user) {
      throw Error(Errc::NotAssigned, "pair " + pair.str() + " is not assigned to you");
    }
    if (parse_state(query.text(1)) == AssignmentState::Answered) {
      throw Error(Errc::AlreadyScored, "pair " + pair.str() + " has already been scored");
    }

    const Timestamp now = clock_();
    store::insert_answer(db_, store::AnswerRecord{pair, InteractionScore(score), explanation,
                                                  mitigation, user, std::nullopt, now});
    auto update = db_.prepare(
        "UPDATE assignments SET state = 'answered' WHERE lo = ?1 AND hi = ?2");
    update.bind(1, pair.lo().str()).bind(2, pair.hi().str());
    update.run();

    return Interaction{pair, InteractionScore(score), std::move(explanation),
                       std::move(mitigation), user, now};
  });
}

Assignment Survey::skip(UserId user, const PairKey& pair) {
  return db_.transaction([&] {
    auto query = db_.prepare("SELECT user_id, state FROM assignments WHERE lo = ?1 AND hi = ?2");
    query.bind(1, pair.lo().str()).bind(2, pair.hi().str());
    if (!query.step() || query.int64(0) != user) {
      throw Error(Errc::NotAssigned, "pair " + pair.str() + " is not assigned to you");
    }
    const AssignmentState next = after_skip(parse_state(query.text(1)));
    auto update = db_.prepare("UPDATE assignments SET state = ?3 WHERE lo = ?1 AND hi = ?2");
    update.bind(1, pair.lo().str()).bind(2, pair.hi().str()).bind(3, to_string(next));
    update.run();
    return Assignment{user, pair, next};
  });
}

Progress Survey::progress(UserId user) {
  return db_.transaction([&] {
    load_user(db_, user);
    Progress p;
    auto query = db_.prepare(
        "SELECT state, COUNT(*) FROM assignments WHERE user_id = ?1 GROUP BY state");
    query.bind(1, user);
    while (query.step()) {
      const auto count = static_cast<std::size_t>(query.int64(1));
      switch (parse_state(query.text(0))) {
        case AssignmentState::Pending: p.pending = count; break;
        case AssignmentState::Skipped: p.skipped = count; break;
        case AssignmentState::Answered: p.answered = count; break;
      }
    }
    return p;
  });
}

std::vector<Assignment> Survey::assignments(UserId user) {
  auto rows = db_.transaction([&] {
    std::vector<Assignment> out;
    auto query = db_.prepare("SELECT lo, hi, user_id, state FROM assignments WHERE user_id = ?1");
    query.bind(1, user);
    while (query.step()) out.push_back(read_assignment(query));
    return out;
  });
  sort_by_pair(rows);
  return rows;
}

std::vector<Assignment> Survey::all_assignments() {
  auto rows = db_.transaction([&] {
    std::vector<Assignment> out;
    auto query = db_.prepare("SELECT lo, hi, user_id, state FROM assignments");
    while (query.step()) out.push_back(read_assignment(query));
    return out;
  });
  sort_by_pair(rows);
  return rows;
}

std::vector<Assignment> Survey::next(UserId user, std::size_t limit) {
  std::vector<Assignment> open;
  for (auto& a : assignments(user)) {
    if (a.state != AssignmentState::Answered) open.push_back(std::move(a));
  }
  std::stable_partition(open.begin(), open.end(), [](const Assignment& a) {
    return a.state == AssignmentState::Pending;
  });
  if (open.size() > limit) open.erase(open.begin() + static_cast<std::ptrdiff_t>(limit), open.end());
  return open;
}

}  // namespace sdgnet
