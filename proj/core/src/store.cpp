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

#include "sdgnet/store.hpp"

#include <sqlite3.h>

#include <algorithm>

#include "sdgnet/error.hpp"

namespace sdgnet::store {

namespace {

constexpr std::string_view kSchema = R"sql(
PRAGMA foreign_keys = ON;

CREATE TABLE IF NOT EXISTS users (
  id               INTEGER PRIMARY KEY,
  login            TEXT NOT NULL UNIQUE,
  secret_hash      TEXT,
  full_name        TEXT NOT NULL,
  education        TEXT NOT NULL DEFAULT '',
  years_experience INTEGER NOT NULL CHECK (years_experience >= 0),
  affiliations     TEXT NOT NULL DEFAULT '',
  acknowledge      INTEGER NOT NULL DEFAULT 0,
  curator_id       INTEGER REFERENCES users(id),
  status           TEXT NOT NULL CHECK (status IN ('pending', 'approved')),
  role             TEXT NOT NULL CHECK (role IN ('expert', 'admin', 'system')),
  created_at       TEXT NOT NULL
);

CREATE TABLE IF NOT EXISTS sdg_targets (
  code        TEXT PRIMARY KEY,
  position    INTEGER NOT NULL UNIQUE,
  goal_id     INTEGER NOT NULL CHECK (goal_id BETWEEN 1 AND 17),
  goal_name   TEXT NOT NULL,
  description TEXT NOT NULL CHECK (length(description) > 0)
);

CREATE TABLE IF NOT EXISTS user_goal_selections (
  user_id INTEGER NOT NULL REFERENCES users(id),
  goal_id INTEGER NOT NULL CHECK (goal_id BETWEEN 1 AND 17),
  PRIMARY KEY (user_id, goal_id)
);

CREATE TABLE IF NOT EXISTS survey_answers (
  lo          TEXT NOT NULL REFERENCES sdg_targets(code),
  hi          TEXT NOT NULL REFERENCES sdg_targets(code),
  score       INTEGER NOT NULL CHECK (score BETWEEN -3 AND 3),
  explanation TEXT NOT NULL DEFAULT '',
  mitigation  TEXT NOT NULL DEFAULT '',
  scorer_id   INTEGER NOT NULL REFERENCES users(id),
  attribution TEXT,
  scored_at   TEXT NOT NULL,
  PRIMARY KEY (lo, hi),
  CHECK (score >= 0 OR (length(explanation) > 0 AND length(mitigation) > 0))
);

CREATE TABLE IF NOT EXISTS assignments (
  lo      TEXT NOT NULL REFERENCES sdg_targets(code),
  hi      TEXT NOT NULL REFERENCES sdg_targets(code),
  user_id INTEGER NOT NULL REFERENCES users(id),
  state   TEXT NOT NULL CHECK (state IN ('pending', 'skipped', 'answered')),
  seq     INTEGER NOT NULL,
  PRIMARY KEY (lo, hi)
);
CREATE INDEX IF NOT EXISTS assignments_by_user ON assignments(user_id, seq);

CREATE TABLE IF NOT EXISTS sessions (
  token_hash TEXT PRIMARY KEY,
  user_id    INTEGER NOT NULL REFERENCES users(id),
  expires_at TEXT NOT NULL
);

CREATE TABLE IF NOT EXISTS notifications (
  id           INTEGER PRIMARY KEY,
  recipient_id INTEGER REFERENCES users(id),
  subject_id   INTEGER NOT NULL REFERENCES users(id),
  kind         TEXT NOT NULL,
  created_at   TEXT NOT NULL
);
)sql";

[[noreturn]] void fail(sqlite3* db, int rc, std::string_view what) {
  const std::string message = std::string(what) + ": " +
                              (db ? sqlite3_errmsg(db) : sqlite3_errstr(rc));
  switch (rc & 0xff) {
    case SQLITE_CONSTRAINT:
      if (rc == SQLITE_CONSTRAINT_PRIMARYKEY || rc == SQLITE_CONSTRAINT_UNIQUE) {
        throw Error(Errc::Duplicate, message);
      }
      throw Error(Errc::InvalidInput, message);
    case SQLITE_CANTOPEN:
    case SQLITE_IOERR:
      throw Error(Errc::Io, message);
    default:
      throw Error(Errc::Storage, message);
  }
}

}  // namespace

Statement::Statement(sqlite3* db, std::string_view sql) : db_(db) {
  const int rc = sqlite3_prepare_v2(db_, sql.data(), static_cast<int>(sql.size()),
                                    &stmt_, nullptr);
  if (rc != SQLITE_OK) fail(db_, rc, "prepare");
}

Statement::~Statement() { sqlite3_finalize(stmt_); }

Statement::Statement(Statement&& other) noexcept
    : db_(other.db_), stmt_(std::exchange(other.stmt_, nullptr)) {}

Statement& Statement::bind(int index, std::int64_t value) {
  const int rc = sqlite3_bind_int64(stmt_, index, value);
  if (rc != SQLITE_OK) fail(db_, rc, "bind");
  return *this;
}

Statement& Statement::bind(int index, std::string_view value) {
  const int rc = sqlite3_bind_text(stmt_, index, value.data(),
                                   static_cast<int>(value.size()), SQLITE_TRANSIENT);
  if (rc != SQLITE_OK) fail(db_, rc, "bind");
  return *this;
}

Statement& Statement::bind_null(int index) {
  const int rc = sqlite3_bind_null(stmt_, index);
  if (rc != SQLITE_OK) fail(db_, rc, "bind");
  return *this;
}

bool Statement::step() {
  const int rc = sqlite3_step(stmt_);
  if (rc == SQLITE_ROW) return true;
  if (rc == SQLITE_DONE) return false;
  const int extended = sqlite3_extended_errcode(db_);
  sqlite3_reset(stmt_);
  fail(db_, extended, "step");
}

void Statement::run() {
  while (step()) {
  }
}

void Statement::reset() {
  sqlite3_reset(stmt_);
  sqlite3_clear_bindings(stmt_);
}

bool Statement::is_null(int column) const {
  return sqlite3_column_type(stmt_, column) == SQLITE_NULL;
}

std::int64_t Statement::int64(int column) const {
  return sqlite3_column_int64(stmt_, column);
}

std::string Statement::text(int column) const {
  const auto* p = sqlite3_column_text(stmt_, column);
  const int n = sqlite3_column_bytes(stmt_, column);
  return p ? std::string(reinterpret_cast<const char*>(p), static_cast<std::size_t>(n))
           : std::string{};
}

std::optional<std::string> Statement::optional_text(int column) const {
  if (is_null(column)) return std::nullopt;
  return text(column);
}

std::optional<std::int64_t> Statement::optional_int64(int column) const {
  if (is_null(column)) return std::nullopt;
  return int64(column);
}

Database::Database(const std::string& path) {
  const int flags = SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX;
  const int rc = sqlite3_open_v2(path.c_str(), &db_, flags, nullptr);
  if (rc != SQLITE_OK) {
    const std::string message = "cannot open database '" + path + "': " +
                                (db_ ? sqlite3_errmsg(db_) : sqlite3_errstr(rc));
    sqlite3_close(db_);
    db_ = nullptr;
    throw Error(Errc::Io, message);
  }
  sqlite3_busy_timeout(db_, 5000);
  exec(kSchema);
}

Database::~Database() { sqlite3_close(db_); }

void Database::exec(std::string_view sql) {
  const std::string owned(sql);
  char* err = nullptr;
  const int rc = sqlite3_exec(db_, owned.c_str(), nullptr, nullptr, &err);
  if (rc != SQLITE_OK) {
    std::string message = err ? err : sqlite3_errstr(rc);
    sqlite3_free(err);
    fail(nullptr, sqlite3_extended_errcode(db_), "exec: " + message);
  }
}

Statement Database::prepare(std::string_view sql) { return Statement(db_, sql); }

std::int64_t Database::last_insert_id() const { return sqlite3_last_insert_rowid(db_); }

int Database::changes() const { return sqlite3_changes(db_); }

Database::Scope::Scope(Database& db) : db_(db) {
  if (db_.depth_++ == 0) db_.exec("BEGIN IMMEDIATE");
}

void Database::Scope::commit() {
  if (db_.depth_ == 1) db_.exec("COMMIT");
  --db_.depth_;
  done_ = true;
}

Database::Scope::~Scope() {
  if (done_) return;
  if (--db_.depth_ == 0) sqlite3_exec(db_.db_, "ROLLBACK", nullptr, nullptr, nullptr);
}

void seed_catalog(Database& db, const Catalog& catalog) {
  db.transaction([&] {
    const Catalog existing = load_catalog(db);
    if (!existing.empty()) {
      bool same = existing.size() == catalog.size();
      for (std::size_t i = 0; same && i < catalog.size(); ++i) {
        same = existing.targets()[i].code == catalog.targets()[i].code &&
               existing.targets()[i].description == catalog.targets()[i].description;
      }
      if (!same) {
        throw Error(Errc::InvalidState,
                    "database already holds a different catalog; catalogs are immutable");
      }
      return;
    }
    auto insert = db.prepare(
        "INSERT INTO sdg_targets (code, position, goal_id, goal_name, description) "
        "VALUES (?1, ?2, ?3, ?4, ?5)");
    std::int64_t position = 0;
    for (const auto& t : catalog.targets()) {
      const Goal* g = catalog.goal(t.code.goal());
      insert.bind(1, t.code.str())
          .bind(2, position++)
          .bind(3, t.code.goal())
          .bind(4, g->name)
          .bind(5, t.description);
      insert.run();
      insert.reset();
    }
  });
}

Catalog load_catalog(Database& db) {
  return db.transaction([&] {
    auto query = db.prepare(
        "SELECT goal_id, code, goal_name, description FROM sdg_targets ORDER BY position");
    std::vector<Goal> goals;
    std::vector<Target> targets;
    while (query.step()) {
      const int goal_id = static_cast<int>(query.int64(0));
      if (std::none_of(goals.begin(), goals.end(),
                       [&](const Goal& g) { return g.id == goal_id; })) {
        goals.push_back({goal_id, query.text(2)});
      }
      targets.push_back({parse_target_code(query.text(1)), query.text(3)});
    }
    std::sort(goals.begin(), goals.end(),
              [](const Goal& a, const Goal& b) { return a.id < b.id; });
    return Catalog(std::move(goals), std::move(targets));
  });
}

void insert_answer(Database& db, const AnswerRecord& answer) {
  db.transaction([&] {
    auto insert = db.prepare(
        "INSERT INTO survey_answers "
        "(lo, hi, score, explanation, mitigation, scorer_id, attribution, scored_at) "
        "VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8)");
    insert.bind(1, answer.pair.lo().str())
        .bind(2, answer.pair.hi().str())
        .bind(3, answer.score.value())
        .bind(4, answer.explanation)
        .bind(5, answer.mitigation)
        .bind(6, answer.scorer)
        .bind(7, answer.attribution)
        .bind(8, format_iso8601(answer.scored_at));
    try {
      insert.run();
    } catch (const Error& e) {
      if (e.code() == Errc::Duplicate) {
        throw Error(Errc::AlreadyScored,
                    "pair " + answer.pair.str() + " has already been scored");
      }
      if (e.code() == Errc::InvalidInput && answer.score.value() < 0) {
        throw Error(Errc::MissingMitigation,
                    "negative score on " + answer.pair.str() +
                        " requires an explanation and a mitigation");
      }
      throw;
    }
  });
}

namespace {

constexpr std::string_view kAnswerColumns =
    "SELECT lo, hi, score, explanation, mitigation, scorer_id, attribution, scored_at "
    "FROM survey_answers";

AnswerRecord read_answer(const Statement& row) {
  return AnswerRecord{
      PairKey(parse_target_code(row.text(0)), parse_target_code(row.text(1))),
      InteractionScore(static_cast<int>(row.int64(2))),
      row.text(3),
      row.text(4),
      row.int64(5),
      row.optional_text(6),
      parse_iso8601(row.text(7)),
  };
}

}  // namespace

std::optional<AnswerRecord> find_answer(Database& db, const PairKey& pair) {
  return db.transaction([&]() -> std::optional<AnswerRecord> {
    auto query = db.prepare(std::string(kAnswerColumns) + " WHERE lo = ?1 AND hi = ?2");
    query.bind(1, pair.lo().str()).bind(2, pair.hi().str());
    if (!query.step()) return std::nullopt;
    return read_answer(query);
  });
}

std::vector<AnswerRecord> answers(Database& db) {
  auto out = db.transaction([&] {
    std::vector<AnswerRecord> rows;
    auto query = db.prepare(kAnswerColumns);
    while (query.step()) rows.push_back(read_answer(query));
    return rows;
  });
  std::sort(out.begin(), out.end(),
            [](const AnswerRecord& a, const AnswerRecord& b) { return a.pair < b.pair; });
  return out;
}

GraphSnapshot load_snapshot(Database& db, const Catalog& catalog) {
  std::vector<Interaction> interactions;
  for (auto& a : answers(db)) {
    interactions.push_back(Interaction{a.pair, a.score, std::move(a.explanation),
                                       std::move(a.mitigation), a.scorer, a.scored_at});
  }
  return GraphSnapshot(catalog.targets(), std::move(interactions));
}

void wipe_answers(Database& db) {
  db.transaction([&] {
    db.exec("DELETE FROM survey_answers");
    db.exec("DELETE FROM assignments");
  });
}

}  // namespace sdgnet::store
