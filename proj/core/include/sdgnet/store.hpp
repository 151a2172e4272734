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
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdgnet/catalog.hpp"
#include "sdgnet/graph.hpp"
#include "sdgnet/time.hpp"

struct sqlite3;
struct sqlite3_stmt;

namespace sdgnet::store {

class Statement {
 public:
  Statement(sqlite3* db, std::string_view sql);
  ~Statement();
  Statement(Statement&& other) noexcept;
  Statement& operator=(Statement&&) = delete;
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& bind(int index, std::int64_t value);
  Statement& bind(int index, int value) { return bind(index, static_cast<std::int64_t>(value)); }
  Statement& bind(int index, std::string_view value);
  Statement& bind(int index, const char* value) { return bind(index, std::string_view(value)); }
  Statement& bind(int index, const std::string& value) { return bind(index, std::string_view(value)); }
  Statement& bind_null(int index);
  template <class T>
  Statement& bind(int index, const std::optional<T>& value) {
    return value ? bind(index, *value) : bind_null(index);
  }

  /// Advances; true while a row is available. Constraint failures surface as
  /// Error(Duplicate) for unique/primary keys and Error(InvalidInput) for
  /// CHECK constraints.
  bool step();
  /// Runs a statement that returns no rows.
  void run();
  void reset();

  bool is_null(int column) const;
  std::int64_t int64(int column) const;
  std::string text(int column) const;
  std::optional<std::string> optional_text(int column) const;
  std::optional<std::int64_t> optional_int64(int column) const;

 private:
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

/// One SQLite connection. Every access goes through transaction(), which
/// holds the connection mutex, so concurrent callers are serialized and each
/// transaction is atomic. Nested calls join the outer transaction.
class Database {
 public:
  /// ":memory:" gives a private in-memory database. Creates the schema.
  explicit Database(const std::string& path = ":memory:");
  ~Database();
  Database(const Database&) = delete;
  Database& operator=(const Database&) = delete;

  template <class F>
  decltype(auto) transaction(F&& body) {
    std::lock_guard lock(mutex_);
    Scope scope(*this);
    if constexpr (std::is_void_v<decltype(body())>) {
      body();
      scope.commit();
    } else {
      decltype(auto) result = body();
      scope.commit();
      return result;
    }
  }

  void exec(std::string_view sql);
  Statement prepare(std::string_view sql);
  std::int64_t last_insert_id() const;
  /// Rows changed by the most recent statement.
  int changes() const;

 private:
  class Scope {
   public:
    explicit Scope(Database& db);
    ~Scope();
    void commit();

   private:
    Database& db_;
    bool done_ = false;
  };

  sqlite3* db_ = nullptr;
  std::recursive_mutex mutex_;
  int depth_ = 0;
};

/// A persisted colored interaction.
struct AnswerRecord {
  PairKey pair;
  InteractionScore score;
  std::string explanation;
  std::string mitigation;
  UserId scorer = 0;
  /// Verbatim scorer display carried over from an imported file.
  std::optional<std::string> attribution;
  Timestamp scored_at;
};

/// Writes the catalog into sdg_targets. Re-seeding the identical catalog is a
/// no-op; any different catalog is rejected with Error(InvalidState).
void seed_catalog(Database& db, const Catalog& catalog);

/// The seeded catalog, or an empty one before seeding.
Catalog load_catalog(Database& db);

/// Enforced by the primary key on (lo, hi): a second insert for the same
/// pair throws Error(AlreadyScored) even without application checks.
void insert_answer(Database& db, const AnswerRecord& answer);

std::optional<AnswerRecord> find_answer(Database& db, const PairKey& pair);

/// All answers in canonical pair order.
std::vector<AnswerRecord> answers(Database& db);

GraphSnapshot load_snapshot(Database& db, const Catalog& catalog);

/// Deletes answers and assignments; users and catalog stay.
void wipe_answers(Database& db);

}  // namespace sdgnet::store
