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

#include <chrono>
#include <iosfwd>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "sdgnet/accounts.hpp"
#include "sdgnet/catalog.hpp"
#include "sdgnet/reports.hpp"
#include "sdgnet/store.hpp"
#include "sdgnet/survey.hpp"

namespace sdgnet {

struct ServiceConfig {
  /// A file path, "sqlite://<path>", or ":memory:".
  std::string database_url = "sdgnet.db";
  std::string listen_address = "127.0.0.1:8080";
  AccountsConfig accounts;

  /// Reads SDGNET_DATABASE_URL, SDGNET_LISTEN and SDGNET_SESSION_TTL
  /// (seconds), keeping defaults for unset variables.
  static ServiceConfig from_env();
};

/// Strips an optional sqlite:// prefix.
std::string database_path(const std::string& url);

/// The survey platform: persistence, accounts, workflow and reports.
class Service {
 public:
  explicit Service(const ServiceConfig& config, Clock clock = system_clock());
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  store::Database& db() { return db_; }
  const Catalog& catalog() const { return catalog_; }
  Accounts& accounts() { return accounts_; }
  Survey& survey() { return survey_; }

  /// Persists the catalog (once) and makes it current.
  void seed(const Catalog& catalog);

  GraphSnapshot snapshot();

  /// Targets of 1-2 goals and every pair among them, uncolored included.
  /// Throws Error(InvalidInput) for zero or more than two goals.
  nlohmann::json public_graph(const std::set<int>& goals);

  nlohmann::json report(ReportKind kind, const ReportOptions& options = {});

  /// Admin only; Error(Forbidden) otherwise.
  std::string export_csv(UserId caller);

  std::size_t import_edges(std::istream& in);

 private:
  void require_admin(UserId caller);

  store::Database db_;
  Catalog catalog_;
  Clock clock_;
  Accounts accounts_;
  Survey survey_;
};

}  // namespace sdgnet
