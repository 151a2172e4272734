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

#include "sdgnet/service.hpp"

#include <cstdlib>

#include "sdgnet/error.hpp"
#include "sdgnet/graph_json.hpp"
#include "sdgnet/transfer.hpp"

namespace sdgnet {

ServiceConfig ServiceConfig::from_env() {
  ServiceConfig config;
  if (const char* url = std::getenv("SDGNET_DATABASE_URL")) config.database_url = url;
  if (const char* listen = std::getenv("SDGNET_LISTEN")) config.listen_address = listen;
  if (const char* ttl = std::getenv("SDGNET_SESSION_TTL")) {
    char* end = nullptr;
    const long long seconds = std::strtoll(ttl, &end, 10);
    if (end == ttl || *end != '\0' || seconds <= 0) {
      throw Error(Errc::InvalidInput, "SDGNET_SESSION_TTL must be a positive number of seconds");
    }
    config.accounts.session_ttl = std::chrono::seconds(seconds);
  }
  return config;
}

std::string database_path(const std::string& url) {
  constexpr std::string_view prefix = "sqlite://";
  if (url.rfind(prefix, 0) == 0) return url.substr(prefix.size());
  return url;
}

Service::Service(const ServiceConfig& config, Clock clock)
    : db_(database_path(config.database_url)),
      catalog_(store::load_catalog(db_)),
      clock_(std::move(clock)),
      accounts_(db_, config.accounts, clock_),
      survey_(db_, catalog_, clock_) {}

void Service::seed(const Catalog& catalog) {
  store::seed_catalog(db_, catalog);
  catalog_ = store::load_catalog(db_);
}

GraphSnapshot Service::snapshot() { return store::load_snapshot(db_, catalog_); }

nlohmann::json Service::public_graph(const std::set<int>& goals) {
  if (goals.empty() || goals.size() > 2) {
    throw Error(Errc::InvalidInput, "select one or two goals, got " +
                                        std::to_string(goals.size()));
  }
  const auto targets = targets_for_goals(catalog_, goals);
  const GraphSnapshot full = snapshot();
  std::vector<Interaction> inner;
  for (const auto& [key, interaction] : full.interactions()) {
    if (goals.contains(key.lo().goal()) && goals.contains(key.hi().goal())) {
      inner.push_back(interaction);
    }
  }
  auto out = graph_to_json(GraphSnapshot(targets, std::move(inner)), &catalog_,
                           GraphJsonOptions{.include_uncolored = true});
  auto selected = nlohmann::json::array();
  for (int g : goals) selected.push_back(g);
  out["goals"] = std::move(selected);
  return out;
}

nlohmann::json Service::report(ReportKind kind, const ReportOptions& options) {
  return build_report(kind, snapshot(), catalog_, options);
}

void Service::require_admin(UserId caller) {
  const ExpertUser u = load_user(db_, caller);
  if (u.role != Role::Admin || u.status != UserStatus::Approved) {
    throw Error(Errc::Forbidden, "admin only");
  }
}

std::string Service::export_csv(UserId caller) {
  require_admin(caller);
  return export_answers_csv(db_);
}

std::size_t Service::import_edges(std::istream& in) {
  if (catalog_.empty()) throw Error(Errc::InvalidState, "seed the catalog before importing");
  return sdgnet::import_edges(db_, catalog_, accounts_.importer(), in, clock_);
}

}  // namespace sdgnet
