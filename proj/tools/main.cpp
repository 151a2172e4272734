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

// sdgnet: ops CLI for the SDG interaction survey service.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "http_server.hpp"
#include "sdgnet/catalog.hpp"
#include "sdgnet/error.hpp"
#include "sdgnet/reports.hpp"
#include "sdgnet/service.hpp"
#include "sdgnet/transfer.hpp"

namespace {

std::string read_secret(const std::string& flag_value, bool from_stdin) {
  if (!from_stdin) return flag_value;
  std::string line;
  std::getline(std::cin, line);
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SDG target interaction survey: seeding, imports, reports and the HTTP API"};
  app.require_subcommand(1);

  sdgnet::ServiceConfig config;
  try {
    config = sdgnet::ServiceConfig::from_env();
  } catch (const sdgnet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  app.add_option("--database", config.database_url,
                 "SQLite database path (env SDGNET_DATABASE_URL)")
      ->capture_default_str();

  std::string catalog_path;
  auto* seed = app.add_subcommand("seed", "Load the target catalog into the database");
  seed->add_option("--catalog", catalog_path, "Catalog CSV")->required()->check(CLI::ExistingFile);

  std::string admin_login, admin_password, admin_name;
  bool password_stdin = false;
  auto* create_admin = app.add_subcommand("create-admin", "Create an approved admin account");
  create_admin->add_option("--login", admin_login)->required();
  create_admin->add_option("--name", admin_name, "Display name");
  auto* pw = create_admin->add_option("--password", admin_password);
  create_admin->add_flag("--password-stdin", password_stdin, "Read the password from stdin")
      ->excludes(pw);

  std::string edges_path;
  auto* import_edges = app.add_subcommand("import-edges", "Bulk-color pairs from a CSV file");
  import_edges->add_option("csv", edges_path, "Edge CSV")->required()->check(CLI::ExistingFile);

  std::string report_name, policy = "strict", format = "json";
  unsigned restarts = 1;
  std::uint64_t seed_value = 0;
  auto* report = app.add_subcommand("report", "Print an analytics report");
  report->add_option("kind", report_name, "summary | ugly | beautiful | beautiful-graph | rank | longest-path")
      ->required();
  report->add_option("--policy", policy, "strict | nonnegative")->capture_default_str();
  report->add_option("--restarts", restarts, "Orientations tried by longest-path")
      ->check(CLI::Range(1u, 100000u))
      ->capture_default_str();
  report->add_option("--seed", seed_value, "Seed for random orientations")->capture_default_str();
  report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "Write all colored pairs as CSV");
  export_cmd->add_option("--out", out_path, "Output file ('-' for stdout)")->required();

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--listen", config.listen_address, "host:port (env SDGNET_LISTEN)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    sdgnet::Service service(config);

    if (*seed) {
      service.seed(sdgnet::load_catalog(catalog_path));
      std::cout << "seeded " << service.catalog().size() << " targets across "
                << service.catalog().goals().size() << " goals\n";
    } else if (*create_admin) {
      const auto u = service.accounts().create_admin(
          admin_login, read_secret(admin_password, password_stdin), admin_name);
      std::cout << "created admin '" << u.login << "' (id " << u.id << ")\n";
    } else if (*import_edges) {
      std::ifstream in(edges_path, std::ios::binary);
      if (!in) throw sdgnet::Error(sdgnet::Errc::Io, "cannot open " + edges_path);
      const std::size_t n = service.import_edges(in);
      std::cout << "imported " << n << " colored pairs\n";
    } else if (*report) {
      const auto kind = sdgnet::parse_report_kind(report_name);
      const sdgnet::ReportOptions options{sdgnet::parse_beauty_policy(policy), restarts, seed_value};
      const auto result = service.report(kind, options);
      if (format == "text") {
        std::cout << sdgnet::render_text(kind, result);
      } else {
        std::cout << result.dump(2) << '\n';
      }
    } else if (*export_cmd) {
      const std::string csv = sdgnet::export_answers_csv(service.db());
      if (out_path == "-") {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw sdgnet::Error(sdgnet::Errc::Io, "cannot write " + out_path);
        out << csv;
      }
    } else if (*serve) {
      const auto [host, port] = sdgnet::parse_listen_address(config.listen_address);
      sdgnet::Api api(service);
      httplib::Server server;
      sdgnet::mount(server, api);
      std::cerr << "listening on " << host << ':' << port << '\n';
      if (!server.listen(host, port)) {
        throw sdgnet::Error(sdgnet::Errc::Io, "cannot listen on " + config.listen_address);
      }
    }
  } catch (const sdgnet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
