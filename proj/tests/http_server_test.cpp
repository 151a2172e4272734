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

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <thread>

#include "http_server.hpp"
#include "test_support.hpp"

namespace sdgnet {
namespace {

using nlohmann::json;

class LiveServer {
 public:
  LiveServer() : service_(testing::seeded_service()), api_(*service_) {
    service_->accounts().create_admin("admin", "admin-secret", "Admin");
    mount(server_, api_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LiveServer() {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_connection_timeout(5);
    return c;
  }

 private:
  std::unique_ptr<Service> service_;
  Api api_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(ListenAddress, Parsing) {
  EXPECT_EQ(parse_listen_address("0.0.0.0:9000"), std::make_pair(std::string("0.0.0.0"), 9000));
  EXPECT_EQ(parse_listen_address("8081"), std::make_pair(std::string("127.0.0.1"), 8081));
  EXPECT_THROW(parse_listen_address("host:port"), Error);
  EXPECT_THROW(parse_listen_address("host:70000"), Error);
}

TEST(HttpServer, RoundTripOverTcp) {
  LiveServer server;
  auto client = server.client();

  auto r = client.Get("/api/v1/goals");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(json::parse(r->body)["goals"].size(), 17u);

  r = client.Get("/api/v1/graph?goals=13,14");
  ASSERT_TRUE(r);
  EXPECT_EQ(json::parse(r->body)["nodes"].size(), 15u);

  r = client.Post("/api/v1/login", json{{"login", "admin"}, {"password", "admin-secret"}}.dump(),
                  "application/json");
  ASSERT_TRUE(r);
  ASSERT_EQ(r->status, 200) << r->body;
  const std::string token = json::parse(r->body)["token"];

  r = client.Get("/api/v1/admin/users");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 401);
  EXPECT_EQ(json::parse(r->body)["error"], "Unauthorized");

  r = client.Get("/api/v1/admin/export.csv", {{"Authorization", "Bearer " + token}});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(r->get_header_value("Content-Type").rfind("text/csv", 0), 0u);

  r = client.Get("/api/v1/does-not-exist");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 404);
}

}  // namespace
}  // namespace sdgnet
