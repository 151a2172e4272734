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

#include "http_server.hpp"

#include <algorithm>
#include <cctype>

#include "sdgnet/error.hpp"

namespace sdgnet {

namespace {

ApiRequest to_api(const httplib::Request& req) {
  ApiRequest out;
  out.method = req.method;
  out.path = req.path;
  for (const auto& [k, v] : req.params) out.query.emplace(k, v);
  for (const auto& [k, v] : req.headers) {
    std::string key = k;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    out.headers.emplace(std::move(key), v);
  }
  out.body = req.body;
  return out;
}

}  // namespace

void mount(httplib::Server& server, const Api& api) {
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = api.handle(to_api(req));
    res.status = r.status;
    res.set_content(r.body, r.content_type.c_str());
  };
  const char* pattern = R"(/api/v1/.*)";
  server.Get(pattern, handler);
  server.Post(pattern, handler);
  server.Put(pattern, handler);
  server.Delete(pattern, handler);
}

std::pair<std::string, int> parse_listen_address(const std::string& address) {
  const auto colon = address.rfind(':');
  const std::string host = colon == std::string::npos ? "127.0.0.1" : address.substr(0, colon);
  const std::string port_text = colon == std::string::npos ? address : address.substr(colon + 1);
  int port = 0;
  try {
    std::size_t used = 0;
    port = std::stoi(port_text, &used);
    if (used != port_text.size()) port = -1;
  } catch (const std::exception&) {
    port = -1;
  }
  if (port < 0 || port > 65535) {
    throw Error(Errc::InvalidInput, "bad listen address '" + address + "'");
  }
  return {host.empty() ? "0.0.0.0" : host, port};
}

}  // namespace sdgnet
