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

#include <map>
#include <string>

#include "sdgnet/error.hpp"
#include "sdgnet/service.hpp"

namespace sdgnet {

/// Transport-neutral HTTP request. Header names are lower-case.
struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// JSON API under /api/v1. Errors come back as
/// {"error": "<Errc name>", "message": "..."} with a matching status code.
class Api {
 public:
  explicit Api(Service& service) : service_(service) {}

  ApiResponse handle(const ApiRequest& request) const;

 private:
  Service& service_;
};

int http_status(Errc code) noexcept;

}  // namespace sdgnet
