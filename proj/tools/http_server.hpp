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

#include <string>

#include "httplib.h"
#include "sdgnet/api.hpp"

namespace sdgnet {

/// Routes every /api/v1 request on `server` through `api`.
void mount(httplib::Server& server, const Api& api);

/// Splits "host:port"; a bare port binds 127.0.0.1.
std::pair<std::string, int> parse_listen_address(const std::string& address);

}  // namespace sdgnet
