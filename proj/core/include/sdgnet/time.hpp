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
#include <functional>
#include <string>
#include <string_view>

namespace sdgnet {

using Timestamp = std::chrono::sys_seconds;
using Clock = std::function<Timestamp()>;

Clock system_clock();

// "2021-06-30T08:15:00Z"
std::string format_iso8601(Timestamp t);

// Accepts exactly the form produced by format_iso8601.
Timestamp parse_iso8601(std::string_view text);

}  // namespace sdgnet
