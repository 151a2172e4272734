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

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdgnet {

enum class Errc {
  InvalidInput,
  NotFound,
  Duplicate,
  InvalidScore,
  MissingMitigation,
  AlreadyScored,
  NotAssigned,
  InvalidState,
  NotApproved,
  Unauthorized,
  Forbidden,
  InvalidCredentials,
  PendingAccount,
  InsufficientExperience,
  Cycle,
  Io,
  Storage,
};

/// Stable identifier used in API error payloads and CLI messages.
std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sdgnet
