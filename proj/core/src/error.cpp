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

#include "sdgnet/error.hpp"

namespace sdgnet {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotFound: return "NotFound";
    case Errc::Duplicate: return "Duplicate";
    case Errc::InvalidScore: return "InvalidScore";
    case Errc::MissingMitigation: return "MissingMitigation";
    case Errc::AlreadyScored: return "AlreadyScored";
    case Errc::NotAssigned: return "NotAssigned";
    case Errc::InvalidState: return "InvalidState";
    case Errc::NotApproved: return "NotApproved";
    case Errc::Unauthorized: return "Unauthorized";
    case Errc::Forbidden: return "Forbidden";
    case Errc::InvalidCredentials: return "InvalidCredentials";
    case Errc::PendingAccount: return "PendingAccount";
    case Errc::InsufficientExperience: return "InsufficientExperience";
    case Errc::Cycle: return "Cycle";
    case Errc::Io: return "Io";
    case Errc::Storage: return "Storage";
  }
  return "Unknown";
}

}  // namespace sdgnet
