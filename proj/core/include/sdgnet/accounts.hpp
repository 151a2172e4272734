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
#include <optional>
#include <string>
#include <vector>

#include "sdgnet/store.hpp"
#include "sdgnet/survey.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {

struct SignupProfile {
  std::string login;
  std::string secret;
  std::string full_name;
  std::string education;
  int years_experience = 0;
  std::string affiliations;
  bool acknowledge = false;
  /// Login of the contact person who vouches for this expert.
  std::optional<std::string> curator_login;
};

struct Session {
  std::string token;
  UserId user = 0;
  Timestamp expires_at;
};

struct Notification {
  std::int64_t id = 0;
  std::optional<UserId> recipient;  // empty: the admins' shared inbox
  UserId subject = 0;
  std::string kind;
  Timestamp created_at;
};

/// Cost of the Argon2id secret hash.
enum class HashStrength {
  Interactive,
  Minimal,  // for tests and throwaway databases only
};

struct AccountsConfig {
  std::chrono::seconds session_ttl = std::chrono::hours(24);
  HashStrength hash_strength = HashStrength::Interactive;
};

/// Registration, approval and session handling.
class Accounts {
 public:
  Accounts(store::Database& db, AccountsConfig config = {}, Clock clock = system_clock());

  /// Stores a Pending user and a signup notification for the curator.
  /// Throws Error(Duplicate) for a taken login, Error(InvalidInput) for
  /// missing required fields or an unknown curator.
  ExpertUser signup(const SignupProfile& profile);

  /// Creates an approved admin directly, bypassing the approval queue.
  ExpertUser create_admin(const std::string& login, const std::string& secret,
                          const std::string& full_name);

  /// Admins approve anyone; a curator approves the users naming them.
  /// Throws Error(Forbidden), Error(InvalidState) if already approved, or
  /// Error(InsufficientExperience) below five years.
  ExpertUser approve(UserId caller, UserId user);

  /// Same error for an unknown login and a wrong secret. Pending accounts
  /// with the right secret get Error(PendingAccount).
  Session login(const std::string& login, const std::string& secret);

  /// Resolves a bearer token. Throws Error(Unauthorized) when unknown or
  /// expired.
  ExpertUser authenticate(const std::string& token);

  void logout(const std::string& token);

  std::vector<ExpertUser> users(std::optional<UserStatus> status = std::nullopt);

  /// Notifications addressed to `user`, plus the shared inbox for admins.
  std::vector<Notification> notifications(UserId user);

  /// The synthetic account that bulk imports are attributed to. Created on
  /// first use; it has no secret and can never log in.
  UserId importer();

 private:
  std::string hash_secret(const std::string& secret) const;

  store::Database& db_;
  AccountsConfig config_;
  Clock clock_;
};

}  // namespace sdgnet
