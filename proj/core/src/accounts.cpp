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

#include "sdgnet/accounts.hpp"

#include <sodium.h>

#include <algorithm>
#include <cctype>

#include "sdgnet/error.hpp"

namespace sdgnet {

namespace {

constexpr std::string_view kImporterLogin = "importer";

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw Error(Errc::Storage, "libsodium failed to initialize");
}

std::string token_hash(const std::string& token) {
  unsigned char digest[crypto_generichash_BYTES];
  crypto_generichash(digest, sizeof digest,
                     reinterpret_cast<const unsigned char*>(token.data()), token.size(),
                     nullptr, 0);
  char hex[sizeof digest * 2 + 1];
  sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
  return hex;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Accounts::Accounts(store::Database& db, AccountsConfig config, Clock clock)
    : db_(db), config_(config), clock_(std::move(clock)) {
  ensure_sodium();
}

std::string Accounts::hash_secret(const std::string& secret) const {
  const bool minimal = config_.hash_strength == HashStrength::Minimal;
  char out[crypto_pwhash_STRBYTES];
  if (crypto_pwhash_str(out, secret.data(), secret.size(),
                        minimal ? crypto_pwhash_OPSLIMIT_MIN : crypto_pwhash_OPSLIMIT_INTERACTIVE,
                        minimal ? crypto_pwhash_MEMLIMIT_MIN
                                : crypto_pwhash_MEMLIMIT_INTERACTIVE) != 0) {
    throw Error(Errc::Storage, "out of memory while hashing secret");
  }
  return out;
}

ExpertUser Accounts::signup(const SignupProfile& profile) {
  std::vector<std::string> missing;
  if (blank(profile.login)) missing.push_back("login");
  if (profile.secret.empty()) missing.push_back("secret");
  if (blank(profile.full_name)) missing.push_back("full_name");
  if (blank(profile.education)) missing.push_back("education");
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw Error(Errc::InvalidInput, "missing required profile fields: " + list);
  }
  if (profile.years_experience < 0) {
    throw Error(Errc::InvalidInput, "years_experience must be non-negative");
  }

  const std::string hashed = hash_secret(profile.secret);
  return db_.transaction([&] {
    if (profile.login == kImporterLogin || find_user_by_login(db_, profile.login)) {
      throw Error(Errc::Duplicate, "login '" + profile.login + "' is already taken");
    }
    std::optional<UserId> curator;
    if (profile.curator_login && !profile.curator_login->empty()) {
      auto c = find_user_by_login(db_, *profile.curator_login);
      if (!c || c->role == Role::System) {
        throw Error(Errc::InvalidInput, "unknown curator '" + *profile.curator_login + "'");
      }
      curator = c->id;
    }

    const std::string now = format_iso8601(clock_());
    auto insert = db_.prepare(
        "INSERT INTO users (login, secret_hash, full_name, education, years_experience, "
        "affiliations, acknowledge, curator_id, status, role, created_at) "
        "VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8, 'pending', 'expert', ?9)");
    insert.bind(1, profile.login)
        .bind(2, hashed)
        .bind(3, profile.full_name)
        .bind(4, profile.education)
        .bind(5, profile.years_experience)
        .bind(6, profile.affiliations)
        .bind(7, profile.acknowledge ? 1 : 0)
        .bind(8, curator)
        .bind(9, now);
    insert.run();
    const UserId id = db_.last_insert_id();

    auto notify = db_.prepare(
        "INSERT INTO notifications (recipient_id, subject_id, kind, created_at) "
        "VALUES (?1, ?2, 'signup', ?3)");
    notify.bind(1, curator).bind(2, id).bind(3, now);
    notify.run();
    return load_user(db_, id);
  });
}

ExpertUser Accounts::create_admin(const std::string& login, const std::string& secret,
                                  const std::string& full_name) {
  if (blank(login) || secret.empty()) {
    throw Error(Errc::InvalidInput, "admin needs a login and a secret");
  }
  const std::string hashed = hash_secret(secret);
  return db_.transaction([&] {
    if (find_user_by_login(db_, login)) {
      throw Error(Errc::Duplicate, "login '" + login + "' is already taken");
    }
    auto insert = db_.prepare(
        "INSERT INTO users (login, secret_hash, full_name, years_experience, acknowledge, "
        "status, role, created_at) VALUES (?1, ?2, ?3, 0, 1, 'approved', 'admin', ?4)");
    insert.bind(1, login)
        .bind(2, hashed)
        .bind(3, full_name.empty() ? login : full_name)
        .bind(4, format_iso8601(clock_()));
    insert.run();
    return load_user(db_, db_.last_insert_id());
  });
}

ExpertUser Accounts::approve(UserId caller, UserId user) {
  return db_.transaction([&] {
    const ExpertUser by = load_user(db_, caller);
    const ExpertUser target = load_user(db_, user);
    const bool is_admin = by.role == Role::Admin && by.status == UserStatus::Approved;
    const bool is_curator = by.status == UserStatus::Approved && target.curator == by.id;
    if (!is_admin && !is_curator) {
      throw Error(Errc::Forbidden, "only an admin or the user's curator can approve");
    }
    if (target.status == UserStatus::Approved) {
      throw Error(Errc::InvalidState, "user " + target.login + " is already approved");
    }
    if (target.years_experience < kMinYearsExperience) {
      throw Error(Errc::InsufficientExperience,
                  "approval requires at least " + std::to_string(kMinYearsExperience) +
                      " years of experience; " + target.login + " has " +
                      std::to_string(target.years_experience));
    }
    auto update = db_.prepare("UPDATE users SET status = 'approved' WHERE id = ?1");
    update.bind(1, user);
    update.run();
    return load_user(db_, user);
  });
}

Session Accounts::login(const std::string& login, const std::string& secret) {
  const auto invalid = [] {
    return Error(Errc::InvalidCredentials, "invalid login or secret");
  };
  auto [user, stored] = db_.transaction([&] {
    auto query = db_.prepare("SELECT id, secret_hash FROM users WHERE login = ?1");
    query.bind(1, login);
    if (!query.step() || query.is_null(1)) throw invalid();
    return std::pair{query.int64(0), query.text(1)};
  });
  if (crypto_pwhash_str_verify(stored.c_str(), secret.data(), secret.size()) != 0) {
    throw invalid();
  }
  const ExpertUser u = load_user(db_, user);
  if (u.status != UserStatus::Approved) {
    throw Error(Errc::PendingAccount, "account is awaiting approval");
  }

  unsigned char raw[32];
  randombytes_buf(raw, sizeof raw);
  char hex[sizeof raw * 2 + 1];
  sodium_bin2hex(hex, sizeof hex, raw, sizeof raw);

  Session session{hex, user, clock_() + config_.session_ttl};
  db_.transaction([&] {
    auto purge = db_.prepare("DELETE FROM sessions WHERE expires_at <= ?1");
    purge.bind(1, format_iso8601(clock_()));
    purge.run();
    auto insert = db_.prepare(
        "INSERT INTO sessions (token_hash, user_id, expires_at) VALUES (?1, ?2, ?3)");
    insert.bind(1, token_hash(session.token))
        .bind(2, user)
        .bind(3, format_iso8601(session.expires_at));
    insert.run();
  });
  return session;
}

ExpertUser Accounts::authenticate(const std::string& token) {
  return db_.transaction([&] {
    auto query = db_.prepare("SELECT user_id, expires_at FROM sessions WHERE token_hash = ?1");
    query.bind(1, token_hash(token));
    if (!query.step() || parse_iso8601(query.text(1)) <= clock_()) {
      throw Error(Errc::Unauthorized, "missing, unknown or expired session");
    }
    const ExpertUser u = load_user(db_, query.int64(0));
    if (u.status != UserStatus::Approved) {
      throw Error(Errc::Unauthorized, "account is not approved");
    }
    return u;
  });
}

void Accounts::logout(const std::string& token) {
  db_.transaction([&] {
    auto del = db_.prepare("DELETE FROM sessions WHERE token_hash = ?1");
    del.bind(1, token_hash(token));
    del.run();
  });
}

std::vector<ExpertUser> Accounts::users(std::optional<UserStatus> status) {
  return db_.transaction([&] {
    std::vector<ExpertUser> out;
    auto query = db_.prepare("SELECT id FROM users WHERE role != 'system' ORDER BY id");
    std::vector<UserId> ids;
    while (query.step()) ids.push_back(query.int64(0));
    for (UserId id : ids) {
      ExpertUser u = load_user(db_, id);
      if (!status || u.status == *status) out.push_back(std::move(u));
    }
    return out;
  });
}

std::vector<Notification> Accounts::notifications(UserId user) {
  return db_.transaction([&] {
    const ExpertUser u = load_user(db_, user);
    auto query = db_.prepare(
        "SELECT id, recipient_id, subject_id, kind, created_at FROM notifications "
        "WHERE recipient_id = ?1 OR (recipient_id IS NULL AND ?2) ORDER BY id");
    query.bind(1, user).bind(2, u.role == Role::Admin ? 1 : 0);
    std::vector<Notification> out;
    while (query.step()) {
      out.push_back(Notification{query.int64(0), query.optional_int64(1), query.int64(2),
                                 query.text(3), parse_iso8601(query.text(4))});
    }
    return out;
  });
}

UserId Accounts::importer() {
  return db_.transaction([&] {
    if (auto u = find_user_by_login(db_, kImporterLogin)) {
      if (u->role != Role::System) {
        throw Error(Errc::InvalidState, "login 'importer' is taken by a regular account");
      }
      return u->id;
    }
    auto insert = db_.prepare(
        "INSERT INTO users (login, secret_hash, full_name, years_experience, acknowledge, "
        "status, role, created_at) VALUES (?1, NULL, 'importer', 0, 1, 'approved', 'system', ?2)");
    insert.bind(1, kImporterLogin).bind(2, format_iso8601(clock_()));
    insert.run();
    return db_.last_insert_id();
  });
}

}  // namespace sdgnet
