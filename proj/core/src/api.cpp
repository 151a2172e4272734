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

#include "sdgnet/api.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "sdgnet/error.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {

int http_status(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput:
    case Errc::InvalidScore:
    case Errc::MissingMitigation:
      return 400;
    case Errc::Unauthorized:
    case Errc::InvalidCredentials:
      return 401;
    case Errc::Forbidden:
    case Errc::NotAssigned:
    case Errc::NotApproved:
    case Errc::PendingAccount:
      return 403;
    case Errc::NotFound:
      return 404;
    case Errc::Duplicate:
    case Errc::AlreadyScored:
    case Errc::InvalidState:
      return 409;
    case Errc::InsufficientExperience:
      return 422;
    case Errc::Cycle:
    case Errc::Io:
    case Errc::Storage:
      return 500;
  }
  return 500;
}

namespace {

using nlohmann::json;

ApiResponse json_response(int status, const json& body) {
  return ApiResponse{status, "application/json", body.dump()};
}

ApiResponse error_response(Errc code, const std::string& message) {
  return json_response(http_status(code), {{"error", to_string(code)}, {"message", message}});
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

long long parse_integer(const std::string& text, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::InvalidInput, std::string(what) + " must be an integer, got '" + text + "'");
  }
  return value;
}

json parse_body(const ApiRequest& request) {
  if (request.body.empty()) return json::object();
  json body = json::parse(request.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw Error(Errc::InvalidInput, "request body must be a JSON object");
  }
  return body;
}

template <class T>
T field(const json& body, const char* name, T fallback) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::InvalidInput, std::string("field '") + name + "' has the wrong type");
  }
}

json user_json(const ExpertUser& u) {
  return {{"id", u.id},
          {"login", u.login},
          {"full_name", u.full_name},
          {"education", u.education},
          {"years_experience", u.years_experience},
          {"affiliations", u.affiliations},
          {"acknowledge", u.acknowledge},
          {"curator", u.curator ? json(*u.curator) : json(nullptr)},
          {"status", to_string(u.status)},
          {"role", to_string(u.role)}};
}

json interaction_json(const Interaction& i) {
  return {{"pair", i.key.str()},
          {"source", i.key.lo().str()},
          {"target", i.key.hi().str()},
          {"score", i.score ? json(i.score->value()) : json(nullptr)},
          {"label", i.score ? json(to_string(i.score->label())) : json(nullptr)},
          {"class", to_string(classify(i))},
          {"explanation", i.explanation},
          {"mitigation", i.mitigation},
          {"scored_at", i.scored_at ? json(format_iso8601(*i.scored_at)) : json(nullptr)}};
}

json assignment_json(const Assignment& a, const Catalog& catalog) {
  auto describe = [&](const TargetCode& code) {
    const Target* t = catalog.find(code);
    return json{{"code", code.str()},
                {"label", catalog.label(code)},
                {"description", t ? t->description : std::string{}}};
  };
  return {{"pair", a.pair.str()},
          {"state", to_string(a.state)},
          {"source", describe(a.pair.lo())},
          {"target", describe(a.pair.hi())}};
}

std::set<int> parse_goal_list(const std::string& text) {
  std::set<int> goals;
  for (const auto& part : split(text, ',')) {
    goals.insert(static_cast<int>(parse_integer(part, "goal")));
  }
  return goals;
}

class Router {
 public:
  Router(Service& service, const ApiRequest& request)
      : service_(service), request_(request), parts_(split(request.path, '/')) {}

  ApiResponse dispatch() {
    if (parts_.size() < 3 || parts_[0] != "api" || parts_[1] != "v1") return not_found();
    const std::string& method = request_.method;
    const std::string& head = parts_[2];
    const std::size_t n = parts_.size();

    if (head == "signup" && n == 3) return method == "POST" ? signup() : bad_method();
    if (head == "login" && n == 3) return method == "POST" ? login() : bad_method();
    if (head == "logout" && n == 3) return method == "POST" ? logout() : bad_method();
    if (head == "targets" && n == 3) return method == "GET" ? targets() : bad_method();
    if (head == "goals" && n == 3) {
      if (method == "GET") return goals();
      if (method == "POST") return select_goals();
      return bad_method();
    }
    if (head == "assignments" && n == 4 && parts_[3] == "next") {
      return method == "GET" ? next_assignments() : bad_method();
    }
    if (head == "answers" && n == 3) {
      if (method == "POST") return submit_answer();
      if (method == "GET") return own_answers();
      return bad_method();
    }
    if (head == "answers" && n == 5 && parts_[4] == "skip") {
      return method == "POST" ? skip(parts_[3]) : bad_method();
    }
    if (head == "progress" && n == 3) return method == "GET" ? progress() : bad_method();
    if (head == "notifications" && n == 3) {
      return method == "GET" ? notifications() : bad_method();
    }
    if (head == "graph" && n == 3) return method == "GET" ? graph() : bad_method();
    if (head == "reports" && n == 4) return method == "GET" ? report(parts_[3]) : bad_method();
    if (head == "admin" && n >= 4) {
      if (parts_[3] == "approve" && n == 5) return method == "POST" ? approve(parts_[4]) : bad_method();
      if (parts_[3] == "users" && n == 4) return method == "GET" ? admin_users() : bad_method();
      if (parts_[3] == "answers" && n == 4) return method == "GET" ? admin_answers() : bad_method();
      if (parts_[3] == "export.csv" && n == 4) return method == "GET" ? export_csv() : bad_method();
    }
    return not_found();
  }

 private:
  ApiResponse not_found() const {
    return error_response(Errc::NotFound, "no route for " + request_.method + " " + request_.path);
  }
  ApiResponse bad_method() const {
    auto r = error_response(Errc::InvalidInput, "method " + request_.method + " not allowed");
    r.status = 405;
    return r;
  }

  std::string query(const char* name, const std::string& fallback = {}) const {
    auto it = request_.query.find(name);
    return it == request_.query.end() ? fallback : it->second;
  }

  ExpertUser caller() const {
    auto it = request_.headers.find("authorization");
    constexpr std::string_view bearer = "Bearer ";
    if (it == request_.headers.end() || it->second.rfind(bearer, 0) != 0) {
      throw Error(Errc::Unauthorized, "missing bearer token");
    }
    return service_.accounts().authenticate(it->second.substr(bearer.size()));
  }

  ExpertUser admin() const {
    ExpertUser u = caller();
    if (u.role != Role::Admin) throw Error(Errc::Forbidden, "admin only");
    return u;
  }

  ApiResponse signup() {
    const json body = parse_body(request_);
    SignupProfile profile;
    profile.login = field<std::string>(body, "login", "");
    profile.secret = field<std::string>(body, "password", "");
    profile.full_name = field<std::string>(body, "full_name", "");
    profile.education = field<std::string>(body, "education", "");
    if (!body.contains("years_experience")) {
      throw Error(Errc::InvalidInput, "missing required profile fields: years_experience");
    }
    profile.years_experience = field<int>(body, "years_experience", 0);
    profile.affiliations = field<std::string>(body, "affiliations", "");
    profile.acknowledge = field<bool>(body, "acknowledge", false);
    if (auto c = field<std::string>(body, "curator", ""); !c.empty()) profile.curator_login = c;
    return json_response(201, user_json(service_.accounts().signup(profile)));
  }

  ApiResponse login() {
    const json body = parse_body(request_);
    const Session s = service_.accounts().login(field<std::string>(body, "login", ""),
                                                field<std::string>(body, "password", ""));
    return json_response(200, {{"token", s.token},
                               {"expires_at", format_iso8601(s.expires_at)},
                               {"user", user_json(load_user(service_.db(), s.user))}});
  }

  ApiResponse logout() {
    caller();
    const auto& header = request_.headers.at("authorization");
    service_.accounts().logout(header.substr(7));
    return json_response(200, {{"ok", true}});
  }

  ApiResponse targets() {
    json rows = json::array();
    for (const auto& t : service_.catalog().targets()) {
      rows.push_back({{"code", t.code.str()},
                      {"goal", t.code.goal()},
                      {"label", service_.catalog().label(t.code)},
                      {"description", t.description}});
    }
    return json_response(200, {{"targets", std::move(rows)}});
  }

  ApiResponse goals() {
    json rows = json::array();
    for (const auto& g : service_.catalog().goals()) {
      std::size_t count = 0;
      for (const auto& t : service_.catalog().targets()) count += t.code.goal() == g.id;
      rows.push_back({{"id", g.id}, {"name", g.name}, {"target_count", count}});
    }
    return json_response(200, {{"goals", std::move(rows)}});
  }

  ApiResponse select_goals() {
    const ExpertUser u = caller();
    const json body = parse_body(request_);
    auto it = body.find("goals");
    if (it == body.end() || !it->is_array()) {
      throw Error(Errc::InvalidInput, "body needs a 'goals' array");
    }
    std::set<int> goals;
    for (const auto& g : *it) {
      if (!g.is_number_integer()) throw Error(Errc::InvalidInput, "goal ids must be integers");
      goals.insert(g.get<int>());
    }
    const auto created = service_.survey().select_goals(u.id, goals);
    json selected = json::array();
    for (int g : service_.survey().selected_goals(u.id)) selected.push_back(g);
    return json_response(200, {{"selected", std::move(selected)}, {"generated", created.size()}});
  }

  ApiResponse next_assignments() {
    const ExpertUser u = caller();
    const long long limit = parse_integer(query("limit", "10"), "limit");
    if (limit < 1 || limit > 500) throw Error(Errc::InvalidInput, "limit must be in 1..500");
    json rows = json::array();
    for (const auto& a : service_.survey().next(u.id, static_cast<std::size_t>(limit))) {
      rows.push_back(assignment_json(a, service_.catalog()));
    }
    return json_response(200, {{"assignments", std::move(rows)}});
  }

  PairKey body_pair(const json& body) const {
    if (body.contains("pair")) return PairKey::parse(field<std::string>(body, "pair", ""));
    return PairKey(parse_target_code(field<std::string>(body, "target_a", "")),
                   parse_target_code(field<std::string>(body, "target_b", "")));
  }

  ApiResponse submit_answer() {
    const ExpertUser u = caller();
    const json body = parse_body(request_);
    if (!body.contains("score") || !body["score"].is_number_integer()) {
      throw Error(Errc::InvalidScore, "body needs an integer 'score'");
    }
    const Interaction i = service_.survey().submit_answer(
        u.id, body_pair(body), body["score"].get<int>(),
        field<std::string>(body, "explanation", ""), field<std::string>(body, "mitigation", ""));
    return json_response(201, interaction_json(i));
  }

  ApiResponse own_answers() {
    const ExpertUser u = caller();
    json rows = json::array();
    const GraphSnapshot graph = service_.snapshot();
    for (const auto& [key, i] : graph.interactions()) {
      if (i.scorer == u.id) rows.push_back(interaction_json(i));
    }
    return json_response(200, {{"answers", std::move(rows)}});
  }

  ApiResponse skip(const std::string& pair_text) {
    const ExpertUser u = caller();
    const Assignment a = service_.survey().skip(u.id, PairKey::parse(pair_text));
    return json_response(200, assignment_json(a, service_.catalog()));
  }

  ApiResponse progress() {
    const ExpertUser u = caller();
    const Progress p = service_.survey().progress(u.id);
    return json_response(200, {{"answered", p.answered},
                               {"skipped", p.skipped},
                               {"pending", p.pending},
                               {"total", p.total()}});
  }

  ApiResponse notifications() {
    const ExpertUser u = caller();
    json rows = json::array();
    for (const auto& n : service_.accounts().notifications(u.id)) {
      rows.push_back({{"id", n.id},
                      {"kind", n.kind},
                      {"subject", user_json(load_user(service_.db(), n.subject))},
                      {"created_at", format_iso8601(n.created_at)}});
    }
    return json_response(200, {{"notifications", std::move(rows)}});
  }

  ApiResponse graph() {
    return json_response(200, service_.public_graph(parse_goal_list(query("goals"))));
  }

  ApiResponse report(const std::string& name) {
    ReportOptions options;
    options.policy = parse_beauty_policy(query("policy", "strict"));
    const long long restarts = parse_integer(query("restarts", "1"), "restarts");
    if (restarts < 1 || restarts > 1000) {
      throw Error(Errc::InvalidInput, "restarts must be in 1..1000");
    }
    options.restarts = static_cast<unsigned>(restarts);
    options.seed = static_cast<std::uint64_t>(parse_integer(query("seed", "0"), "seed"));
    return json_response(200, service_.report(parse_report_kind(name), options));
  }

  ApiResponse approve(const std::string& user_text) {
    const ExpertUser u = caller();
    const UserId target = parse_integer(user_text, "user id");
    return json_response(200, user_json(service_.accounts().approve(u.id, target)));
  }

  ApiResponse admin_users() {
    admin();
    std::optional<UserStatus> status;
    const std::string filter = query("status");
    if (filter == "pending") {
      status = UserStatus::Pending;
    } else if (filter == "approved") {
      status = UserStatus::Approved;
    } else if (!filter.empty()) {
      throw Error(Errc::InvalidInput, "status must be 'pending' or 'approved'");
    }
    json rows = json::array();
    for (const auto& u : service_.accounts().users(status)) rows.push_back(user_json(u));
    return json_response(200, {{"users", std::move(rows)}});
  }

  ApiResponse admin_answers() {
    admin();
    json rows = json::array();
    const GraphSnapshot graph = service_.snapshot();
    for (const auto& [key, i] : graph.interactions()) {
      json row = interaction_json(i);
      row["scorer"] = i.scorer ? json(*i.scorer) : json(nullptr);
      rows.push_back(std::move(row));
    }
    return json_response(200, {{"answers", std::move(rows)}});
  }

  ApiResponse export_csv() {
    const ExpertUser u = admin();
    return ApiResponse{200, "text/csv; charset=utf-8", service_.export_csv(u.id)};
  }

  Service& service_;
  const ApiRequest& request_;
  std::vector<std::string> parts_;
};

}  // namespace

ApiResponse Api::handle(const ApiRequest& request) const {
  try {
    return Router(service_, request).dispatch();
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const std::exception& e) {
    return error_response(Errc::Storage, e.what());
  }
}

}  // namespace sdgnet
