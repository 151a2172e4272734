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

#include "sdgnet/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>

#include "sdgnet/csv.hpp"
#include "sdgnet/error.hpp"

namespace sdgnet {

namespace {

[[noreturn]] void bad_code(std::string_view text, std::string_view why) {
  throw Error(Errc::InvalidInput, "invalid target code '" + std::string(text) +
                                      "': " + std::string(why));
}

bool valid_goal(int goal) { return goal >= 1 && goal <= kGoalCount; }

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

}  // namespace

TargetCode TargetCode::numbered(int goal, int number) {
  if (!valid_goal(goal)) {
    throw Error(Errc::InvalidInput, "goal out of range: " + std::to_string(goal));
  }
  if (number < 1 || number >= kLetterBase) {
    throw Error(Errc::InvalidInput,
                "target number out of range: " + std::to_string(number));
  }
  return TargetCode(goal, number);
}

TargetCode TargetCode::lettered(int goal, char letter) {
  if (!valid_goal(goal)) {
    throw Error(Errc::InvalidInput, "goal out of range: " + std::to_string(goal));
  }
  const char upper =
      static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  if (upper < 'A' || upper > 'D') {
    throw Error(Errc::InvalidInput,
                std::string("target letter must be A-D, got '") + letter + "'");
  }
  return TargetCode(goal, kLetterBase + (upper - 'A'));
}

std::string TargetCode::str() const {
  std::string out = std::to_string(goal_) + '.';
  if (has_letter()) {
    out += letter();
  } else {
    out += std::to_string(rank_);
  }
  return out;
}

TargetCode parse_target_code(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) bad_code(text, "missing '.'");
  const auto goal_part = text.substr(0, dot);
  const auto suffix = text.substr(dot + 1);

  int goal = 0;
  {
    auto [ptr, ec] = std::from_chars(goal_part.data(),
                                     goal_part.data() + goal_part.size(), goal);
    if (goal_part.empty() || ec != std::errc{} ||
        ptr != goal_part.data() + goal_part.size()) {
      bad_code(text, "goal is not a number");
    }
  }
  if (!valid_goal(goal)) bad_code(text, "goal must be in 1..17");
  if (suffix.empty()) bad_code(text, "empty suffix");

  if (suffix.size() == 1 && std::isalpha(static_cast<unsigned char>(suffix[0]))) {
    const char upper =
        static_cast<char>(std::toupper(static_cast<unsigned char>(suffix[0])));
    if (upper < 'A' || upper > 'D') bad_code(text, "letter suffix must be A-D");
    return TargetCode::lettered(goal, upper);
  }

  int number = 0;
  auto [ptr, ec] =
      std::from_chars(suffix.data(), suffix.data() + suffix.size(), number);
  if (ec != std::errc{} || ptr != suffix.data() + suffix.size() ||
      suffix.front() == '0' || number < 1) {
    bad_code(text, "suffix must be a positive number or a letter A-D");
  }
  return TargetCode::numbered(goal, number);
}

std::ostream& operator<<(std::ostream& os, const TargetCode& code) {
  return os << code.str();
}

Catalog::Catalog(std::vector<Goal> goals, std::vector<Target> targets)
    : goals_(std::move(goals)), targets_(std::move(targets)) {
  std::set<int> ids;
  std::set<std::string> names;
  for (const auto& g : goals_) {
    if (!valid_goal(g.id)) {
      throw Error(Errc::InvalidInput, "unknown goal id " + std::to_string(g.id));
    }
    if (g.name.empty()) {
      throw Error(Errc::InvalidInput,
                  "goal " + std::to_string(g.id) + " has an empty name");
    }
    if (!ids.insert(g.id).second) {
      throw Error(Errc::Duplicate, "duplicate goal id " + std::to_string(g.id));
    }
    if (!names.insert(g.name).second) {
      throw Error(Errc::Duplicate, "duplicate goal name '" + g.name + "'");
    }
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    const auto& t = targets_[i];
    if (!ids.contains(t.code.goal())) {
      throw Error(Errc::InvalidInput,
                  "target " + t.code.str() + " references unknown goal " +
                      std::to_string(t.code.goal()));
    }
    if (t.description.empty()) {
      throw Error(Errc::InvalidInput,
                  "target " + t.code.str() + " has an empty description");
    }
    if (!index_.emplace(t.code, i).second) {
      throw Error(Errc::Duplicate, "duplicate target code " + t.code.str());
    }
  }
}

const Target* Catalog::find(const TargetCode& code) const {
  auto it = index_.find(code);
  return it == index_.end() ? nullptr : &targets_[it->second];
}

const Goal* Catalog::goal(int id) const {
  auto it = std::find_if(goals_.begin(), goals_.end(),
                         [id](const Goal& g) { return g.id == id; });
  return it == goals_.end() ? nullptr : &*it;
}

std::string Catalog::label(const TargetCode& code) const {
  const Goal* g = goal(code.goal());
  return g ? code.str() + ' ' + g->name : code.str();
}

Catalog parse_catalog(std::istream& in, std::string_view source_name) {
  const std::string where(source_name);
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw Error(Errc::InvalidInput, where + ": empty catalog file");
  const std::vector<std::string> expected{"goal_id", "target_code", "goal_name",
                                          "description"};
  std::vector<std::string> got;
  for (const auto& f : header->fields) got.push_back(trim(f));
  if (!got.empty() && got[0].rfind("\xEF\xBB\xBF", 0) == 0) got[0].erase(0, 3);
  if (got != expected) {
    throw Error(Errc::InvalidInput,
                where + ": header must be goal_id,target_code,goal_name,description");
  }

  std::vector<Goal> goals;
  std::vector<Target> targets;
  while (auto record = reader.next()) {
    const std::string at = where + ":" + std::to_string(record->line) + ": ";
    if (record->fields.size() != 4) {
      throw Error(Errc::InvalidInput, at + "expected 4 fields, got " +
                                          std::to_string(record->fields.size()));
    }
    const std::string goal_text = trim(record->fields[0]);
    int goal_id = 0;
    auto [ptr, ec] = std::from_chars(
        goal_text.data(), goal_text.data() + goal_text.size(), goal_id);
    if (goal_text.empty() || ec != std::errc{} ||
        ptr != goal_text.data() + goal_text.size() || !valid_goal(goal_id)) {
      throw Error(Errc::InvalidInput, at + "unknown goal id '" + goal_text + "'");
    }

    TargetCode code;
    try {
      code = parse_target_code(trim(record->fields[1]));
    } catch (const Error& e) {
      throw Error(e.code(), at + e.what());
    }
    if (code.goal() != goal_id) {
      throw Error(Errc::InvalidInput, at + "target " + code.str() +
                                          " does not belong to goal " + goal_text);
    }

    const std::string goal_name = trim(record->fields[2]);
    if (goal_name.empty()) {
      throw Error(Errc::InvalidInput, at + "empty goal name");
    }
    auto known = std::find_if(goals.begin(), goals.end(),
                              [&](const Goal& g) { return g.id == goal_id; });
    if (known == goals.end()) {
      goals.push_back({goal_id, goal_name});
    } else if (known->name != goal_name) {
      throw Error(Errc::InvalidInput, at + "goal " + goal_text +
                                          " named inconsistently ('" +
                                          known->name + "' vs '" + goal_name + "')");
    }

    std::string description = trim(record->fields[3]);
    if (description.empty()) {
      throw Error(Errc::InvalidInput, at + "empty description for " + code.str());
    }
    for (const auto& t : targets) {
      if (t.code == code) {
        throw Error(Errc::Duplicate, at + "duplicate target code " + code.str());
      }
    }
    targets.push_back({code, std::move(description)});
  }
  if (targets.empty()) throw Error(Errc::InvalidInput, where + ": no targets");

  std::sort(goals.begin(), goals.end(),
            [](const Goal& a, const Goal& b) { return a.id < b.id; });
  try {
    return Catalog(std::move(goals), std::move(targets));
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open catalog " + path.string());
  return parse_catalog(in, path.string());
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
  out << "goal_id,target_code,goal_name,description\n";
  for (const auto& t : catalog.targets()) {
    const Goal* g = catalog.goal(t.code.goal());
    out << csv::format_row({std::to_string(t.code.goal()), t.code.str(),
                            g ? g->name : std::string{}, t.description});
  }
}

std::vector<Target> targets_for_goals(const Catalog& catalog,
                                      const std::set<int>& goals) {
  for (int id : goals) {
    if (catalog.goal(id) == nullptr) {
      throw Error(Errc::NotFound, "unknown goal id " + std::to_string(id));
    }
  }
  std::vector<Target> out;
  for (const auto& t : catalog.targets()) {
    if (goals.contains(t.code.goal())) out.push_back(t);
  }
  std::sort(out.begin(), out.end(),
            [](const Target& a, const Target& b) { return a.code < b.code; });
  return out;
}

}  // namespace sdgnet
