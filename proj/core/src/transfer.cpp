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

#include "sdgnet/transfer.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "sdgnet/csv.hpp"
#include "sdgnet/graph.hpp"
#include "sdgnet/survey.hpp"

namespace sdgnet {

namespace {

std::string summarize_issues(const std::vector<RowIssue>& issues) {
  std::string out = "import aborted, " + std::to_string(issues.size()) + " invalid row(s)";
  for (const auto& issue : issues) {
    out += "\n  line " + std::to_string(issue.line) + ": " + issue.message;
  }
  return out;
}

}  // namespace

ImportError::ImportError(std::vector<RowIssue> issues)
    : Error(Errc::InvalidInput, summarize_issues(issues)), issues_(std::move(issues)) {}

std::string export_answers_csv(store::Database& db) {
  return db.transaction([&] {
    std::map<UserId, std::string> display;
    auto users = db.prepare("SELECT id, full_name, acknowledge FROM users");
    while (users.step()) {
      display[users.int64(0)] = users.int64(2) != 0 ? users.text(1) : "anonymous";
    }

    std::string out = std::string(kExportHeader) + '\n';
    for (const auto& a : store::answers(db)) {
      const std::string scorer = a.attribution ? *a.attribution : display[a.scorer];
      out += csv::format_row({a.pair.lo().str(), a.pair.hi().str(),
                              std::to_string(a.score.value()),
                              std::string(to_string(classify(a.score))), a.explanation,
                              a.mitigation, scorer, format_iso8601(a.scored_at)});
    }
    return out;
  });
}

std::size_t import_edges(store::Database& db, const Catalog& catalog, UserId importer,
                         std::istream& in, Clock clock) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw ImportError({{0, "empty file"}});

  static const std::set<std::string> known{"target_a", "target_b",  "score",  "class",
                                           "explanation", "mitigation", "scorer", "scored_at"};
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header->fields.size(); ++i) {
    const auto& name = header->fields[i];
    if (!known.contains(name)) {
      throw ImportError({{header->line, "unknown column '" + name + "'"}});
    }
    if (!column.emplace(name, i).second) {
      throw ImportError({{header->line, "duplicate column '" + name + "'"}});
    }
  }
  for (const char* required : {"target_a", "target_b", "score"}) {
    if (!column.contains(required)) {
      throw ImportError({{header->line, std::string("missing column '") + required + "'"}});
    }
  }

  return db.transaction([&] {
    std::vector<store::AnswerRecord> rows;
    std::vector<std::size_t> lines;
    std::vector<RowIssue> issues;
    std::set<PairKey> seen;
    const Timestamp now = clock();

    while (auto record = reader.next()) {
      const std::size_t line = record->line;
      const auto get = [&](const std::string& name) -> std::string {
        auto it = column.find(name);
        if (it == column.end() || it->second >= record->fields.size()) return {};
        return record->fields[it->second];
      };
      try {
        if (record->fields.size() != header->fields.size()) {
          throw Error(Errc::InvalidInput, "expected " + std::to_string(header->fields.size()) +
                                              " fields, got " +
                                              std::to_string(record->fields.size()));
        }
        const PairKey pair(parse_target_code(get("target_a")), parse_target_code(get("target_b")));
        for (const auto& end : {pair.lo(), pair.hi()}) {
          if (!catalog.contains(end)) {
            throw Error(Errc::NotFound, "target " + end.str() + " is not in the catalog");
          }
        }

        const std::string score_text = get("score");
        int score = 0;
        auto [ptr, ec] = std::from_chars(score_text.data(), score_text.data() + score_text.size(),
                                         score);
        if (score_text.empty() || ec != std::errc{} ||
            ptr != score_text.data() + score_text.size()) {
          throw Error(Errc::InvalidScore, "score '" + score_text + "' is not an integer");
        }
        const std::string explanation = get("explanation");
        const std::string mitigation = get("mitigation");
        validate_answer(score, explanation, mitigation);

        if (column.contains("class")) {
          const auto expected = to_string(classify(InteractionScore(score)));
          if (get("class") != expected) {
            throw Error(Errc::InvalidInput, "class '" + get("class") + "' does not match score " +
                                                score_text);
          }
        }
        if (!seen.insert(pair).second) {
          throw Error(Errc::Duplicate, "pair " + pair.str() + " appears more than once");
        }
        if (store::find_answer(db, pair)) {
          throw Error(Errc::AlreadyScored, "pair " + pair.str() + " has already been scored");
        }

        std::optional<std::string> attribution;
        if (column.contains("scorer")) attribution = get("scorer");
        const std::string stamp = get("scored_at");
        rows.push_back(store::AnswerRecord{pair, InteractionScore(score), explanation, mitigation,
                                           importer, std::move(attribution),
                                           stamp.empty() ? now : parse_iso8601(stamp)});
        lines.push_back(line);
      } catch (const Error& e) {
        issues.push_back({line, e.what()});
      }
    }
    if (!issues.empty()) throw ImportError(std::move(issues));

    for (std::size_t i = 0; i < rows.size(); ++i) {
      try {
        store::insert_answer(db, rows[i]);
      } catch (const Error& e) {
        throw ImportError({{lines[i], e.what()}});
      }
    }
    return rows.size();
  });
}

}  // namespace sdgnet
