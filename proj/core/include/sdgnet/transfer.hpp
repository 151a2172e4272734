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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdgnet/catalog.hpp"
#include "sdgnet/error.hpp"
#include "sdgnet/store.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {

inline constexpr const char* kExportHeader =
    "target_a,target_b,score,class,explanation,mitigation,scorer,scored_at";

/// One CSV row per colored interaction in canonical pair order. The scorer
/// column shows the full name only for users who opted in to being
/// acknowledged, "anonymous" otherwise; imported rows keep their original
/// scorer text.
std::string export_answers_csv(store::Database& db);

struct RowIssue {
  std::size_t line = 0;
  std::string message;
};

class ImportError : public Error {
 public:
  explicit ImportError(std::vector<RowIssue> issues);

  const std::vector<RowIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<RowIssue> issues_;
};

/// Bulk-colors pairs from CSV. Required columns: target_a, target_b, score.
/// Optional: explanation, mitigation, class, scorer, scored_at (the export
/// format is accepted as is). Rows get the same validation as a survey
/// answer. Any failing row aborts the whole import with ImportError listing
/// every offending line. Returns the number of imported rows.
std::size_t import_edges(store::Database& db, const Catalog& catalog, UserId importer,
                         std::istream& in, Clock clock = system_clock());

}  // namespace sdgnet
