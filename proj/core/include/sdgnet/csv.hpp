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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdgnet::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
// newlines. A trailing '\r' before '\n' is dropped. Blank lines are skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::optional<Record> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<Record> read_all(std::istream& in);

// Quotes only when the field contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

std::string format_row(const std::vector<std::string>& fields);

}  // namespace sdgnet::csv
