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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sdgnet/csv.hpp"
#include "sdgnet/error.hpp"
#include "sdgnet/time.hpp"

namespace sdgnet {
namespace {

TEST(Csv, ReadsQuotedFieldsWithCommasQuotesAndNewlines) {
  std::istringstream in("a,b,c\r\n1,\"x, y\",\"say \"\"hi\"\"\"\n2,\"two\nlines\",z\n\n");
  const auto rows = csv::read_all(in);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"1", "x, y", "say \"hi\""}));
  EXPECT_EQ(rows[2].fields, (std::vector<std::string>{"2", "two\nlines", "z"}));
  EXPECT_EQ(rows[2].line, 3u);
}

TEST(Csv, UnterminatedQuoteIsAnError) {
  std::istringstream in("a,\"open\n");
  EXPECT_THROW(csv::read_all(in), Error);
}

TEST(Csv, FormatThenReadRecoversFields) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab ,\"\n\r-";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> fields(3);
    for (auto& f : fields) {
      for (int i = len(rng); i > 0; --i) f += alphabet[pick(rng)];
    }
    fields[0] = "k" + fields[0];  // a blank record would be skipped
    // A bare '\r' before a line break is indistinguishable from CRLF.
    for (auto& f : fields) {
      for (std::size_t p; (p = f.find('\r')) != std::string::npos;) f.erase(p, 1);
    }
    std::istringstream in(csv::format_row(fields));
    const auto rows = csv::read_all(in);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].fields, fields);
  }
}

TEST(Time, FormatsAndParsesUtc) {
  const Timestamp t = parse_iso8601("2021-06-30T08:15:09Z");
  EXPECT_EQ(format_iso8601(t), "2021-06-30T08:15:09Z");
  EXPECT_EQ(format_iso8601(Timestamp{}), "1970-01-01T00:00:00Z");
}

TEST(Time, RejectsMalformedText) {
  EXPECT_THROW(parse_iso8601("2021-06-30 08:15:09"), Error);
  EXPECT_THROW(parse_iso8601("2021-02-30T00:00:00Z"), Error);
  EXPECT_THROW(parse_iso8601("2021-06-30T24:00:00Z"), Error);
}

}  // namespace
}  // namespace sdgnet
