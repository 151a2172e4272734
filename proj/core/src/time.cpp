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

#include "sdgnet/time.hpp"

#include <charconv>
#include <cstdio>

#include "sdgnet/error.hpp"

namespace sdgnet {

Clock system_clock() {
  return [] {
    return std::chrono::floor<std::chrono::seconds>(
        std::chrono::system_clock::now());
  };
}

std::string format_iso8601(Timestamp t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

namespace {

int field(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  const char* first = text.data() + pos;
  const char* last = first + len;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw Error(Errc::InvalidInput,
                "malformed timestamp '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Timestamp parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' ||
      text[10] != 'T' || text[13] != ':' || text[16] != ':' ||
      text[19] != 'Z') {
    throw Error(Errc::InvalidInput,
                "malformed timestamp '" + std::string(text) + "'");
  }
  const year_month_day ymd{year{field(text, 0, 4)},
                           month{static_cast<unsigned>(field(text, 5, 2))},
                           day{static_cast<unsigned>(field(text, 8, 2))}};
  const int h = field(text, 11, 2);
  const int m = field(text, 14, 2);
  const int s = field(text, 17, 2);
  if (!ymd.ok() || h > 23 || m > 59 || s > 59) {
    throw Error(Errc::InvalidInput,
                "timestamp out of range '" + std::string(text) + "'");
  }
  return sys_days{ymd} + hours{h} + minutes{m} + seconds{s};
}

}  // namespace sdgnet
