// Copyright 2026 The subalign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subalign/timecode.hpp"

#include <cstdio>

#include "subalign/errors.hpp"

namespace subalign {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void fail(std::string_view text, std::size_t pos, const char* expected) {
  throw ParseError("malformed timecode '" + std::string(text) + "': expected " + expected +
                       " at byte " + std::to_string(pos),
                   pos);
}

// Reads exactly `width` digits (or at least one, up to 9, when width == 0).
std::int64_t read_digits(std::string_view text, std::size_t& pos, std::size_t width,
                         const char* what) {
  const std::size_t begin = pos;
  std::int64_t value = 0;
  while (pos < text.size() && is_digit(text[pos]) && (width == 0 || pos - begin < width)) {
    if (pos - begin >= 9) fail(text, pos, "fewer digits");
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  if (pos == begin || (width != 0 && pos - begin != width)) fail(text, pos, what);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c, const char* what) {
  if (pos >= text.size() || text[pos] != c) fail(text, pos, what);
  ++pos;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  std::size_t pos = 0;
  const std::int64_t hours = read_digits(text, pos, 0, "hour digits");
  expect(text, pos, ':', "':'");
  const std::int64_t minutes = read_digits(text, pos, 2, "two minute digits");
  if (minutes >= 60) fail(text, pos - 2, "minutes below 60");
  expect(text, pos, ':', "':'");
  const std::int64_t seconds = read_digits(text, pos, 2, "two second digits");
  if (seconds >= 60) fail(text, pos - 2, "seconds below 60");
  if (pos >= text.size() || (text[pos] != ',' && text[pos] != '.'))
    fail(text, pos, "',' or '.'");
  ++pos;
  const std::int64_t millis = read_digits(text, pos, 3, "three millisecond digits");
  if (pos != text.size()) fail(text, pos, "end of timecode");
  return Timestamp(hours * 3'600'000 + minutes * 60'000 + seconds * 1'000 + millis);
}

std::string format_timestamp(Timestamp ts) {
  std::int64_t ms = ts.millis();
  const std::int64_t hours = ms / 3'600'000;
  ms %= 3'600'000;
  const std::int64_t minutes = ms / 60'000;
  ms %= 60'000;
  const std::int64_t seconds = ms / 1'000;
  ms %= 1'000;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld,%03lld", static_cast<long long>(hours),
                static_cast<long long>(minutes), static_cast<long long>(seconds),
                static_cast<long long>(ms));
  return buf;
}

}  // namespace subalign
