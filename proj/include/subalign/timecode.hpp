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

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subalign {

/// Milliseconds since the start of the movie.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  constexpr explicit Timestamp(std::int64_t millis) : millis_(millis) {
    if (millis < 0) throw std::invalid_argument("negative timestamp");
  }

  constexpr std::int64_t millis() const noexcept { return millis_; }
  constexpr double seconds() const noexcept { return static_cast<double>(millis_) / 1000.0; }

  constexpr auto operator<=>(const Timestamp&) const = default;

 private:
  std::int64_t millis_ = 0;
};

/// Closed time span [start, end]. start <= end; zero length is allowed.
class TimeInterval {
 public:
  constexpr TimeInterval() = default;
  constexpr TimeInterval(Timestamp start, Timestamp end) : start_(start), end_(end) {
    if (end < start) throw std::invalid_argument("interval ends before it starts");
  }
  static constexpr TimeInterval from_millis(std::int64_t start, std::int64_t end) {
    return TimeInterval(Timestamp(start), Timestamp(end));
  }

  constexpr Timestamp start() const noexcept { return start_; }
  constexpr Timestamp end() const noexcept { return end_; }
  constexpr std::int64_t duration_millis() const noexcept {
    return end_.millis() - start_.millis();
  }
  constexpr bool empty() const noexcept { return start_ == end_; }

  constexpr auto operator<=>(const TimeInterval&) const = default;

 private:
  Timestamp start_;
  Timestamp end_;
};

// `HH:MM:SS,mmm`; a period in place of the comma is accepted. Hours may have
// more than two digits. Throws ParseError with the offending byte offset.
Timestamp parse_timestamp(std::string_view text);

// Inverse of parse_timestamp, always with a comma separator.
std::string format_timestamp(Timestamp ts);

}  // namespace subalign
