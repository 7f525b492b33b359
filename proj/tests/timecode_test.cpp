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

#include <gtest/gtest.h>

#include <random>

#include "subalign/errors.hpp"

namespace subalign {
namespace {

TEST(TimecodeTest, ParsesZero) { EXPECT_EQ(parse_timestamp("00:00:00,000").millis(), 0); }

TEST(TimecodeTest, PositionalArithmetic) {
  EXPECT_EQ(parse_timestamp("01:02:03,456").millis(), 3'723'456);
}

TEST(TimecodeTest, AcceptsPeriodSeparator) {
  EXPECT_EQ(parse_timestamp("00:00:01.500").millis(), 1'500);
}

TEST(TimecodeTest, FormatsWithComma) {
  EXPECT_EQ(format_timestamp(Timestamp(3'723'456)), "01:02:03,456");
  EXPECT_EQ(format_timestamp(Timestamp(1'500)), "00:00:01,500");
}

TEST(TimecodeTest, ErrorNamesOffendingOffset) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  const Case cases[] = {
      {"garbage", 0},         {"00:0:00,000", 4},   {"00:00:00;000", 8},
      {"00:00:00,00", 11},    {"00:61:00,000", 3},  {"00:00:00,000x", 12},
      {"", 0},                {"00-00:00,000", 2},
  };
  for (const auto& c : cases) {
    try {
      parse_timestamp(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text;
    }
  }
}

TEST(TimecodeTest, RoundTripsOverDomain) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, 100LL * 3'600'000 - 1);
  for (int k = 0; k < 20'000; ++k) {
    const Timestamp ts(dist(rng));
    ASSERT_EQ(parse_timestamp(format_timestamp(ts)), ts);
  }
  const Timestamp last(100LL * 3'600'000 - 1);
  EXPECT_EQ(format_timestamp(last), "99:59:59,999");
  EXPECT_EQ(parse_timestamp(format_timestamp(last)), last);
}

TEST(TimecodeTest, IntervalRejectsReversedBounds) {
  EXPECT_THROW(TimeInterval::from_millis(10, 5), std::invalid_argument);
  EXPECT_TRUE(TimeInterval::from_millis(5, 5).empty());
  EXPECT_THROW(Timestamp(-1), std::invalid_argument);
}

}  // namespace
}  // namespace subalign
