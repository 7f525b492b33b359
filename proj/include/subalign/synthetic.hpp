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

// Synthetic subtitle pairs with a known alignment, and precision/recall
// scoring against it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subalign/aligner.hpp"
#include "subalign/subtitle.hpp"

namespace subalign {

struct SynthOptions {
  std::uint64_t seed = 0;
  std::size_t cue_count = 100;
  std::int64_t jitter_ms = 0;
  double split_probability = 0.0;
  double drop_probability = 0.0;

  std::int64_t min_duration_ms = 1000;
  std::int64_t max_duration_ms = 7000;
  std::int64_t min_gap_ms = 200;
  std::int64_t max_gap_ms = 2000;
  // Source text length scales with cue duration.
  double words_per_second = 2.5;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// A gold correspondence: source cue positions to target cue positions.
struct GoldLink {
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;

  auto operator<=>(const GoldLink&) const = default;
};

struct SyntheticPair {
  SubtitleDocument doc_a;
  SubtitleDocument doc_b;
  std::vector<GoldLink> gold;
};

// doc_a gets random cue durations and gaps; doc_b is derived from it by
// jittering every boundary by up to +-jitter_ms, splitting cues in two
// (gold 1-2) and dropping cues (no gold link). Same options, same output.
SyntheticPair generate_synthetic_pair(const SynthOptions& options);

struct AlignmentScore {
  std::size_t predicted = 0;
  std::size_t gold = 0;
  std::size_t correct = 0;
  double precision = 1.0;  // 1 when nothing was predicted
  double recall = 1.0;     // 1 when the gold set is empty
};

// Exact-match scoring: a predicted pair counts only if its source and
// target index lists equal a gold link.
AlignmentScore evaluate_alignment(const std::vector<AlignedPair>& pairs,
                                  const std::vector<GoldLink>& gold);

}  // namespace subalign
