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

// Time-overlap alignment of two subtitle documents.
//
// Two cues are scored by a smoothed Jaccard index over their display
// intervals, measured in seconds:
//
//   ratio = (intersect + 1) / (union + 1)
//
// where `intersect` is the time both cues are on screen and `union` runs
// from the earliest start to the latest end. A pair is accepted when the
// ratio reaches the configured threshold. The scan walks both documents
// once with a cursor each; in one-to-many mode a failed pair may grow one
// side by adjacent cues (never both) until the ratio clears the threshold.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subalign/subtitle.hpp"

namespace subalign {

enum class OverlapKind {
  disjoint_a_before,
  disjoint_b_before,
  partial_a_leads,
  partial_b_leads,
  a_contains_b,
  b_contains_a,
  identical,
};

std::string_view to_string(OverlapKind kind);

enum class AlignmentMode { one_to_one, one_to_many };

std::string_view to_string(AlignmentMode mode);
std::optional<AlignmentMode> mode_from_string(std::string_view name);  // "1-1" / "1-m"

struct AlignmentConfig {
  double threshold = 0.65;
  AlignmentMode mode = AlignmentMode::one_to_many;
  std::size_t max_expansion = 5;
  std::optional<double> strict_min_doc_ratio;

  static AlignmentConfig strict() {
    AlignmentConfig cfg;
    cfg.threshold = 0.85;
    cfg.strict_min_doc_ratio = 0.20;
    return cfg;
  }

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// One 1-1 or 1-M match. Indices are cue positions (0-based) in the
/// respective document.
struct AlignedPair {
  std::vector<std::size_t> source_indices;
  std::vector<std::size_t> target_indices;
  std::string source_text;
  std::string target_text;
  double ratio = 0.0;
  TimeInterval span_a;
  TimeInterval span_b;

  bool operator==(const AlignedPair&) const = default;
};

/// Exact numerator/denominator of the ratio, in milliseconds
/// (1 s of smoothing == 1000 ms).
struct OverlapScore {
  std::int64_t numerator;
  std::int64_t denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

// nullopt when the intervals share no positive-length span (touching
// intervals included).
std::optional<OverlapScore> overlap_score(const TimeInterval& a, const TimeInterval& b);
std::optional<double> overlap_ratio(const TimeInterval& a, const TimeInterval& b);

OverlapKind classify_overlap(const TimeInterval& a, const TimeInterval& b);

std::vector<AlignedPair> align_one_to_one(const SubtitleDocument& doc_a,
                                          const SubtitleDocument& doc_b,
                                          const AlignmentConfig& cfg);

std::vector<AlignedPair> align_one_to_many(const SubtitleDocument& doc_a,
                                           const SubtitleDocument& doc_b,
                                           const AlignmentConfig& cfg);

/// Dispatches on cfg.mode.
std::vector<AlignedPair> align(const SubtitleDocument& doc_a, const SubtitleDocument& doc_b,
                               const AlignmentConfig& cfg);

// Fraction of all cues (both sides) covered by some pair. Throws
// std::invalid_argument when both documents are empty.
double document_match_ratio(const std::vector<AlignedPair>& pairs, const SubtitleDocument& doc_a,
                            const SubtitleDocument& doc_b);

enum class FilterDecision { keep, drop };

// Drops a document pair whose match ratio is strictly below
// cfg.strict_min_doc_ratio; always keeps when that field is unset.
FilterDecision apply_strict_filter(double match_ratio, const AlignmentConfig& cfg);

}  // namespace subalign
