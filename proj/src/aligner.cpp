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

#include "subalign/aligner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subalign {

namespace {
constexpr std::int64_t kSmoothingMillis = 1000;
}  // namespace

std::string_view to_string(OverlapKind kind) {
  switch (kind) {
    case OverlapKind::disjoint_a_before:
      return "disjoint_a_before";
    case OverlapKind::disjoint_b_before:
      return "disjoint_b_before";
    case OverlapKind::partial_a_leads:
      return "partial_a_leads";
    case OverlapKind::partial_b_leads:
      return "partial_b_leads";
    case OverlapKind::a_contains_b:
      return "a_contains_b";
    case OverlapKind::b_contains_a:
      return "b_contains_a";
    case OverlapKind::identical:
      return "identical";
  }
  return "?";
}

std::string_view to_string(AlignmentMode mode) {
  return mode == AlignmentMode::one_to_one ? "1-1" : "1-m";
}

std::optional<AlignmentMode> mode_from_string(std::string_view name) {
  if (name == "1-1") return AlignmentMode::one_to_one;
  if (name == "1-m" || name == "1-M") return AlignmentMode::one_to_many;
  return std::nullopt;
}

void AlignmentConfig::validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1]");
  if (max_expansion < 1) throw std::invalid_argument("max_expansion must be positive");
  if (strict_min_doc_ratio && !(*strict_min_doc_ratio >= 0.0 && *strict_min_doc_ratio <= 1.0))
    throw std::invalid_argument("strict_min_doc_ratio must lie in [0, 1]");
}

std::optional<OverlapScore> overlap_score(const TimeInterval& a, const TimeInterval& b) {
  const std::int64_t start_max = std::max(a.start(), b.start()).millis();
  const std::int64_t end_min = std::min(a.end(), b.end()).millis();
  if (end_min - start_max <= 0) return std::nullopt;
  const std::int64_t start_min = std::min(a.start(), b.start()).millis();
  const std::int64_t end_max = std::max(a.end(), b.end()).millis();
  return OverlapScore{end_min - start_max + kSmoothingMillis,
                      end_max - start_min + kSmoothingMillis};
}

std::optional<double> overlap_ratio(const TimeInterval& a, const TimeInterval& b) {
  if (auto s = overlap_score(a, b)) return s->value();
  return std::nullopt;
}

OverlapKind classify_overlap(const TimeInterval& a, const TimeInterval& b) {
  if (!overlap_score(a, b)) {
    const bool a_first = a.start() < b.start() || (a.start() == b.start() && a.end() <= b.end());
    return a_first ? OverlapKind::disjoint_a_before : OverlapKind::disjoint_b_before;
  }
  if (a == b) return OverlapKind::identical;
  if (b.start() <= a.start() && a.end() <= b.end()) return OverlapKind::b_contains_a;
  if (a.start() <= b.start() && b.end() <= a.end()) return OverlapKind::a_contains_b;
  return a.start() < b.start() ? OverlapKind::partial_a_leads : OverlapKind::partial_b_leads;
}

namespace {

struct Run {
  std::size_t first = 0;
  std::size_t count = 1;
  TimeInterval span;
};

Run single(const SubtitleDocument& doc, std::size_t pos) { return {pos, 1, doc[pos].interval}; }

std::string run_text(const SubtitleDocument& doc, const Run& run) {
  std::string out;
  for (std::size_t k = run.first; k < run.first + run.count; ++k) {
    if (k != run.first) out += ' ';
    out += doc[k].text("\n");
  }
  return out;
}

AlignedPair make_pair(const SubtitleDocument& doc_a, const Run& a, const SubtitleDocument& doc_b,
                      const Run& b, double ratio) {
  AlignedPair pair;
  for (std::size_t k = 0; k < a.count; ++k) pair.source_indices.push_back(a.first + k);
  for (std::size_t k = 0; k < b.count; ++k) pair.target_indices.push_back(b.first + k);
  pair.source_text = run_text(doc_a, a);
  pair.target_text = run_text(doc_b, b);
  pair.ratio = ratio;
  pair.span_a = a.span;
  pair.span_b = b.span;
  return pair;
}

bool clears(const OverlapScore& s, double threshold) { return s.value() >= threshold; }

// Grows `grow` by adjacent cues of `doc` until it clears the threshold
// against `fixed`. Returns the achieved ratio on success, leaving `grow`
// extended; on failure `grow` is left unspecified.
std::optional<double> try_expand(const SubtitleDocument& doc, Run& grow, const Run& fixed,
                                 const AlignmentConfig& cfg) {
  const std::int64_t fixed_end = fixed.span.end().millis();
  const std::int64_t fixed_duration = fixed.span.duration_millis();
  while (grow.count < cfg.max_expansion && grow.first + grow.count < doc.size()) {
    const auto& next = doc[grow.first + grow.count].interval;
    grow.span = TimeInterval(grow.span.start(), std::max(grow.span.end(), next.end()));
    ++grow.count;
    const auto score = overlap_score(grow.span, fixed.span);
    if (score && clears(*score, cfg.threshold)) return score->value();
    if (grow.span.end().millis() - fixed_end > fixed_duration) break;
  }
  return std::nullopt;
}

std::vector<AlignedPair> scan(const SubtitleDocument& doc_a, const SubtitleDocument& doc_b,
                              const AlignmentConfig& cfg, bool allow_expansion) {
  cfg.validate();
  std::vector<AlignedPair> pairs;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < doc_a.size() && j < doc_b.size()) {
    const Run a = single(doc_a, i);
    const Run b = single(doc_b, j);
    const auto score = overlap_score(a.span, b.span);
    if (score && clears(*score, cfg.threshold)) {
      pairs.push_back(make_pair(doc_a, a, doc_b, b, score->value()));
      ++i;
      ++j;
      continue;
    }
    // A false overlap may still match once the earlier-ending side absorbs
    // its next cues.
    if (score && allow_expansion && cfg.max_expansion > 1) {
      if (a.span.end() < b.span.end()) {
        Run grown = a;
        if (auto ratio = try_expand(doc_a, grown, b, cfg)) {
          pairs.push_back(make_pair(doc_a, grown, doc_b, b, *ratio));
          i += grown.count;
          ++j;
          continue;
        }
      } else {
        Run grown = b;
        if (auto ratio = try_expand(doc_b, grown, a, cfg)) {
          pairs.push_back(make_pair(doc_a, a, doc_b, grown, *ratio));
          ++i;
          j += grown.count;
          continue;
        }
      }
    }
    if (a.span.end() <= b.span.end()) {
      ++i;
    } else {
      ++j;
    }
  }
  return pairs;
}

}  // namespace

std::vector<AlignedPair> align_one_to_one(const SubtitleDocument& doc_a,
                                          const SubtitleDocument& doc_b,
                                          const AlignmentConfig& cfg) {
  return scan(doc_a, doc_b, cfg, false);
}

std::vector<AlignedPair> align_one_to_many(const SubtitleDocument& doc_a,
                                           const SubtitleDocument& doc_b,
                                           const AlignmentConfig& cfg) {
  return scan(doc_a, doc_b, cfg, true);
}

std::vector<AlignedPair> align(const SubtitleDocument& doc_a, const SubtitleDocument& doc_b,
                               const AlignmentConfig& cfg) {
  return cfg.mode == AlignmentMode::one_to_one ? align_one_to_one(doc_a, doc_b, cfg)
                                               : align_one_to_many(doc_a, doc_b, cfg);
}

double document_match_ratio(const std::vector<AlignedPair>& pairs, const SubtitleDocument& doc_a,
                            const SubtitleDocument& doc_b) {
  const std::size_t total = doc_a.size() + doc_b.size();
  if (total == 0) throw std::invalid_argument("match ratio undefined for two empty documents");
  std::vector<bool> covered_a(doc_a.size()), covered_b(doc_b.size());
  for (const auto& p : pairs) {
    for (auto k : p.source_indices) covered_a.at(k) = true;
    for (auto k : p.target_indices) covered_b.at(k) = true;
  }
  const auto covered = std::count(covered_a.begin(), covered_a.end(), true) +
                       std::count(covered_b.begin(), covered_b.end(), true);
  return static_cast<double>(covered) / static_cast<double>(total);
}

FilterDecision apply_strict_filter(double match_ratio, const AlignmentConfig& cfg) {
  if (!cfg.strict_min_doc_ratio) return FilterDecision::keep;
  return match_ratio < *cfg.strict_min_doc_ratio ? FilterDecision::drop : FilterDecision::keep;
}

}  // namespace subalign
