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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_util.hpp"

namespace subalign {
namespace {

using testing::cue;
using testing::doc_from_intervals;

TimeInterval sec(std::int64_t s, std::int64_t e) { return TimeInterval::from_millis(s * 1000, e * 1000); }

AlignmentConfig one_to_one(double threshold = 0.65) {
  AlignmentConfig cfg;
  cfg.threshold = threshold;
  cfg.mode = AlignmentMode::one_to_one;
  return cfg;
}

TEST(OverlapRatioTest, IdenticalIntervalsScoreOne) {
  EXPECT_EQ(overlap_ratio(sec(0, 10), sec(0, 10)), 1.0);
}

TEST(OverlapRatioTest, HandEvaluatedPartialOverlap) {
  // intersect 1 s, union 4 s: (1 + 1) / (4 + 1).
  const auto r = overlap_ratio(sec(0, 2), sec(1, 4));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, 0.4);
  const auto s = overlap_score(sec(0, 2), sec(1, 4));
  EXPECT_EQ(s->numerator, 2000);
  EXPECT_EQ(s->denominator, 5000);
}

TEST(OverlapRatioTest, DisjointAndTouchingAreAbsent) {
  EXPECT_FALSE(overlap_ratio(sec(0, 1), sec(2, 3)));
  EXPECT_FALSE(overlap_ratio(sec(0, 2), sec(2, 3)));
  EXPECT_FALSE(overlap_ratio(sec(5, 5), sec(5, 5)));
}

TEST(OverlapRatioTest, SymmetricAndBounded) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> t(0, 60'000);
  for (int k = 0; k < 5000; ++k) {
    auto a0 = t(rng), a1 = t(rng), b0 = t(rng), b1 = t(rng);
    const auto a = TimeInterval::from_millis(std::min(a0, a1), std::max(a0, a1));
    const auto b = TimeInterval::from_millis(std::min(b0, b1), std::max(b0, b1));
    const auto ab = overlap_ratio(a, b);
    ASSERT_EQ(ab, overlap_ratio(b, a));
    if (ab) {
      ASSERT_GT(*ab, 0.0);
      ASSERT_LE(*ab, 1.0);
    }
  }
}

TEST(ClassifyOverlapTest, Taxonomy) {
  EXPECT_EQ(classify_overlap(sec(0, 2), sec(1, 4)), OverlapKind::partial_a_leads);
  EXPECT_EQ(classify_overlap(sec(1, 4), sec(0, 2)), OverlapKind::partial_b_leads);
  EXPECT_EQ(classify_overlap(sec(1, 2), sec(0, 10)), OverlapKind::b_contains_a);
  EXPECT_EQ(classify_overlap(sec(0, 10), sec(1, 2)), OverlapKind::a_contains_b);
  EXPECT_EQ(classify_overlap(sec(0, 5), sec(0, 5)), OverlapKind::identical);
  EXPECT_EQ(classify_overlap(sec(0, 1), sec(2, 3)), OverlapKind::disjoint_a_before);
  EXPECT_EQ(classify_overlap(sec(2, 3), sec(0, 1)), OverlapKind::disjoint_b_before);
  // Touching intervals do not overlap.
  EXPECT_EQ(classify_overlap(sec(0, 2), sec(2, 3)), OverlapKind::disjoint_a_before);
  // Shared start with different ends is containment, inclusive bounds.
  EXPECT_EQ(classify_overlap(sec(0, 3), sec(0, 5)), OverlapKind::b_contains_a);
}

TEST(ClassifyOverlapTest, ExactlyOneKindAgreesWithRatio) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> t(0, 20);
  for (int k = 0; k < 3000; ++k) {
    auto a0 = t(rng), a1 = t(rng), b0 = t(rng), b1 = t(rng);
    const auto a = sec(std::min(a0, a1), std::max(a0, a1));
    const auto b = sec(std::min(b0, b1), std::max(b0, b1));
    const auto kind = classify_overlap(a, b);
    const bool disjoint = kind == OverlapKind::disjoint_a_before || kind == OverlapKind::disjoint_b_before;
    ASSERT_EQ(disjoint, !overlap_ratio(a, b).has_value());
    if (kind == OverlapKind::identical) ASSERT_EQ(overlap_ratio(a, b), 1.0);
  }
}

TEST(AlignOneToOneTest, IdenticalDocumentsFullyPaired) {
  const auto a = doc_from_intervals({{0, 1500}, {2000, 4000}, {4100, 9000}});
  const auto pairs = align_one_to_one(a, a, one_to_one());
  ASSERT_EQ(pairs.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(pairs[k].source_indices, std::vector<std::size_t>{k});
    EXPECT_EQ(pairs[k].target_indices, std::vector<std::size_t>{k});
    EXPECT_EQ(pairs[k].ratio, 1.0);
  }
}

TEST(AlignOneToOneTest, BelowThresholdOverlapNotPaired) {
  const auto a = doc_from_intervals({{0, 2000}});
  const auto b = doc_from_intervals({{1000, 4000}});
  EXPECT_TRUE(align_one_to_one(a, b, one_to_one()).empty());
  // The same pair clears a threshold of 0.4.
  EXPECT_EQ(align_one_to_one(a, b, one_to_one(0.4)).size(), 1u);
}

TEST(AlignOneToOneTest, EmptyInputs) {
  const auto a = doc_from_intervals({{0, 2000}});
  EXPECT_TRUE(align_one_to_one(a, SubtitleDocument{}, one_to_one()).empty());
  EXPECT_TRUE(align_one_to_one(SubtitleDocument{}, a, one_to_one()).empty());
}

TEST(AlignOneToOneTest, PairTextKeepsLineBreaks) {
  SubtitleDocument a({cue(1, 0, 2000, {"two", "lines"})});
  SubtitleDocument b({cue(1, 0, 2000, {"deux lignes"})});
  const auto pairs = align_one_to_one(a, b, one_to_one());
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].source_text, "two\nlines");
  EXPECT_EQ(pairs[0].target_text, "deux lignes");
}

// 50 cues of >= 2 s separated by >= 500 ms, every boundary of the copy
// moved by up to 100 ms: the brute-force oracle sees exactly one
// above-threshold partner per cue, and the scan finds all 50.
TEST(AlignOneToOneTest, JitteredSelfAlignmentMatchesEverything) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dur(2000, 6000), gap(500, 1500), jit(-100, 100);
  std::vector<std::pair<std::int64_t, std::int64_t>> ivs_a, ivs_b;
  std::int64_t t = 1000;
  for (int k = 0; k < 50; ++k) {
    const auto d = dur(rng);
    ivs_a.emplace_back(t, t + d);
    ivs_b.emplace_back(t + jit(rng), t + d + jit(rng));
    t += d + gap(rng);
  }
  const auto a = doc_from_intervals(ivs_a);
  const auto b = doc_from_intervals(ivs_b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t partners = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto r = overlap_ratio(a[i].interval, b[j].interval);
      if (r && *r >= 0.65) {
        ++partners;
        EXPECT_EQ(i, j);
      }
    }
    EXPECT_EQ(partners, 1u);
  }
  const auto pairs = align_one_to_one(a, b, one_to_one());
  ASSERT_EQ(pairs.size(), 50u);
  EXPECT_EQ(testing::index_pairs(pairs), testing::oracle_one_to_one(a, b, 0.65));
}

TEST(AlignOneToOneTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = testing::random_sequential_doc(rng, 12);
    const auto b = testing::random_sequential_doc(rng, 12);
    for (double threshold : {0.65, 0.85, 0.5}) {
      ASSERT_EQ(testing::index_pairs(align_one_to_one(a, b, one_to_one(threshold))),
                testing::oracle_one_to_one(a, b, threshold))
          << "trial " << trial << " threshold " << threshold;
    }
  }
}

TEST(AlignOneToManyTest, SplitTargetJoinsAdjacentCues) {
  SubtitleDocument a({cue(1, 0, 4000, {"whole sentence"})});
  SubtitleDocument b({cue(1, 0, 2000, {"first"}), cue(2, 2000, 4000, {"second"})});
  // Individually (2 + 1) / (4 + 1) = 0.6 < 0.65.
  EXPECT_EQ(overlap_ratio(a[0].interval, b[0].interval), 0.6);
  EXPECT_TRUE(align_one_to_one(a, b, one_to_one()).empty());

  AlignmentConfig cfg;
  const auto pairs = align_one_to_many(a, b, cfg);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].source_indices, std::vector<std::size_t>{0});
  EXPECT_EQ(pairs[0].target_indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(pairs[0].ratio, 1.0);
  EXPECT_EQ(pairs[0].target_text, "first second");
  EXPECT_EQ(pairs[0].span_b, TimeInterval::from_millis(0, 4000));
}

TEST(AlignOneToManyTest, SplitSourceExpandsSourceSide) {
  SubtitleDocument a({cue(1, 0, 2000, {"first"}), cue(2, 2000, 4000, {"second"})});
  SubtitleDocument b({cue(1, 0, 4000, {"whole"})});
  const auto pairs = align_one_to_many(a, b, AlignmentConfig{});
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].source_indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(pairs[0].source_text, "first second");
  EXPECT_EQ(pairs[0].target_indices, std::vector<std::size_t>{0});
}

TEST(AlignOneToManyTest, ExpansionCappedAtMaxExpansion) {
  // Six 1.5 s pieces tiling a 9 s cue: five pieces reach only 7.5 s,
  // (7.5 + 1) / (9 + 1) = 0.85; six would give 1.0.
  std::vector<std::pair<std::int64_t, std::int64_t>> pieces;
  for (int k = 0; k < 6; ++k) pieces.emplace_back(k * 1500, (k + 1) * 1500);
  const auto b = doc_from_intervals(pieces);
  const auto a = doc_from_intervals({{0, 9000}});
  AlignmentConfig cfg;
  cfg.threshold = 0.9;
  EXPECT_TRUE(align_one_to_many(a, b, cfg).empty());
  cfg.max_expansion = 6;
  const auto pairs = align_one_to_many(a, b, cfg);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].target_indices.size(), 6u);
  cfg.max_expansion = 5;
  cfg.threshold = 0.85;
  ASSERT_EQ(align_one_to_many(a, b, cfg).size(), 1u);
  EXPECT_EQ(align_one_to_many(a, b, cfg)[0].target_indices.size(), 5u);
}

TEST(AlignOneToManyTest, OvershootStopsExpansion) {
  // B's second cue runs far past A's end: joining it overshoots A by more
  // than A's own duration, so expansion stops after trying it.
  const auto a = doc_from_intervals({{0, 2000}});
  const auto b = doc_from_intervals({{1200, 1900}, {1950, 8000}, {8000, 8100}});
  EXPECT_TRUE(align_one_to_many(a, b, AlignmentConfig{}).empty());
}

TEST(AlignOneToManyTest, FailedExpansionFallsBackToOneToOne) {
  // A0 overlaps B0 weakly; expanding B does not help, A1 then matches B1.
  const auto a = doc_from_intervals({{0, 1000}, {3000, 6000}});
  const auto b = doc_from_intervals({{800, 3100}, {3000, 6000}});
  const auto pairs = align_one_to_many(a, b, AlignmentConfig{});
  EXPECT_EQ(testing::index_pairs(pairs), (std::vector<testing::IndexPair>{{1, 1}}));
}

TEST(AlignOneToManyTest, IdenticalDocumentsNeverExpand) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_sequential_doc(rng, 30);
    EXPECT_EQ(align_one_to_many(a, a, AlignmentConfig{}), align_one_to_one(a, a, one_to_one()));
  }
}

TEST(AlignOneToManyTest, MaxExpansionOneDegeneratesToOneToOne) {
  std::mt19937_64 rng(22);
  AlignmentConfig cfg;
  cfg.max_expansion = 1;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = testing::random_free_doc(rng, 15);
    const auto b = testing::random_free_doc(rng, 15);
    ASSERT_EQ(align_one_to_many(a, b, cfg), align_one_to_one(a, b, cfg));
  }
}

void check_structural_invariants(const std::vector<AlignedPair>& pairs, const AlignmentConfig& cfg,
                                  const SubtitleDocument& a, const SubtitleDocument& b) {
  std::optional<std::size_t> last_a, last_b;
  for (const auto& p : pairs) {
    ASSERT_FALSE(p.source_indices.empty());
    ASSERT_FALSE(p.target_indices.empty());
    ASSERT_EQ(std::min(p.source_indices.size(), p.target_indices.size()), 1u);
    ASSERT_LE(p.source_indices.size(), cfg.max_expansion);
    ASSERT_LE(p.target_indices.size(), cfg.max_expansion);
    ASSERT_GE(p.ratio, cfg.threshold);
    ASSERT_LE(p.ratio, 1.0);
    for (auto k : p.source_indices) {
      ASSERT_LT(k, a.size());
      if (last_a) ASSERT_GT(k, *last_a);
      last_a = k;
    }
    for (auto k : p.target_indices) {
      ASSERT_LT(k, b.size());
      if (last_b) ASSERT_GT(k, *last_b);
      last_b = k;
    }
    // Contiguous runs.
    ASSERT_EQ(p.source_indices.back() - p.source_indices.front() + 1, p.source_indices.size());
    ASSERT_EQ(p.target_indices.back() - p.target_indices.front() + 1, p.target_indices.size());
    ASSERT_EQ(overlap_ratio(p.span_a, p.span_b), p.ratio);
  }
}

TEST(AlignerPropertyTest, ThresholdSoundnessAndMonotoneInjective) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = trial % 2 ? testing::random_free_doc(rng, 20) : testing::random_sequential_doc(rng, 20);
    const auto b = trial % 3 ? testing::random_free_doc(rng, 20) : testing::random_sequential_doc(rng, 20);
    for (double threshold : {0.3, 0.65, 0.85, 1.0}) {
      AlignmentConfig cfg;
      cfg.threshold = threshold;
      check_structural_invariants(align_one_to_one(a, b, cfg), cfg, a, b);
      check_structural_invariants(align_one_to_many(a, b, cfg), cfg, a, b);
    }
  }
}

TEST(AlignerPropertyTest, SubHalfGapShiftKeepsMatchedPairs) {
  // Cues of >= 1 s and gaps of 200-800 ms: any shift below half the
  // smallest gap keeps every self-pair above 0.65 and creates no new ones.
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<std::int64_t> dur(1000, 7000), gap(200, 800);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<std::int64_t, std::int64_t>> ivs;
    std::int64_t t = 0;
    std::int64_t min_gap = 1'000'000;
    for (int k = 0; k < 40; ++k) {
      const auto d = dur(rng);
      ivs.emplace_back(t, t + d);
      const auto g = gap(rng);
      min_gap = std::min(min_gap, g);
      t += d + g;
    }
    const auto a = doc_from_intervals(ivs);
    const std::int64_t shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>((min_gap + 1) / 2));
    for (auto& iv : ivs) {
      iv.first += shift;
      iv.second += shift;
    }
    const auto shifted = doc_from_intervals(ivs);
    for (auto mode : {AlignmentMode::one_to_one, AlignmentMode::one_to_many}) {
      AlignmentConfig cfg;
      cfg.mode = mode;
      ASSERT_EQ(testing::index_pairs(align(a, a, cfg)), testing::index_pairs(align(a, shifted, cfg)));
    }
  }
}

TEST(DocumentMatchRatioTest, Definitions) {
  const auto a = doc_from_intervals({{0, 1000}, {2000, 3000}});
  EXPECT_EQ(document_match_ratio(align_one_to_one(a, a, one_to_one()), a, a), 1.0);
  EXPECT_EQ(document_match_ratio({}, a, a), 0.0);
  EXPECT_THROW(document_match_ratio({}, SubtitleDocument{}, SubtitleDocument{}), std::invalid_argument);
}

TEST(DocumentMatchRatioTest, FivePairsOverFortyFiveCues) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ivs_a, ivs_b;
  for (int k = 0; k < 20; ++k) ivs_a.emplace_back(k * 10'000, k * 10'000 + 2000);
  for (int k = 0; k < 25; ++k) ivs_b.emplace_back(k * 10'000 + 5000, k * 10'000 + 6000);
  const auto a = doc_from_intervals(ivs_a);
  const auto b = doc_from_intervals(ivs_b);
  std::vector<AlignedPair> pairs;
  for (std::size_t k = 0; k < 5; ++k) pairs.push_back({{k}, {k}, "", "", 1.0, {}, {}});
  EXPECT_DOUBLE_EQ(document_match_ratio(pairs, a, b), 10.0 / 45.0);
}

TEST(StrictFilterTest, Boundary) {
  const auto strict = AlignmentConfig::strict();
  EXPECT_EQ(strict.threshold, 0.85);
  EXPECT_EQ(strict.strict_min_doc_ratio, 0.20);
  EXPECT_EQ(apply_strict_filter(0.19, strict), FilterDecision::drop);
  EXPECT_EQ(apply_strict_filter(0.20, strict), FilterDecision::keep);
  EXPECT_EQ(apply_strict_filter(9.0 / 45.0, strict), FilterDecision::keep);
  EXPECT_EQ(apply_strict_filter(0.0, AlignmentConfig{}), FilterDecision::keep);
}

TEST(AlignmentConfigTest, DefaultsAndValidation) {
  AlignmentConfig cfg;
  EXPECT_EQ(cfg.threshold, 0.65);
  EXPECT_EQ(cfg.max_expansion, 5u);
  EXPECT_FALSE(cfg.strict_min_doc_ratio);
  cfg.threshold = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.threshold = 0.65;
  cfg.max_expansion = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(mode_from_string("1-1"), AlignmentMode::one_to_one);
  EXPECT_EQ(mode_from_string("1-m"), AlignmentMode::one_to_many);
  EXPECT_FALSE(mode_from_string("m-m"));
}

}  // namespace
}  // namespace subalign
