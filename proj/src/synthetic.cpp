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

#include "subalign/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string_view>

namespace subalign {

namespace {

constexpr std::array<std::string_view, 24> kSourceWords = {
    "the",  "you",  "what", "is",    "we",    "have", "to",    "go",
    "now",  "come", "here", "never", "know",  "this", "place", "right",
    "tell", "me",   "why",  "she",   "left",  "it",   "was",   "late"};

constexpr std::array<std::string_view, 16> kTargetWords = {
    "ماذا", "أنت", "نحن",
    "هنا",       "الآن", "لا",
    "نعم",       "لماذا", "هي",
    "كان",       "ذهب", "تعال",
    "أعرف", "المكان", "متأخر",
    "قل"};

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

template <std::size_t N>
std::string words(Rng& rng, const std::array<std::string_view, N>& vocab, std::size_t count) {
  std::string out;
  for (std::size_t k = 0; k < count; ++k) {
    if (k) out += ' ';
    out += vocab[static_cast<std::size_t>(uniform(rng, 0, N - 1))];
  }
  return out;
}

std::size_t word_count(Rng& rng, std::int64_t duration_ms, double words_per_second) {
  const double expected = static_cast<double>(duration_ms) / 1000.0 * words_per_second;
  const double scaled = expected * (0.8 + 0.4 * unit(rng));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(scaled)));
}

TimeInterval jittered(Rng& rng, std::int64_t start, std::int64_t end, std::int64_t jitter) {
  if (jitter > 0) {
    start += uniform(rng, -jitter, jitter);
    end += uniform(rng, -jitter, jitter);
  }
  start = std::max<std::int64_t>(start, 0);
  end = std::max(end, start);
  return TimeInterval::from_millis(start, end);
}

}  // namespace

void SynthOptions::validate() const {
  if (jitter_ms < 0) throw std::invalid_argument("jitter_ms must be non-negative");
  if (!(split_probability >= 0.0 && split_probability <= 1.0) ||
      !(drop_probability >= 0.0 && drop_probability <= 1.0))
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  if (min_duration_ms <= 0 || max_duration_ms < min_duration_ms)
    throw std::invalid_argument("bad cue duration range");
  if (min_gap_ms < 0 || max_gap_ms < min_gap_ms) throw std::invalid_argument("bad gap range");
}

SyntheticPair generate_synthetic_pair(const SynthOptions& options) {
  options.validate();
  Rng rng(options.seed);

  std::vector<SubtitleCue> cues_a;
  std::int64_t t = uniform(rng, options.min_gap_ms, options.max_gap_ms);
  for (std::size_t k = 0; k < options.cue_count; ++k) {
    const std::int64_t duration = uniform(rng, options.min_duration_ms, options.max_duration_ms);
    const std::size_t n = word_count(rng, duration, options.words_per_second);
    cues_a.push_back({static_cast<std::uint32_t>(k + 1), TimeInterval::from_millis(t, t + duration),
                      {words(rng, kSourceWords, n)}});
    t += duration + uniform(rng, options.min_gap_ms, options.max_gap_ms);
  }

  // Target cues in generation order, tagged with the source cue they came from.
  struct Pending {
    SubtitleCue cue;
    std::size_t source;
  };
  std::vector<Pending> pending;
  for (std::size_t k = 0; k < cues_a.size(); ++k) {
    const auto& iv = cues_a[k].interval;
    const std::int64_t s = iv.start().millis();
    const std::int64_t e = iv.end().millis();
    const std::size_t n = word_count(rng, iv.duration_millis(), options.words_per_second);
    const double roll = unit(rng);
    if (roll < options.drop_probability) continue;
    if (unit(rng) < options.split_probability) {
      const double fraction = 0.3 + 0.4 * unit(rng);
      const std::int64_t mid = s + std::llround(fraction * static_cast<double>(e - s));
      const std::int64_t gap = std::min<std::int64_t>(uniform(rng, 0, 80), (e - mid) / 2);
      const std::size_t n1 =
          std::clamp<std::size_t>(std::lround(fraction * static_cast<double>(n)), 1, std::max<std::size_t>(n, 2) - 1);
      const std::size_t n2 = std::max<std::size_t>(1, n - std::min(n, n1));
      pending.push_back({{0, jittered(rng, s, mid, options.jitter_ms), {words(rng, kTargetWords, n1)}}, k});
      pending.push_back({{0, jittered(rng, mid + gap, e, options.jitter_ms), {words(rng, kTargetWords, n2)}}, k});
    } else {
      pending.push_back({{0, jittered(rng, s, e, options.jitter_ms), {words(rng, kTargetWords, n)}}, k});
    }
  }

  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& x, const Pending& y) { return x.cue.interval < y.cue.interval; });
  std::vector<GoldLink> gold;
  std::vector<std::ptrdiff_t> link_of_source(cues_a.size(), -1);
  std::vector<SubtitleCue> cues_b;
  for (std::size_t pos = 0; pos < pending.size(); ++pos) {
    pending[pos].cue.index = static_cast<std::uint32_t>(pos + 1);
    cues_b.push_back(pending[pos].cue);
    auto& link = link_of_source[pending[pos].source];
    if (link < 0) {
      link = static_cast<std::ptrdiff_t>(gold.size());
      gold.push_back({{pending[pos].source}, {}});
    }
    gold[static_cast<std::size_t>(link)].target.push_back(pos);
  }
  std::sort(gold.begin(), gold.end());

  return {SubtitleDocument(std::move(cues_a), Script::latin, "synthetic-a"),
          SubtitleDocument(std::move(cues_b), Script::arabic, "synthetic-b"), std::move(gold)};
}

AlignmentScore evaluate_alignment(const std::vector<AlignedPair>& pairs,
                                  const std::vector<GoldLink>& gold) {
  const std::set<GoldLink> gold_set(gold.begin(), gold.end());
  AlignmentScore score;
  score.predicted = pairs.size();
  score.gold = gold_set.size();
  for (const auto& p : pairs) {
    if (gold_set.count(GoldLink{p.source_indices, p.target_indices})) ++score.correct;
  }
  if (score.predicted > 0)
    score.precision = static_cast<double>(score.correct) / static_cast<double>(score.predicted);
  if (score.gold > 0)
    score.recall = static_cast<double>(score.correct) / static_cast<double>(score.gold);
  return score;
}

}  // namespace subalign
