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

// End-to-end processing: load -> clean -> align -> filter, for one document
// pair or a whole manifest.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subalign/aligner.hpp"
#include "subalign/corpus.hpp"
#include "subalign/preprocess.hpp"
#include "subalign/subtitle.hpp"

namespace subalign {

// Reads and parses an SRT file. Throws std::runtime_error if unreadable,
// plus the parse_srt errors.
SrtParseResult load_srt_file(const std::filesystem::path& path);

struct PairResult {
  std::vector<AlignedPair> pairs;
  double match_ratio = 0.0;
  FilterDecision decision = FilterDecision::keep;
  CleaningReport cleaning_a;
  CleaningReport cleaning_b;
  std::size_t cues_a = 0;  // after cleaning
  std::size_t cues_b = 0;
};

PairResult process_documents(const SubtitleDocument& doc_a, const SubtitleDocument& doc_b,
                             const AlignmentConfig& cfg);

nlohmann::ordered_json config_to_json(const AlignmentConfig& cfg);
nlohmann::ordered_json cleaning_to_json(const CleaningReport& report);
nlohmann::ordered_json warnings_to_json(const std::vector<ParseWarning>& warnings);

// Per-pair report. Parse warnings are included when given.
nlohmann::ordered_json pair_report(const PairResult& result, const AlignmentConfig& cfg,
                                   const std::vector<ParseWarning>& warnings_a = {},
                                   const std::vector<ParseWarning>& warnings_b = {});

// Runs fn(0..count-1) on up to `jobs` threads. fn must not throw.
void for_each_index(std::size_t count, std::size_t jobs,
                    const std::function<void(std::size_t)>& fn);

struct BatchOptions {
  std::filesystem::path manifest;
  std::filesystem::path out_dir;
  AlignmentConfig alignment;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<std::string> language_a;
  std::optional<std::string> language_b;
};

struct BatchResult {
  CorpusStats stats;
  std::size_t failed = 0;
  std::size_t dropped = 0;
  std::filesystem::path source_corpus;
  std::filesystem::path target_corpus;
};

// Builds the catalog, aligns every pair and writes into out_dir:
//   corpus.<language_a>, corpus.<language_b>  concatenated in manifest order
//   catalog.tsv                               chosen versions and seed
//   report.json                               one entry per document pair
//   stats.json                                aggregate CorpusStats
// Per-pair failures are logged and skipped. Output bytes do not depend on
// `jobs`.
BatchResult run_batch(const BatchOptions& options);

}  // namespace subalign
