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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subalign/aligner.hpp"

namespace subalign {

/// One row of the input manifest (TSV: movie_id, language, release_name, path).
struct ManifestRow {
  std::string movie_id;
  std::string language;
  std::string release_name;
  std::string path;

  bool operator==(const ManifestRow&) const = default;
};

enum class PairedBy { release_match, random };

std::string_view to_string(PairedBy how);

struct PairManifest {
  std::string movie_id;
  std::string release_name_a;
  std::string release_name_b;
  std::string path_a;
  std::string path_b;
  std::string language_a;
  std::string language_b;
  PairedBy paired_by = PairedBy::random;

  bool operator==(const PairManifest&) const = default;
};

struct CatalogOptions {
  std::uint64_t seed = 0;
  // When unset, the first two languages seen in the manifest are used, in
  // order of appearance; more than two languages then is an error.
  std::optional<std::string> language_a;
  std::optional<std::string> language_b;
};

// Reads the TSV manifest. Relative paths are resolved against
// `base_dir`. Throws ManifestError on a bad header or row.
std::vector<ManifestRow> parse_manifest(std::string_view tsv,
                                        const std::filesystem::path& base_dir = {});
std::vector<ManifestRow> read_manifest(const std::filesystem::path& path);

// Lowercases and collapses runs of '.', '_', '-' and spaces into one '.'.
std::string normalize_release_name(std::string_view name);

// One PairManifest per movie that has both languages, in order of first
// appearance. Versions with equal normalized release names are preferred;
// otherwise one version per language is drawn with a generator seeded from
// (seed, movie_id). Throws ManifestError on duplicate rows.
std::vector<PairManifest> build_catalog(const std::vector<ManifestRow>& rows,
                                        const CatalogOptions& options = {});

// TSV form of the catalog (with a header), recording how each pair was chosen.
std::string catalog_to_tsv(const std::vector<PairManifest>& catalog, std::uint64_t seed);

/// Newlines (and CRs) replaced by single spaces.
std::string flatten_line(std::string_view text);

// Appends one line per pair to each stream.
void write_parallel(const std::vector<AlignedPair>& pairs, std::ostream& out_source,
                    std::ostream& out_target);
// Same, to files (truncating). Throws std::runtime_error on I/O failure.
void write_parallel(const std::vector<AlignedPair>& pairs,
                    const std::filesystem::path& out_source,
                    const std::filesystem::path& out_target);

std::size_t count_tokens(std::string_view text);

struct CorpusStats {
  std::size_t sentence_pairs = 0;
  double avg_len_tokens = 0.0;
  std::size_t token_count = 0;
  std::size_t doc_pairs_in = 0;
  std::size_t doc_pairs_kept = 0;

  bool operator==(const CorpusStats&) const = default;
};

// Source-side statistics; doc_pairs_* are left at zero for the caller.
CorpusStats compute_stats(const std::vector<AlignedPair>& pairs);

// Combines two partial stats, recomputing the mean.
CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b);

std::string stats_to_json(const CorpusStats& stats);

}  // namespace subalign
