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

#include "subalign/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "subalign/errors.hpp"

namespace subalign {

std::string_view to_string(PairedBy how) {
  return how == PairedBy::release_match ? "release_match" : "random";
}

namespace {

constexpr std::string_view kManifestHeader = "movie_id\tlanguage\trelease_name\tpath";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return fields;
}

// FNV-1a, so the per-movie seed does not depend on the standard library.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::vector<ManifestRow> parse_manifest(std::string_view tsv, const std::filesystem::path& base_dir) {
  if (tsv.size() >= 3 && tsv.substr(0, 3) == "\xEF\xBB\xBF") tsv.remove_prefix(3);
  std::vector<ManifestRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (pos < tsv.size()) {
    auto nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kManifestHeader)
        throw ManifestError("manifest header must be 'movie_id<TAB>language<TAB>release_name<TAB>path'");
      header_seen = true;
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 4)
      throw ManifestError("manifest line " + std::to_string(line_no) + ": expected 4 columns, got " +
                          std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty() || fields[3].empty())
      throw ManifestError("manifest line " + std::to_string(line_no) + ": empty required field");
    std::filesystem::path path(fields[3]);
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    rows.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                    path.string()});
  }
  if (!header_seen) throw ManifestError("manifest is empty");
  return rows;
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

std::string normalize_release_name(std::string_view name) {
  std::string out;
  bool in_separator = false;
  for (char c : name) {
    if (c == '.' || c == '_' || c == '-' || c == ' ') {
      in_separator = true;
      continue;
    }
    if (in_separator && !out.empty()) out.push_back('.');
    in_separator = false;
    out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
  }
  return out;
}

std::vector<PairManifest> build_catalog(const std::vector<ManifestRow>& rows,
                                        const CatalogOptions& options) {
  std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
  std::vector<std::string> languages;
  std::vector<std::string> movie_order;
  std::map<std::string, std::vector<const ManifestRow*>> by_movie;
  for (const auto& row : rows) {
    if (!seen.emplace(row.movie_id, row.language, row.release_name, row.path).second)
      throw ManifestError("duplicate manifest row for movie '" + row.movie_id + "' (" +
                          row.language + ", " + row.release_name + ")");
    if (std::find(languages.begin(), languages.end(), row.language) == languages.end())
      languages.push_back(row.language);
    auto& group = by_movie[row.movie_id];
    if (group.empty()) movie_order.push_back(row.movie_id);
    group.push_back(&row);
  }

  std::string lang_a;
  std::string lang_b;
  if (options.language_a && options.language_b) {
    lang_a = *options.language_a;
    lang_b = *options.language_b;
  } else {
    if (languages.size() > 2)
      throw ManifestError("manifest has more than two languages; choose the pair explicitly");
    if (languages.size() < 2) return {};
    lang_a = options.language_a.value_or(options.language_b == languages[0] ? languages[1] : languages[0]);
    lang_b = options.language_b.value_or(lang_a == languages[0] ? languages[1] : languages[0]);
  }
  if (lang_a == lang_b) throw ManifestError("source and target language must differ");

  std::vector<PairManifest> catalog;
  for (const auto& movie : movie_order) {
    std::vector<const ManifestRow*> side_a;
    std::vector<const ManifestRow*> side_b;
    for (const ManifestRow* row : by_movie[movie]) {
      if (row->language == lang_a) side_a.push_back(row);
      if (row->language == lang_b) side_b.push_back(row);
    }
    if (side_a.empty() || side_b.empty()) continue;

    const ManifestRow* pick_a = nullptr;
    const ManifestRow* pick_b = nullptr;
    PairedBy how = PairedBy::random;
    for (const ManifestRow* a : side_a) {
      const std::string norm = normalize_release_name(a->release_name);
      if (norm.empty()) continue;
      for (const ManifestRow* b : side_b) {
        if (normalize_release_name(b->release_name) == norm) {
          pick_a = a;
          pick_b = b;
          how = PairedBy::release_match;
          break;
        }
      }
      if (pick_a) break;
    }
    if (!pick_a) {
      std::mt19937_64 rng(options.seed ^ fnv1a(movie));
      pick_a = side_a[rng() % side_a.size()];
      pick_b = side_b[rng() % side_b.size()];
    }
    catalog.push_back({movie, pick_a->release_name, pick_b->release_name, pick_a->path,
                       pick_b->path, lang_a, lang_b, how});
  }
  return catalog;
}

std::string catalog_to_tsv(const std::vector<PairManifest>& catalog, std::uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << '\n';
  out << "movie_id\tlanguage_a\trelease_name_a\tpath_a\tlanguage_b\trelease_name_b\tpath_b\tpaired_by\n";
  for (const auto& p : catalog) {
    out << p.movie_id << '\t' << p.language_a << '\t' << p.release_name_a << '\t' << p.path_a
        << '\t' << p.language_b << '\t' << p.release_name_b << '\t' << p.path_b << '\t'
        << to_string(p.paired_by) << '\n';
  }
  return out.str();
}

std::string flatten_line(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '\r') {
      if (k + 1 < text.size() && text[k + 1] == '\n') ++k;
      out.push_back(' ');
    } else if (c == '\n') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void write_parallel(const std::vector<AlignedPair>& pairs, std::ostream& out_source,
                    std::ostream& out_target) {
  for (const auto& p : pairs) {
    out_source << flatten_line(p.source_text) << '\n';
    out_target << flatten_line(p.target_text) << '\n';
  }
}

void write_parallel(const std::vector<AlignedPair>& pairs,
                    const std::filesystem::path& out_source,
                    const std::filesystem::path& out_target) {
  std::ofstream src(out_source, std::ios::binary | std::ios::trunc);
  if (!src) throw std::runtime_error("cannot open " + out_source.string() + " for writing");
  std::ofstream tgt(out_target, std::ios::binary | std::ios::trunc);
  if (!tgt) throw std::runtime_error("cannot open " + out_target.string() + " for writing");
  write_parallel(pairs, src, tgt);
  src.flush();
  tgt.flush();
  if (!src || !tgt) throw std::runtime_error("write failed for parallel output");
}

std::size_t count_tokens(std::string_view text) {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : text) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    if (!space && !in_token) ++count;
    in_token = !space;
  }
  return count;
}

CorpusStats compute_stats(const std::vector<AlignedPair>& pairs) {
  CorpusStats stats;
  stats.sentence_pairs = pairs.size();
  for (const auto& p : pairs) stats.token_count += count_tokens(p.source_text);
  if (stats.sentence_pairs > 0)
    stats.avg_len_tokens =
        static_cast<double>(stats.token_count) / static_cast<double>(stats.sentence_pairs);
  return stats;
}

CorpusStats merge_stats(const CorpusStats& a, const CorpusStats& b) {
  CorpusStats out;
  out.sentence_pairs = a.sentence_pairs + b.sentence_pairs;
  out.token_count = a.token_count + b.token_count;
  out.doc_pairs_in = a.doc_pairs_in + b.doc_pairs_in;
  out.doc_pairs_kept = a.doc_pairs_kept + b.doc_pairs_kept;
  if (out.sentence_pairs > 0)
    out.avg_len_tokens =
        static_cast<double>(out.token_count) / static_cast<double>(out.sentence_pairs);
  return out;
}

std::string stats_to_json(const CorpusStats& stats) {
  nlohmann::ordered_json j;
  j["sentence_pairs"] = stats.sentence_pairs;
  j["avg_len_tokens"] = stats.avg_len_tokens;
  j["token_count"] = stats.token_count;
  j["doc_pairs_in"] = stats.doc_pairs_in;
  j["doc_pairs_kept"] = stats.doc_pairs_kept;
  return j.dump(2) + "\n";
}

}  // namespace subalign
