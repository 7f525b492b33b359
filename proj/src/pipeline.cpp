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

#include "subalign/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

namespace subalign {

using nlohmann::ordered_json;

SrtParseResult load_srt_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed for " + path.string());
  SrtParseOptions opts;
  opts.source_id = path.string();
  return parse_srt(buf.str(), opts);
}

PairResult process_documents(const SubtitleDocument& doc_a, const SubtitleDocument& doc_b,
                             const AlignmentConfig& cfg) {
  PairResult result;
  auto clean_a = clean_document(doc_a);
  auto clean_b = clean_document(doc_b);
  result.cleaning_a = clean_a.report;
  result.cleaning_b = clean_b.report;
  result.cues_a = clean_a.document.size();
  result.cues_b = clean_b.document.size();
  result.pairs = align(clean_a.document, clean_b.document, cfg);
  result.match_ratio = result.cues_a + result.cues_b == 0
                           ? 0.0
                           : document_match_ratio(result.pairs, clean_a.document, clean_b.document);
  result.decision = apply_strict_filter(result.match_ratio, cfg);
  return result;
}

ordered_json config_to_json(const AlignmentConfig& cfg) {
  ordered_json j;
  j["mode"] = std::string(to_string(cfg.mode));
  j["threshold"] = cfg.threshold;
  j["max_expansion"] = cfg.max_expansion;
  j["strict_min_doc_ratio"] =
      cfg.strict_min_doc_ratio ? ordered_json(*cfg.strict_min_doc_ratio) : ordered_json(nullptr);
  return j;
}

ordered_json cleaning_to_json(const CleaningReport& r) {
  ordered_json j;
  j["cues_in"] = r.cues_in;
  j["cues_out"] = r.cues_out;
  j["markup_stripped"] = r.markup_stripped;
  j["dialogues_split"] = r.dialogues_split;
  j["cues_dropped_empty"] = r.cues_dropped_empty;
  return j;
}

ordered_json warnings_to_json(const std::vector<ParseWarning>& warnings) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : warnings) arr.push_back({{"line", w.line}, {"message", w.message}});
  return arr;
}

ordered_json pair_report(const PairResult& result, const AlignmentConfig& cfg,
                         const std::vector<ParseWarning>& warnings_a,
                         const std::vector<ParseWarning>& warnings_b) {
  ordered_json j;
  j["config"] = config_to_json(cfg);
  j["status"] = result.decision == FilterDecision::keep ? "kept" : "dropped";
  j["pairs"] = result.pairs.size();
  j["document_match_ratio"] = result.match_ratio;
  j["source_cues"] = result.cues_a;
  j["target_cues"] = result.cues_b;
  j["cleaning"] = {{"source", cleaning_to_json(result.cleaning_a)},
                   {"target", cleaning_to_json(result.cleaning_b)}};
  j["parse_warnings"] = {{"source", warnings_to_json(warnings_a)},
                         {"target", warnings_to_json(warnings_b)}};
  ordered_json alignments = ordered_json::array();
  for (const auto& p : result.pairs) {
    alignments.push_back(
        {{"source", p.source_indices}, {"target", p.target_indices}, {"ratio", p.ratio}});
  }
  j["alignments"] = std::move(alignments);
  return j;
}

void for_each_index(std::size_t count, std::size_t jobs,
                    const std::function<void(std::size_t)>& fn) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) fn(k);
    });
  }
}

namespace {

struct PairOutcome {
  bool failed = false;
  std::string error;
  PairResult result;
  std::vector<ParseWarning> warnings_a;
  std::vector<ParseWarning> warnings_b;
  std::string source_lines;
  std::string target_lines;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

BatchResult run_batch(const BatchOptions& options) {
  options.alignment.validate();
  CatalogOptions catalog_opts{options.seed, options.language_a, options.language_b};
  const auto catalog = build_catalog(read_manifest(options.manifest), catalog_opts);
  spdlog::info("catalog: {} document pairs", catalog.size());

  std::vector<PairOutcome> outcomes(catalog.size());
  for_each_index(catalog.size(), options.jobs, [&](std::size_t k) {
    const auto& entry = catalog[k];
    auto& out = outcomes[k];
    try {
      auto a = load_srt_file(entry.path_a);
      auto b = load_srt_file(entry.path_b);
      out.warnings_a = std::move(a.warnings);
      out.warnings_b = std::move(b.warnings);
      out.result = process_documents(a.document, b.document, options.alignment);
      if (out.result.decision == FilterDecision::keep) {
        std::ostringstream src, tgt;
        write_parallel(out.result.pairs, src, tgt);
        out.source_lines = src.str();
        out.target_lines = tgt.str();
      }
    } catch (const std::exception& e) {
      out.failed = true;
      out.error = e.what();
      spdlog::warn("skipping {}: {}", entry.movie_id, e.what());
    }
  });

  BatchResult batch;
  std::filesystem::create_directories(options.out_dir);
  const std::string lang_a = catalog.empty() ? options.language_a.value_or("src") : catalog[0].language_a;
  const std::string lang_b = catalog.empty() ? options.language_b.value_or("tgt") : catalog[0].language_b;
  batch.source_corpus = options.out_dir / ("corpus." + lang_a);
  batch.target_corpus = options.out_dir / ("corpus." + lang_b);

  std::string source_text;
  std::string target_text;
  ordered_json entries = ordered_json::array();
  CorpusStats stats;
  stats.doc_pairs_in = catalog.size();
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const auto& entry = catalog[k];
    const auto& out = outcomes[k];
    ordered_json j;
    j["movie_id"] = entry.movie_id;
    j["paired_by"] = std::string(to_string(entry.paired_by));
    j["path_a"] = entry.path_a;
    j["path_b"] = entry.path_b;
    if (out.failed) {
      ++batch.failed;
      j["status"] = "failed";
      j["error"] = out.error;
    } else {
      auto report = pair_report(out.result, options.alignment, out.warnings_a, out.warnings_b);
      report.erase("config");
      j.update(report);
      if (out.result.decision == FilterDecision::keep) {
        ++stats.doc_pairs_kept;
        source_text += out.source_lines;
        target_text += out.target_lines;
        stats = merge_stats(stats, compute_stats(out.result.pairs));
      } else {
        ++batch.dropped;
      }
    }
    entries.push_back(std::move(j));
  }

  write_file(batch.source_corpus, source_text);
  write_file(batch.target_corpus, target_text);
  write_file(options.out_dir / "catalog.tsv", catalog_to_tsv(catalog, options.seed));
  ordered_json report;
  report["config"] = config_to_json(options.alignment);
  report["seed"] = options.seed;
  report["document_pairs"] = std::move(entries);
  write_file(options.out_dir / "report.json", report.dump(2) + "\n");
  write_file(options.out_dir / "stats.json", stats_to_json(stats));
  batch.stats = stats;
  spdlog::info("batch: {} kept, {} dropped, {} failed", stats.doc_pairs_kept, batch.dropped,
               batch.failed);
  return batch;
}

}  // namespace subalign
