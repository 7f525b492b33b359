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

// subalign: build sentence-aligned parallel corpora from subtitle pairs.
//
// Exit codes: 0 success, 1 error (unreadable/corrupt input, bad flags, or
// every batch pair failed), 2 document pair dropped by the strict filter.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "subalign/aligner.hpp"
#include "subalign/corpus.hpp"
#include "subalign/errors.hpp"
#include "subalign/pipeline.hpp"
#include "subalign/preprocess.hpp"
#include "subalign/subtitle.hpp"
#include "subalign/synthetic.hpp"

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDropped = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("subalign");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SUBALIGN_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

struct AlignFlags {
  std::string mode = "1-m";
  double threshold = 0.65;
  std::size_t max_expansion = 5;
  double strict_min_ratio = 0.0;
  std::string preset = "default";

  CLI::Option* threshold_opt = nullptr;
  CLI::Option* strict_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "Alignment mode")
        ->check(CLI::IsMember({"1-1", "1-m", "1-M"}))
        ->capture_default_str();
    threshold_opt = app->add_option("--threshold", threshold, "Minimum overlap ratio")
                        ->check(CLI::Range(0.0, 1.0))
                        ->capture_default_str();
    app->add_option("--max-expansion", max_expansion, "Maximum cues on the expanded side")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    strict_opt = app->add_option("--strict-min-ratio", strict_min_ratio,
                                 "Drop document pairs whose match ratio is below this")
                     ->check(CLI::Range(0.0, 1.0));
    app->add_option("--preset", preset, "Configuration preset; 'strict' = threshold 0.85, "
                                        "min document ratio 0.20")
        ->check(CLI::IsMember({"default", "strict"}))
        ->capture_default_str();
  }

  // Preset first, explicit flags override it.
  subalign::AlignmentConfig resolve() const {
    subalign::AlignmentConfig cfg =
        preset == "strict" ? subalign::AlignmentConfig::strict() : subalign::AlignmentConfig{};
    cfg.mode = *subalign::mode_from_string(mode);
    cfg.max_expansion = max_expansion;
    if (threshold_opt->count() > 0) cfg.threshold = threshold;
    if (strict_opt->count() > 0) cfg.strict_min_doc_ratio = strict_min_ratio;
    cfg.validate();
    return cfg;
  }
};

int cmd_parse(const std::string& input, const std::string& canonical) {
  auto parsed = subalign::load_srt_file(input);
  const auto& doc = parsed.document;
  ordered_json j;
  j["source"] = input;
  j["cues"] = doc.size();
  j["language"] = std::string(subalign::to_string(doc.language()));
  j["blocks_total"] = parsed.blocks_total;
  j["blocks_failed"] = parsed.blocks_failed;
  j["warnings"] = subalign::warnings_to_json(parsed.warnings);
  ordered_json issues = ordered_json::array();
  for (const auto& issue : subalign::validate_document(doc)) {
    issues.push_back(
        {{"cue", issue.position},
         {"kind", issue.kind == subalign::ValidationIssue::Kind::zero_length ? "zero_length"
                                                                             : "overlaps_previous"}});
  }
  j["issues"] = std::move(issues);
  if (!canonical.empty()) write_text(canonical, subalign::serialize_srt(doc));
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_clean(const std::string& input, const std::string& output) {
  auto parsed = subalign::load_srt_file(input);
  auto cleaned = subalign::clean_document(parsed.document);
  if (!output.empty()) write_text(output, subalign::serialize_srt(cleaned.document));
  std::cout << subalign::cleaning_to_json(cleaned.report).dump(2) << '\n';
  return kExitOk;
}

std::string language_tag(const std::optional<std::string>& flag, const subalign::SubtitleDocument& doc) {
  return flag ? *flag : std::string(subalign::to_string(doc.language()));
}

int cmd_align(const std::string& source, const std::string& target, const fs::path& out_dir,
              const AlignFlags& flags, const std::optional<std::string>& source_lang,
              const std::optional<std::string>& target_lang) {
  const auto cfg = flags.resolve();
  auto a = subalign::load_srt_file(source);
  auto b = subalign::load_srt_file(target);
  const auto result = subalign::process_documents(a.document, b.document, cfg);

  std::string tag_a = language_tag(source_lang, a.document);
  std::string tag_b = language_tag(target_lang, b.document);
  if (tag_a == tag_b) {
    spdlog::warn("both documents tagged '{}'; naming outputs src/tgt", tag_a);
    tag_a = "src";
    tag_b = "tgt";
  }
  fs::create_directories(out_dir);
  const bool keep = result.decision == subalign::FilterDecision::keep;
  // A dropped pair still gets (empty) corpus files so downstream globbing is stable.
  static const std::vector<subalign::AlignedPair> kNone;
  subalign::write_parallel(keep ? result.pairs : kNone, out_dir / ("corpus." + tag_a),
                           out_dir / ("corpus." + tag_b));

  auto report = subalign::pair_report(result, cfg, a.warnings, b.warnings);
  ordered_json j;
  j["source"] = source;
  j["target"] = target;
  j.update(report);
  write_text(out_dir / "report.json", j.dump(2) + "\n");
  std::cout << j.dump(2) << '\n';
  if (!keep) {
    spdlog::warn("document pair dropped: match ratio {:.4f} below {:.4f}", result.match_ratio,
                 *cfg.strict_min_doc_ratio);
    return kExitDropped;
  }
  return kExitOk;
}

int cmd_batch(const std::string& manifest, const fs::path& out_dir, const AlignFlags& flags,
              std::uint64_t seed, std::size_t jobs, const std::optional<std::string>& source_lang,
              const std::optional<std::string>& target_lang) {
  subalign::BatchOptions opts;
  opts.manifest = manifest;
  opts.out_dir = out_dir;
  opts.alignment = flags.resolve();
  opts.seed = seed;
  opts.jobs = jobs;
  opts.language_a = source_lang;
  opts.language_b = target_lang;
  const auto result = subalign::run_batch(opts);
  std::cout << subalign::stats_to_json(result.stats);
  if (result.stats.doc_pairs_in == 0) {
    spdlog::error("manifest yielded no document pairs");
    return kExitError;
  }
  if (result.failed == result.stats.doc_pairs_in) {
    spdlog::error("all {} document pairs failed", result.failed);
    return kExitError;
  }
  return kExitOk;
}

int cmd_stats(const std::vector<std::string>& inputs) {
  subalign::CorpusStats total;
  for (const auto& path : inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<subalign::AlignedPair> pairs;
    std::string line;
    while (std::getline(in, line)) {
      subalign::AlignedPair p;
      p.source_text = std::move(line);
      pairs.push_back(std::move(p));
    }
    total = subalign::merge_stats(total, subalign::compute_stats(pairs));
  }
  std::cout << subalign::stats_to_json(total);
  return kExitOk;
}

int cmd_synth(const subalign::SynthOptions& options, const fs::path& out_dir) {
  const auto pair = subalign::generate_synthetic_pair(options);
  fs::create_directories(out_dir);
  write_text(out_dir / "a.srt", subalign::serialize_srt(pair.doc_a));
  write_text(out_dir / "b.srt", subalign::serialize_srt(pair.doc_b));
  ordered_json links = ordered_json::array();
  for (const auto& link : pair.gold) links.push_back({{"source", link.source}, {"target", link.target}});
  ordered_json j;
  j["seed"] = options.seed;
  j["cues_a"] = pair.doc_a.size();
  j["cues_b"] = pair.doc_b.size();
  j["gold"] = std::move(links);
  write_text(out_dir / "gold.json", j.dump(2) + "\n");
  std::cout << "wrote " << (out_dir / "a.srt").string() << ", " << (out_dir / "b.srt").string()
            << ", " << (out_dir / "gold.json").string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Align subtitle files into a sentence-aligned parallel corpus"};
  app.require_subcommand(1);

  std::string parse_input, parse_canonical;
  auto* parse = app.add_subcommand("parse", "Parse an SRT file and report warnings");
  parse->add_option("file", parse_input)->required()->check(CLI::ExistingFile);
  parse->add_option("--canonical", parse_canonical, "Write the canonical SRT form here");

  std::string clean_input, clean_output;
  auto* clean = app.add_subcommand("clean", "Strip markup and split dialogue cues");
  clean->add_option("file", clean_input)->required()->check(CLI::ExistingFile);
  clean->add_option("-o,--output", clean_output, "Cleaned SRT output");

  std::string align_source, align_target, align_out = ".";
  std::optional<std::string> source_lang, target_lang;
  AlignFlags align_flags;
  auto* align = app.add_subcommand("align", "Align one subtitle pair");
  align->add_option("source", align_source)->required()->check(CLI::ExistingFile);
  align->add_option("target", align_target)->required()->check(CLI::ExistingFile);
  align->add_option("--out-dir", align_out, "Output directory")->capture_default_str();
  align->add_option("--source-lang", source_lang, "Tag for the source corpus file");
  align->add_option("--target-lang", target_lang, "Tag for the target corpus file");
  align_flags.attach(align);

  std::string batch_manifest, batch_out = "corpus";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<std::string> batch_source_lang, batch_target_lang;
  AlignFlags batch_flags;
  auto* batch = app.add_subcommand("batch", "Align every pair listed in a manifest");
  batch->add_option("manifest", batch_manifest, "TSV: movie_id, language, release_name, path")
      ->required()
      ->check(CLI::ExistingFile);
  batch->add_option("--out-dir", batch_out, "Output directory")->capture_default_str();
  batch->add_option("--seed", seed, "Seed for random version selection")->capture_default_str();
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  batch->add_option("--source-lang", batch_source_lang, "Manifest language used as source");
  batch->add_option("--target-lang", batch_target_lang, "Manifest language used as target");
  batch_flags.attach(batch);

  std::vector<std::string> stats_inputs;
  auto* stats = app.add_subcommand("stats", "Corpus statistics of source-side text files");
  stats->add_option("files", stats_inputs)->required()->check(CLI::ExistingFile);

  subalign::SynthOptions synth_opts;
  synth_opts.cue_count = 100;
  std::string synth_out = "synth";
  auto* synth = app.add_subcommand("synth", "Generate a synthetic subtitle pair with gold alignment");
  synth->add_option("--seed", synth_opts.seed)->capture_default_str();
  synth->add_option("--cues", synth_opts.cue_count)->capture_default_str();
  synth->add_option("--jitter", synth_opts.jitter_ms, "Boundary jitter in ms")->capture_default_str();
  synth->add_option("--split", synth_opts.split_probability)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  synth->add_option("--drop", synth_opts.drop_probability)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  synth->add_option("--out-dir", synth_out)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*parse) return cmd_parse(parse_input, parse_canonical);
    if (*clean) return cmd_clean(clean_input, clean_output);
    if (*align)
      return cmd_align(align_source, align_target, align_out, align_flags, source_lang, target_lang);
    if (*batch)
      return cmd_batch(batch_manifest, batch_out, batch_flags, seed, jobs, batch_source_lang,
                       batch_target_lang);
    if (*stats) return cmd_stats(stats_inputs);
    if (*synth) return cmd_synth(synth_opts, synth_out);
  } catch (const std::exception& e) {
    std::cerr << "subalign: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
