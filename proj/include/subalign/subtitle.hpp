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

// Subtitle domain types and the SubRip (SRT) reader/writer.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subalign/timecode.hpp"

namespace subalign {

enum class Script { arabic, latin, unknown };

std::string_view to_string(Script script);
std::optional<Script> script_from_string(std::string_view name);

/// One subtitle block: sequence number, display interval and its text lines.
struct SubtitleCue {
  std::uint32_t index = 0;
  TimeInterval interval;
  std::vector<std::string> lines;

  /// Lines joined with `sep`.
  std::string text(std::string_view sep = "\n") const;

  bool operator==(const SubtitleCue&) const = default;
};

/// An immutable, time-ordered list of cues.
///
/// The constructor stable-sorts cues by (start, end) and rejects duplicate
/// cue indices with std::invalid_argument.
class SubtitleDocument {
 public:
  SubtitleDocument() = default;
  explicit SubtitleDocument(std::vector<SubtitleCue> cues, Script language = Script::unknown,
                            std::string source_id = {});

  const std::vector<SubtitleCue>& cues() const noexcept { return cues_; }
  const SubtitleCue& operator[](std::size_t pos) const { return cues_[pos]; }
  std::size_t size() const noexcept { return cues_.size(); }
  bool empty() const noexcept { return cues_.empty(); }
  Script language() const noexcept { return language_; }
  const std::string& source_id() const noexcept { return source_id_; }

  /// Same cues, indices rewritten as 1..n in time order.
  SubtitleDocument renumbered() const;
  SubtitleDocument with_language(Script language) const;

  bool operator==(const SubtitleDocument&) const = default;

 private:
  std::vector<SubtitleCue> cues_;
  Script language_ = Script::unknown;
  std::string source_id_;
};

struct ParseWarning {
  std::size_t line = 0;  // 1-based line of the block start
  std::string message;
};

struct SrtParseOptions {
  std::string source_id;
  // A file whose failed-block fraction exceeds this is rejected as corrupt.
  double max_failed_fraction = 0.20;
};

struct SrtParseResult {
  SubtitleDocument document;
  std::vector<ParseWarning> warnings;
  std::size_t blocks_total = 0;
  std::size_t blocks_failed = 0;
};

// Parses SRT bytes. Accepts an optional UTF-8 BOM and LF/CRLF/CR line ends.
// Malformed blocks are skipped and reported in `warnings`. Throws
// EncodingError for non-UTF-8 input and CorruptDocumentError when too many
// blocks fail. The document's language is set by detect_script.
SrtParseResult parse_srt(std::string_view bytes, const SrtParseOptions& options = {});

// Canonical SRT: LF line endings, indices renumbered from 1, blocks separated
// by one blank line.
std::string serialize_srt(const SubtitleDocument& doc);

Script detect_script(std::string_view text);
Script detect_script(const SubtitleDocument& doc);

struct ValidationIssue {
  enum class Kind { zero_length, overlaps_previous };
  Kind kind;
  std::size_t position;  // cue position in the document

  bool operator==(const ValidationIssue&) const = default;
};

// Flags zero-length cues and cues starting before the previous one ends.
// Nothing is repaired.
std::vector<ValidationIssue> validate_document(const SubtitleDocument& doc);

}  // namespace subalign
