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
#include <string>
#include <string_view>
#include <vector>

#include "subalign/subtitle.hpp"

namespace subalign {

struct CleaningReport {
  std::size_t cues_in = 0;
  std::size_t cues_out = 0;
  std::size_t markup_stripped = 0;   // cues that had tags or {...} codes removed
  std::size_t dialogues_split = 0;   // cues split into more than one fragment
  std::size_t cues_dropped_empty = 0;

  bool operator==(const CleaningReport&) const = default;
};

struct CleanedDocument {
  SubtitleDocument document;
  CleaningReport report;
};

/// Removes `<tag ...>`/`</tag>` runs and `{...}` control codes from one line,
/// then collapses whitespace and trims. Sets `*removed` when any markup was
/// found.
std::string strip_markup_line(std::string_view line, bool* removed = nullptr);

/// Applies strip_markup_line to every line and drops lines left empty.
SubtitleCue strip_markup(const SubtitleCue& cue);

/// Splits a multi-speaker cue (two or more lines starting with `-` or an en
/// dash) into one cue per speaker. Time is shared out in proportion to each
/// fragment's character count; the fragments tile the original interval.
/// Lines without a hyphen are kept with the speaker line above them.
/// Returns the cue unchanged when it is not a dialogue.
std::vector<SubtitleCue> split_dialogue(const SubtitleCue& cue);

/// strip_markup + split_dialogue over the whole document, dropping cues left
/// without text. Output cues are sorted and renumbered from 1.
CleanedDocument clean_document(const SubtitleDocument& doc);

}  // namespace subalign
