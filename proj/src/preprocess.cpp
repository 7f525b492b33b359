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

#include "subalign/preprocess.hpp"

#include <cstdint>

#include "subalign/utf8.hpp"

namespace subalign {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// One pass of tag/brace removal. Returns true if anything was removed.
bool remove_markup_once(std::string_view in, std::string& out) {
  out.clear();
  bool removed = false;
  std::size_t pos = 0;
  while (pos < in.size()) {
    const char c = in[pos];
    if (c == '<') {
      std::size_t name = pos + 1;
      if (name < in.size() && in[name] == '/') ++name;
      if (name < in.size() && is_alpha(in[name])) {
        const auto close = in.find('>', name);
        if (close != std::string_view::npos) {
          pos = close + 1;
          removed = true;
          continue;
        }
      }
    } else if (c == '{') {
      const auto close = in.find('}', pos + 1);
      if (close != std::string_view::npos) {
        pos = close + 1;
        removed = true;
        continue;
      }
    }
    out.push_back(c);
    ++pos;
  }
  return removed;
}

std::string collapse_whitespace(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char c : in) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

constexpr std::string_view kEnDash = "\xE2\x80\x93";

// Length of the dialogue marker (hyphen or en dash plus following spaces)
// at the start of `line`, or 0 if there is none.
std::size_t dialogue_marker_length(std::string_view line) {
  std::size_t pos = 0;
  while (pos < line.size() && is_space(line[pos])) ++pos;
  if (pos < line.size() && line[pos] == '-') {
    ++pos;
  } else if (line.substr(pos, kEnDash.size()) == kEnDash) {
    pos += kEnDash.size();
  } else {
    return 0;
  }
  while (pos < line.size() && is_space(line[pos])) ++pos;
  return pos;
}

}  // namespace

std::string strip_markup_line(std::string_view line, bool* removed) {
  std::string current(line);
  std::string next;
  bool any = false;
  // Removing one tag can expose another ("<<i>b>"), so iterate to a fixpoint.
  while (remove_markup_once(current, next)) {
    any = true;
    current.swap(next);
  }
  if (removed) *removed = any;
  return collapse_whitespace(current);
}

namespace {

SubtitleCue strip_markup_impl(const SubtitleCue& cue, bool& removed) {
  SubtitleCue out{cue.index, cue.interval, {}};
  removed = false;
  for (const auto& line : cue.lines) {
    bool hit = false;
    std::string cleaned = strip_markup_line(line, &hit);
    removed = removed || hit;
    if (!cleaned.empty()) out.lines.push_back(std::move(cleaned));
  }
  return out;
}

}  // namespace

SubtitleCue strip_markup(const SubtitleCue& cue) {
  bool removed;
  return strip_markup_impl(cue, removed);
}

std::vector<SubtitleCue> split_dialogue(const SubtitleCue& cue) {
  std::size_t hyphen_lines = 0;
  for (const auto& line : cue.lines)
    if (dialogue_marker_length(line) > 0) ++hyphen_lines;
  if (hyphen_lines < 2) return {cue};

  std::vector<std::vector<std::string>> fragments;
  for (const auto& line : cue.lines) {
    const std::size_t marker = dialogue_marker_length(line);
    if (marker > 0 || fragments.empty()) fragments.emplace_back();
    std::string body = line.substr(marker);
    if (!body.empty()) fragments.back().push_back(std::move(body));
  }
  std::erase_if(fragments, [](const auto& f) { return f.empty(); });
  if (fragments.size() < 2) return {cue};

  std::vector<std::int64_t> lengths;
  std::int64_t total = 0;
  for (const auto& f : fragments) {
    SubtitleCue tmp{0, {}, f};
    const auto n = static_cast<std::int64_t>(utf8::length(tmp.text(" ")));
    lengths.push_back(n);
    total += n;
  }

  // Boundaries are rounded cumulative shares, so fragments always tile the
  // original interval and the last one absorbs the rounding remainder.
  const std::int64_t start = cue.interval.start().millis();
  const std::int64_t duration = cue.interval.duration_millis();
  std::vector<SubtitleCue> out;
  std::int64_t cumulative = 0;
  std::int64_t prev = start;
  for (std::size_t k = 0; k < fragments.size(); ++k) {
    cumulative += lengths[k];
    const std::int64_t boundary =
        k + 1 == fragments.size() ? cue.interval.end().millis()
                                  : start + (2 * duration * cumulative + total) / (2 * total);
    out.push_back({cue.index, TimeInterval::from_millis(prev, boundary), std::move(fragments[k])});
    prev = boundary;
  }
  return out;
}

CleanedDocument clean_document(const SubtitleDocument& doc) {
  CleaningReport report;
  report.cues_in = doc.size();
  std::vector<SubtitleCue> cues;
  cues.reserve(doc.size());
  for (const auto& cue : doc.cues()) {
    bool removed = false;
    SubtitleCue stripped = strip_markup_impl(cue, removed);
    if (removed) ++report.markup_stripped;
    if (stripped.lines.empty()) {
      ++report.cues_dropped_empty;
      continue;
    }
    auto parts = split_dialogue(stripped);
    if (parts.size() > 1) ++report.dialogues_split;
    for (auto& part : parts) cues.push_back(std::move(part));
  }
  // Temporary unique indices; the final numbering follows time order.
  for (std::size_t k = 0; k < cues.size(); ++k) cues[k].index = static_cast<std::uint32_t>(k + 1);
  report.cues_out = cues.size();
  SubtitleDocument cleaned(std::move(cues), doc.language(), doc.source_id());
  return {cleaned.renumbered(), report};
}

}  // namespace subalign
