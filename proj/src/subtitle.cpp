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

#include "subalign/subtitle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "subalign/errors.hpp"
#include "subalign/utf8.hpp"

namespace subalign {

std::string_view to_string(Script script) {
  switch (script) {
    case Script::arabic:
      return "arabic";
    case Script::latin:
      return "latin";
    case Script::unknown:
      break;
  }
  return "unknown";
}

std::optional<Script> script_from_string(std::string_view name) {
  if (name == "arabic") return Script::arabic;
  if (name == "latin") return Script::latin;
  if (name == "unknown") return Script::unknown;
  return std::nullopt;
}

std::string SubtitleCue::text(std::string_view sep) const {
  std::string out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k) out += sep;
    out += lines[k];
  }
  return out;
}

SubtitleDocument::SubtitleDocument(std::vector<SubtitleCue> cues, Script language,
                                   std::string source_id)
    : cues_(std::move(cues)), language_(language), source_id_(std::move(source_id)) {
  std::stable_sort(cues_.begin(), cues_.end(), [](const SubtitleCue& a, const SubtitleCue& b) {
    return a.interval < b.interval;
  });
  std::unordered_set<std::uint32_t> seen;
  for (const auto& cue : cues_) {
    if (!seen.insert(cue.index).second)
      throw std::invalid_argument("duplicate cue index " + std::to_string(cue.index));
  }
}

SubtitleDocument SubtitleDocument::renumbered() const {
  SubtitleDocument out = *this;
  for (std::size_t k = 0; k < out.cues_.size(); ++k)
    out.cues_[k].index = static_cast<std::uint32_t>(k + 1);
  return out;
}

SubtitleDocument SubtitleDocument::with_language(Script language) const {
  SubtitleDocument out = *this;
  out.language_ = language;
  return out;
}

namespace {

constexpr std::string_view kWhitespace = " \t\f\v";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(kWhitespace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kWhitespace);
  return s.substr(b, e - b + 1);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  std::size_t number = 1;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of("\r\n", pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({number++, text.substr(pos, end - pos)});
    if (end < text.size() && text[end] == '\r' && end + 1 < text.size() && text[end + 1] == '\n')
      ++end;
    pos = end + 1;
  }
  return lines;
}

bool looks_like_timing(std::string_view line) { return line.find("-->") != std::string_view::npos; }

// Groups non-blank lines into blocks. A digits line directly followed by a
// timing line also opens a new block, which recovers files that omit the
// blank separator.
std::vector<std::vector<Line>> split_blocks(const std::vector<Line>& lines) {
  std::vector<std::vector<Line>> blocks;
  std::vector<Line> current;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto stripped = trim(lines[k].text);
    if (stripped.empty()) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    const bool opens_block = current.size() >= 3 && all_digits(stripped) &&
                             k + 1 < lines.size() && looks_like_timing(lines[k + 1].text);
    if (opens_block) {
      blocks.push_back(std::move(current));
      current.clear();
    }
    current.push_back({lines[k].number, stripped});
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

struct ParsedBlock {
  std::optional<std::uint32_t> index;
  SubtitleCue cue;
};

// Returns nullopt and fills `why` on failure.
std::optional<ParsedBlock> parse_block(const std::vector<Line>& block, std::string& why) {
  std::size_t k = 0;
  ParsedBlock out;
  if (all_digits(block[0].text)) {
    if (block[0].text.size() > 9) {
      why = "cue index out of range";
      return std::nullopt;
    }
    out.index = static_cast<std::uint32_t>(std::stoul(std::string(block[0].text)));
    k = 1;
  } else if (!looks_like_timing(block[0].text)) {
    why = "expected cue index, got '" + std::string(block[0].text) + "'";
    return std::nullopt;
  }
  if (k >= block.size() || !looks_like_timing(block[k].text)) {
    why = "missing timing line";
    return std::nullopt;
  }
  const std::string_view timing = block[k].text;
  const auto arrow = timing.find("-->");
  const auto left = trim(timing.substr(0, arrow));
  auto right = trim(timing.substr(arrow + 3));
  // Trailing display coordinates ("X1:... Y2:...") are ignored.
  right = right.substr(0, right.find_first_of(kWhitespace));
  try {
    const Timestamp start = parse_timestamp(left);
    const Timestamp end = parse_timestamp(right);
    if (end < start) {
      why = "cue ends before it starts";
      return std::nullopt;
    }
    out.cue.interval = TimeInterval(start, end);
  } catch (const ParseError& e) {
    why = e.what();
    return std::nullopt;
  }
  for (++k; k < block.size(); ++k) out.cue.lines.emplace_back(block[k].text);
  if (out.cue.lines.empty()) {
    why = "cue has no text";
    return std::nullopt;
  }
  return out;
}

}  // namespace

SrtParseResult parse_srt(std::string_view bytes, const SrtParseOptions& options) {
  if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  if (const auto bad = utf8::find_invalid(bytes)) {
    throw EncodingError("input is not valid UTF-8 (byte " + std::to_string(*bad) + ")", *bad);
  }

  SrtParseResult result;
  const auto lines = split_lines(bytes);
  const auto blocks = split_blocks(lines);
  result.blocks_total = blocks.size();

  std::vector<ParsedBlock> parsed;
  for (const auto& block : blocks) {
    std::string why;
    if (auto p = parse_block(block, why)) {
      parsed.push_back(std::move(*p));
    } else {
      ++result.blocks_failed;
      result.warnings.push_back({block.front().number, "skipped block: " + why});
    }
  }

  if (result.blocks_total > 0 &&
      static_cast<double>(result.blocks_failed) >
          options.max_failed_fraction * static_cast<double>(result.blocks_total)) {
    throw CorruptDocumentError(std::to_string(result.blocks_failed) + " of " +
                               std::to_string(result.blocks_total) +
                               " SRT blocks failed to parse");
  }

  std::unordered_set<std::uint32_t> seen;
  bool indices_ok = true;
  for (const auto& p : parsed) {
    if (!p.index || *p.index == 0 || !seen.insert(*p.index).second) {
      indices_ok = false;
      break;
    }
  }
  std::vector<SubtitleCue> cues;
  cues.reserve(parsed.size());
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    cues.push_back(std::move(parsed[k].cue));
    cues.back().index = indices_ok ? *parsed[k].index : static_cast<std::uint32_t>(k + 1);
  }

  SubtitleDocument doc(std::move(cues), Script::unknown, options.source_id);
  if (!indices_ok) {
    result.warnings.push_back({0, "missing or duplicate cue indices; renumbered in time order"});
    doc = doc.renumbered();
  }
  result.document = doc.with_language(detect_script(doc));
  return result;
}

std::string serialize_srt(const SubtitleDocument& doc) {
  std::string out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& cue = doc[k];
    if (k) out += '\n';
    out += std::to_string(k + 1);
    out += '\n';
    out += format_timestamp(cue.interval.start());
    out += " --> ";
    out += format_timestamp(cue.interval.end());
    out += '\n';
    for (const auto& line : cue.lines) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_arabic_letter(char32_t cp) {
  return in(cp, 0x0620, 0x064A) || in(cp, 0x066E, 0x066F) || in(cp, 0x0671, 0x06D3) ||
         cp == 0x06D5 || in(cp, 0x06EE, 0x06EF) || in(cp, 0x06FA, 0x06FC) || cp == 0x06FF ||
         in(cp, 0x0750, 0x077F) || in(cp, 0x08A0, 0x08C9) || in(cp, 0xFB50, 0xFD3D) ||
         in(cp, 0xFD50, 0xFDFB) || in(cp, 0xFE70, 0xFEFC);
}

bool is_latin_letter(char32_t cp) {
  return in(cp, 'A', 'Z') || in(cp, 'a', 'z') || cp == 0x00AA || cp == 0x00BA ||
         in(cp, 0x00C0, 0x00D6) || in(cp, 0x00D8, 0x00F6) || in(cp, 0x00F8, 0x024F) ||
         in(cp, 0x1E00, 0x1EFF) || in(cp, 0x2C60, 0x2C7F) || in(cp, 0xA720, 0xA7FF) ||
         in(cp, 0xFF21, 0xFF3A) || in(cp, 0xFF41, 0xFF5A);
}

// Coarse coverage of other alphabetic scripts, enough to keep them out of
// the majority vote's denominator.
bool is_other_letter(char32_t cp) {
  return in(cp, 0x0370, 0x03FF) || in(cp, 0x0400, 0x052F) || in(cp, 0x0531, 0x0587) ||
         in(cp, 0x05D0, 0x05F2) || in(cp, 0x0900, 0x0DFF) || in(cp, 0x0E01, 0x0E7F) ||
         in(cp, 0x10A0, 0x10FF) || in(cp, 0x1100, 0x11FF) || in(cp, 0x3040, 0x30FF) ||
         in(cp, 0x3400, 0x4DBF) || in(cp, 0x4E00, 0x9FFF) || in(cp, 0xAC00, 0xD7AF);
}

struct LetterCounts {
  std::size_t arabic = 0;
  std::size_t latin = 0;
  std::size_t total = 0;

  void add(std::string_view text) {
    for (char32_t cp : utf8::decode(text)) {
      if (is_arabic_letter(cp)) {
        ++arabic;
        ++total;
      } else if (is_latin_letter(cp)) {
        ++latin;
        ++total;
      } else if (is_other_letter(cp)) {
        ++total;
      }
    }
  }

  Script verdict() const {
    if (total == 0) return Script::unknown;
    if (2 * arabic >= total) return Script::arabic;
    if (2 * latin >= total) return Script::latin;
    return Script::unknown;
  }
};

}  // namespace

Script detect_script(std::string_view text) {
  LetterCounts counts;
  counts.add(text);
  return counts.verdict();
}

Script detect_script(const SubtitleDocument& doc) {
  LetterCounts counts;
  for (const auto& cue : doc.cues())
    for (const auto& line : cue.lines) counts.add(line);
  return counts.verdict();
}

std::vector<ValidationIssue> validate_document(const SubtitleDocument& doc) {
  std::vector<ValidationIssue> issues;
  std::optional<Timestamp> latest_end;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& iv = doc[k].interval;
    if (iv.empty()) issues.push_back({ValidationIssue::Kind::zero_length, k});
    if (latest_end && iv.start() < *latest_end)
      issues.push_back({ValidationIssue::Kind::overlaps_previous, k});
    if (!latest_end || *latest_end < iv.end()) latest_end = iv.end();
  }
  return issues;
}

}  // namespace subalign
