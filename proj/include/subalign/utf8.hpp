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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subalign::utf8 {

// Byte offset of the first invalid sequence, or nullopt if `bytes` is
// well-formed UTF-8 (no overlongs, no surrogates, max U+10FFFF).
std::optional<std::size_t> find_invalid(std::string_view bytes);

// Decodes well-formed UTF-8. Invalid bytes decode to U+FFFD.
std::vector<char32_t> decode(std::string_view text);

// Number of Unicode scalar values.
std::size_t length(std::string_view text);

void append(std::string& out, char32_t cp);

}  // namespace subalign::utf8
