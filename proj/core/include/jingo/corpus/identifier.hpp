/*
 * Copyright 2026 The Jingo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jingo::corpus {

/// Splits an identifier on camel-case boundaries, underscores and
/// letter/digit transitions, lowercasing the parts. When keep_unsplit is set
/// and the split produced more than one subtoken, the original token
/// (lowercased) is appended as well.
///
///   "GarbageCollectorThread" -> {"garbage","collector","thread",
///                                "garbagecollectorthread"}
///   "node_modules"           -> {"node","modules","node_modules"}
///   "Auditor"                -> {"auditor"}
std::vector<std::string> tokenize_identifier(const std::string& token, bool keep_unsplit = true);

/// Extracts raw identifier-like tokens ([A-Za-z0-9_]+ runs) from a line of
/// text, in order of appearance.
std::vector<std::string> scan_raw_tokens(std::string_view line);

/// True when the token contains an uppercase letter directly preceded by a
/// lowercase one ("GarbageCollectorThread", "readOnly"); single-hump words
/// like "Auditor" do not qualify.
bool is_camel_case(std::string_view token);

}  // namespace jingo::corpus
