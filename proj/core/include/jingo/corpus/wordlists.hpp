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

#include <set>
#include <string>

namespace jingo::corpus {

/// Built-in English stop words (bug-report preprocessing).
const std::set<std::string>& default_stopwords();

/// Built-in programming-language reserved words (changeset preprocessing).
const std::set<std::string>& default_code_keywords();

/// Loads a word list file: one token per line, UTF-8, `#` starts a comment,
/// blank lines ignored. Tokens are lowercased.
std::set<std::string> load_wordlist(const std::string& path);

}  // namespace jingo::corpus
