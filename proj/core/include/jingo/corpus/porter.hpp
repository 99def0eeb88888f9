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

namespace jingo::corpus {

/// Porter's suffix-stripping stemmer, matching the author's reference
/// implementation of the original algorithm (including its two documented
/// departures: words of length <= 2 are left unchanged, and step 2 uses
/// bli->ble plus logi->log). Input must already be lowercase.
std::string porter_stem(const std::string& word);

}  // namespace jingo::corpus
