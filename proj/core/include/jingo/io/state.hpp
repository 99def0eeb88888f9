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

#include <cstdint>
#include <optional>
#include <string>

#include "jingo/topicmodel/online_lda.hpp"
#include "jingo/translation/translation.hpp"

namespace jingo::io {

/// Last processed stream position; lets ingestion and replay resume.
struct Cursor {
  std::int64_t last_timestamp = 0;
  std::string last_changeset_sha;
  std::string last_bug_id;
};

/// Everything needed to continue or query a trained instance.
struct ModelState {
  topicmodel::TopicModel changeset_model;
  topicmodel::TopicModel bug_report_model;
  translation::PairStore pairs;
  std::optional<translation::TranslationMatrix> translation;
  Cursor cursor;
};

/// Binary snapshot container: magic, format version, checksum, then one
/// section per ModelState field. Numeric payloads are little-endian 64-bit
/// floats; loading then saving reproduces the file byte for byte.
void save_state(const std::string& path, const ModelState& state);

/// Throws VersionMismatch for a readable container of another version and
/// CorruptSnapshot for truncation or checksum failure.
ModelState load_state(const std::string& path);

}  // namespace jingo::io
