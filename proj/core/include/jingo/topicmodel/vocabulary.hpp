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

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace jingo::topicmodel {

/// Bidirectional term <-> id mapping with ids dense in [0, size).
class Vocabulary {
 public:
  std::size_t size() const { return terms_.size(); }

  std::optional<std::size_t> id_of(const std::string& term) const {
    const auto it = ids_.find(term);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& term_of(std::size_t id) const { return terms_.at(id); }

  /// Terms in id order; the canonical serialization order.
  const std::vector<std::string>& terms() const { return terms_; }

  /// Returns the existing id or assigns the next dense one.
  std::size_t add(const std::string& term) {
    const auto it = ids_.find(term);
    if (it != ids_.end()) return it->second;
    const std::size_t id = terms_.size();
    ids_.emplace(term, id);
    terms_.push_back(term);
    return id;
  }

  bool contains(const std::string& term) const { return ids_.count(term) != 0; }

 private:
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::string> terms_;
};

}  // namespace jingo::topicmodel
