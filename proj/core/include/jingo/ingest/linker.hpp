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
#include <vector>

#include "jingo/corpus/types.hpp"
#include "jingo/evaluation/replay.hpp"

namespace jingo::ingest {

struct LinkConventions {
  std::vector<std::string> keywords = {"fixes", "closes", "resolves"};
  std::string project_name;  // empty disables the PROJECT-123 pattern
  std::string source_extension = ".java";
};

/// Links bugs to fixing commits by matching commit messages against
/// keyword-#number and project-name-number patterns, case-insensitive with
/// word boundaries around the issue number. When several commits match one
/// bug the latest wins. fixed_files are the linked commit's changed paths
/// filtered to source files; links without any source file are dropped with
/// a warning. Unlinked bugs are reported, not errors.
std::vector<evaluation::FixLink> link_bugs(const std::vector<corpus::BugReport>& bugs,
                                           const std::vector<corpus::Changeset>& commits,
                                           const LinkConventions& conventions);

}  // namespace jingo::ingest
