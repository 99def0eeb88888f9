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

namespace jingo::corpus {

/// Cuts a class source file into method-like units with a brace-depth
/// heuristic: a unit starts at a line containing a (...) parameter list
/// followed by `{` at class-member depth and extends to the matching closing
/// brace. Nested blocks (including anonymous classes) are absorbed into the
/// enclosing unit. When no unit is found — interfaces, unbalanced braces,
/// non-class files — the whole file is returned as a single unit.
std::vector<std::string> segment_methods(const std::string& class_source);

}  // namespace jingo::corpus
