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

#include "jingo/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace jingo::log {

namespace {

Level parse_level(const char* value) {
  if (value == nullptr) return Level::kWarn;
  const std::string v(value);
  if (v == "off") return Level::kOff;
  if (v == "error") return Level::kError;
  if (v == "warn") return Level::kWarn;
  if (v == "info") return Level::kInfo;
  if (v == "debug") return Level::kDebug;
  return Level::kWarn;
}

const char* tag(Level level) {
  switch (level) {
    case Level::kError: return "error";
    case Level::kWarn: return "warn";
    case Level::kInfo: return "info";
    case Level::kDebug: return "debug";
    default: return "?";
  }
}

std::mutex g_mutex;

}  // namespace

Level threshold() {
  static const Level level = parse_level(std::getenv("JINGO_LOG"));
  return level;
}

bool enabled(Level level) {
  return static_cast<int>(level) <= static_cast<int>(threshold());
}

void write(Level level, const std::string& message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "jingo[" << tag(level) << "] " << message << "\n";
}

}  // namespace jingo::log
