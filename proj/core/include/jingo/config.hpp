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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jingo/evaluation/replay.hpp"

namespace jingo {

/// Per-project settings: input locations, linking conventions and every
/// model hyperparameter. Parsed from a `key = value` text file; unknown
/// keys are rejected.
struct ProjectConfig {
  // Paths.
  std::string repo_path;
  std::string changesets_path;
  std::string bugs_path;
  std::string links_path;
  std::string output_dir;

  // Linking conventions (used when links_path is absent).
  std::string project_name;
  std::vector<std::string> link_keywords = {"fixes", "closes", "resolves"};
  std::string source_extension = ".java";

  // Changeset model.
  int cs_topics = 100;
  double cs_kappa = 0.75;
  // Bug report model.
  int br_topics = 50;
  double br_kappa = 1.0;
  // Shared priors and inference controls; alpha/eta <= 0 mean 1/k.
  double alpha = 0.0;
  double eta = 0.0;
  double tau0 = 1.0;
  int e_step_iters = 100;
  double e_step_tol = 1e-3;

  // Translation and locator.
  double omega = 1.5;
  double gamma = 5.0;
  double ridge = 1e-6;
  std::optional<std::size_t> pair_window;

  // Preprocessing.
  int filename_repeat = 10;
  bool keep_unsplit = true;
  int context_lines = 3;
  std::string stopwords_path;
  std::string keywords_path;

  std::uint64_t seed = 42;
  std::string mode = "jingo";  // jingo | baseline

  /// Materializes the replay configuration (loads word list overrides).
  evaluation::ReplayConfig replay_config() const;
};

/// Throws ConfigError on unknown keys, bad values or duplicate keys.
ProjectConfig parse_config(std::istream& in);
ProjectConfig parse_config_file(const std::string& path);

}  // namespace jingo
