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

#include "jingo/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "jingo/corpus/wordlists.hpp"
#include "jingo/errors.hpp"

namespace jingo {

namespace {

std::string trim(const std::string& s) {
  const std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

long long to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const long long v = std::stoll(value, &consumed);
    if (consumed != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: " + value);
  }
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(value, &consumed);
    if (consumed != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: " + value);
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key '" + key + "': not a boolean: " + value);
}

std::vector<std::string> to_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

ProjectConfig parse_config(std::istream& in) {
  ProjectConfig cfg;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }

    if (key == "repo_path") cfg.repo_path = value;
    else if (key == "changesets_path") cfg.changesets_path = value;
    else if (key == "bugs_path") cfg.bugs_path = value;
    else if (key == "links_path") cfg.links_path = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "project_name") cfg.project_name = value;
    else if (key == "link_keywords") cfg.link_keywords = to_list(value);
    else if (key == "source_extension") cfg.source_extension = value;
    else if (key == "cs_topics") cfg.cs_topics = static_cast<int>(to_int(key, value));
    else if (key == "cs_kappa") cfg.cs_kappa = to_double(key, value);
    else if (key == "br_topics") cfg.br_topics = static_cast<int>(to_int(key, value));
    else if (key == "br_kappa") cfg.br_kappa = to_double(key, value);
    else if (key == "alpha") cfg.alpha = to_double(key, value);
    else if (key == "eta") cfg.eta = to_double(key, value);
    else if (key == "tau0") cfg.tau0 = to_double(key, value);
    else if (key == "e_step_iters") cfg.e_step_iters = static_cast<int>(to_int(key, value));
    else if (key == "e_step_tol") cfg.e_step_tol = to_double(key, value);
    else if (key == "omega") cfg.omega = to_double(key, value);
    else if (key == "gamma") cfg.gamma = to_double(key, value);
    else if (key == "ridge") cfg.ridge = to_double(key, value);
    else if (key == "pair_window") cfg.pair_window = static_cast<std::size_t>(to_int(key, value));
    else if (key == "filename_repeat") cfg.filename_repeat = static_cast<int>(to_int(key, value));
    else if (key == "keep_unsplit") cfg.keep_unsplit = to_bool(key, value);
    else if (key == "context_lines") cfg.context_lines = static_cast<int>(to_int(key, value));
    else if (key == "stopwords_path") cfg.stopwords_path = value;
    else if (key == "keywords_path") cfg.keywords_path = value;
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
    else if (key == "mode") {
      if (value != "jingo" && value != "baseline") {
        throw ConfigError("config key 'mode': expected jingo or baseline, got " + value);
      }
      cfg.mode = value;
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ProjectConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_config(in);
}

evaluation::ReplayConfig ProjectConfig::replay_config() const {
  evaluation::ReplayConfig rc;

  auto lda = [&](int k, double kappa) {
    topicmodel::LdaConfig m;
    m.k = k;
    m.kappa = kappa;
    m.alpha = alpha > 0.0 ? alpha : 1.0 / k;
    m.eta = eta > 0.0 ? eta : 1.0 / k;
    m.tau0 = tau0;
    m.seed = seed;
    m.e_step_iters = e_step_iters;
    m.e_step_tol = e_step_tol;
    m.validate();
    return m;
  };
  rc.changeset_model = lda(cs_topics, cs_kappa);
  rc.bug_report_model = lda(br_topics, br_kappa);

  rc.preprocess = corpus::PreprocessConfig::defaults();
  rc.preprocess.filename_repeat = filename_repeat;
  rc.preprocess.keep_unsplit = keep_unsplit;
  rc.preprocess.context_lines = context_lines;
  if (!stopwords_path.empty()) rc.preprocess.stopwords = corpus::load_wordlist(stopwords_path);
  if (!keywords_path.empty()) rc.preprocess.code_keywords = corpus::load_wordlist(keywords_path);

  if (omega < 1.0) throw ConfigError("config key 'omega': must be >= 1");
  if (gamma < 1.0) throw ConfigError("config key 'gamma': must be >= 1");
  if (ridge < 0.0) throw ConfigError("config key 'ridge': must be >= 0");
  rc.readiness.omega = omega;
  rc.locator.gamma = gamma;
  rc.ridge = ridge;
  rc.pair_window = pair_window;
  rc.source_extension = source_extension;
  rc.mode = mode == "baseline" ? evaluation::ReplayMode::kBaseline : evaluation::ReplayMode::kJingo;
  return rc;
}

}  // namespace jingo
