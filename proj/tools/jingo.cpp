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

// jingo — online bug localization from changeset streams.
//
// Subcommands: ingest, replay, locate, cochange, stats. See README.md.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jingo/config.hpp"
#include "jingo/corpus/diff_parser.hpp"
#include "jingo/errors.hpp"
#include "jingo/evaluation/cochange.hpp"
#include "jingo/evaluation/replay.hpp"
#include "jingo/ingest/linker.hpp"
#include "jingo/io/state.hpp"
#include "jingo/io/streams.hpp"
#include "jingo/locator/locator.hpp"
#include "jingo/log.hpp"
#include "jingo/vcs/git.hpp"
#include "jingo/vcs/virtual_tree.hpp"

namespace fs = std::filesystem;

namespace {

struct IngestArgs {
  std::string repo;
  std::string bugs;
  std::string out_dir;
  std::optional<std::int64_t> since;
  std::string project_name;
  std::vector<std::string> keywords = {"fixes", "closes", "resolves"};
  std::string source_ext = ".java";
};

struct ReplayArgs {
  std::string config_path;
  std::string changesets;
  std::string bugs;
  std::string links;
  std::string out_dir = ".";
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::string save_state;
};

struct LocateArgs {
  std::string state_path;
  std::string report_path;
  std::string repo;
  std::string rev = "HEAD";
  std::string src_dir;
  std::string source_ext = ".java";
  int top_n = 10;
  bool baseline = false;
  double gamma = 5.0;
};

struct CochangeArgs {
  std::string changesets;
  std::string src_dir;
  std::string source_ext = ".java";
  int topics = 100;
  double kappa = 0.75;
  std::uint64_t seed = 42;
  std::size_t top_n = 100;
};

std::int64_t read_cursor(const fs::path& path) {
  std::ifstream in(path);
  std::int64_t value = 0;
  if (in >> value) return value;
  return 0;
}

void write_cursor(const fs::path& path, std::int64_t value) {
  std::ofstream out(path, std::ios::trunc);
  out << value << '\n';
}

int run_ingest(const IngestArgs& args) {
  fs::create_directories(args.out_dir);
  const fs::path changesets_path = fs::path(args.out_dir) / "changesets.jsonl";
  const fs::path links_path = fs::path(args.out_dir) / "links.tsv";
  const fs::path cursor_path = fs::path(args.out_dir) / "cursor.txt";

  std::optional<std::int64_t> since = args.since;
  if (!since.has_value() && fs::exists(cursor_path)) {
    since = read_cursor(cursor_path);
  }

  const auto fresh = jingo::vcs::extract_changesets(args.repo, since);
  jingo::io::write_changeset_file(changesets_path.string(), fresh, /*append=*/true);
  std::cout << "exported " << fresh.size() << " new changesets\n";

  // Linking runs over the full stream so reruns stay a pure function of the
  // message set.
  const auto all = jingo::io::read_changeset_file(changesets_path.string());
  std::int64_t latest = since.value_or(0);
  std::vector<jingo::corpus::Changeset> parsed;
  parsed.reserve(all.size());
  for (const auto& record : all) {
    latest = std::max(latest, record.meta.timestamp);
    try {
      parsed.push_back(jingo::corpus::parse_diff(record.diff, record.meta));
    } catch (const jingo::MalformedDiff& e) {
      jingo::log::warn("skipping corrupt changeset ", record.meta.sha, ": ", e.what());
    }
  }

  if (!args.bugs.empty()) {
    const auto bugs = jingo::io::read_bug_file(args.bugs);
    jingo::ingest::LinkConventions conventions;
    conventions.keywords = args.keywords;
    conventions.project_name = args.project_name;
    conventions.source_extension = args.source_ext;
    const auto links = jingo::ingest::link_bugs(bugs, parsed, conventions);

    std::vector<jingo::io::LinkRecord> records;
    records.reserve(links.size());
    for (const auto& link : links) {
      records.push_back(jingo::io::LinkRecord{link.bug_id, link.fixing_sha, link.fixed_files});
    }
    jingo::io::write_link_file(links_path.string(), records);
    std::cout << "linked " << links.size() << " of " << bugs.size() << " bugs\n";
  }

  write_cursor(cursor_path, latest);
  return 0;
}

int run_replay(const ReplayArgs& args) {
  jingo::ProjectConfig project;
  if (!args.config_path.empty()) {
    project = jingo::parse_config_file(args.config_path);
  }
  if (!args.mode.empty()) project.mode = args.mode;
  if (args.seed.has_value()) project.seed = *args.seed;

  const std::string changesets_path =
      !args.changesets.empty() ? args.changesets : project.changesets_path;
  const std::string bugs_path = !args.bugs.empty() ? args.bugs : project.bugs_path;
  const std::string links_path = !args.links.empty() ? args.links : project.links_path;
  const std::string out_dir = !project.output_dir.empty() && args.out_dir == "."
                                  ? project.output_dir
                                  : args.out_dir;
  if (changesets_path.empty()) {
    throw jingo::ConfigError("replay needs --changesets (or changesets_path in the config)");
  }

  auto changesets = jingo::io::read_changeset_file(changesets_path);
  std::vector<jingo::corpus::BugReport> bugs;
  if (!bugs_path.empty()) bugs = jingo::io::read_bug_file(bugs_path);
  std::vector<jingo::io::LinkRecord> links;
  if (!links_path.empty()) links = jingo::io::read_link_file(links_path);

  const auto events =
      jingo::io::assemble_events(std::move(changesets), std::move(bugs), links);

  jingo::evaluation::ReplayEngine engine(project.replay_config());
  for (const auto& event : events) engine.process(event);
  const auto result = engine.result();

  fs::create_directories(out_dir);
  {
    std::ofstream metrics(fs::path(out_dir) / "metrics.tsv", std::ios::trunc);
    jingo::io::write_metrics_table(metrics, result);
  }
  {
    std::ofstream timing(fs::path(out_dir) / "timing.tsv", std::ios::trunc);
    jingo::io::write_timing_table(timing, jingo::evaluation::timing_report(result.timing));
  }
  std::cout << "bugs evaluated: " << result.bugs.size() << "\n"
            << "MRR " << result.mrr << "  MAP " << result.map << "  Top@1 " << result.top1
            << "  Top@3 " << result.top3 << "  Top@5 " << result.top5 << "\n";

  if (!args.save_state.empty()) {
    jingo::io::Cursor cursor;
    cursor.last_timestamp = engine.last_timestamp();
    cursor.last_changeset_sha = engine.last_changeset_sha();
    cursor.last_bug_id = engine.last_bug_id();
    const jingo::io::ModelState state{engine.changeset_model(), engine.bug_report_model(),
                                      engine.pair_store(), engine.translation_matrix(), cursor};
    jingo::io::save_state(args.save_state, state);
    std::cout << "state saved to " << args.save_state << "\n";
  }
  return 0;
}

std::map<std::string, std::string> read_source_dir(const std::string& dir,
                                                   const std::string& ext) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string path = entry.path().string();
    if (path.size() < ext.size() || path.compare(path.size() - ext.size(), ext.size(), ext) != 0) {
      continue;
    }
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    files.emplace(fs::relative(entry.path(), dir).string(), content.str());
  }
  return files;
}

int run_locate(const LocateArgs& args) {
  const jingo::io::ModelState state = jingo::io::load_state(args.state_path);

  std::ifstream report_in(args.report_path);
  if (!report_in) throw jingo::ConfigError("cannot open report file: " + args.report_path);
  jingo::corpus::BugReport report;
  report.id = args.report_path;
  std::getline(report_in, report.summary);
  std::ostringstream rest;
  rest << report_in.rdbuf();
  report.description = rest.str();
  if (report.summary.empty()) {
    throw jingo::ConfigError("report file is empty: " + args.report_path);
  }

  std::map<std::string, std::string> files;
  if (!args.src_dir.empty()) {
    files = read_source_dir(args.src_dir, args.source_ext);
  } else if (!args.repo.empty()) {
    for (auto& [path, content] : jingo::vcs::snapshot_at(args.repo, args.rev)) {
      if (path.size() >= args.source_ext.size() &&
          path.compare(path.size() - args.source_ext.size(), args.source_ext.size(),
                       args.source_ext) == 0) {
        files.emplace(path, std::move(content));
      }
    }
  } else {
    throw jingo::ConfigError("locate needs --repo or --src-dir for the snapshot");
  }
  if (files.empty()) throw jingo::ConfigError("snapshot holds no source files");

  const auto pre = jingo::corpus::PreprocessConfig::defaults();
  const auto index = jingo::locator::build_snapshot_index(files, state.changeset_model, pre);

  jingo::locator::LocatorConfig cfg;
  cfg.gamma = args.gamma;
  cfg.baseline_mode = args.baseline;
  const jingo::translation::TranslationMatrix* t =
      state.translation.has_value() ? &state.translation.value() : nullptr;

  const auto ranking = jingo::locator::locate(report, state.changeset_model,
                                              state.bug_report_model, t, index, cfg, pre);
  const int limit = std::min<int>(args.top_n, static_cast<int>(ranking.size()));
  for (int i = 0; i < limit; ++i) {
    std::cout << (i + 1) << '\t' << ranking[i].path << '\t' << ranking[i].distance << '\n';
  }
  return 0;
}

int run_cochange(const CochangeArgs& args) {
  const auto records = jingo::io::read_changeset_file(args.changesets);

  auto lda = jingo::topicmodel::LdaConfig::with_topics(args.topics, args.kappa, args.seed);
  jingo::topicmodel::TopicModel model(lda);
  const auto pre = jingo::corpus::PreprocessConfig::defaults();

  jingo::vcs::VirtualTree tree;
  std::vector<jingo::corpus::Changeset> parsed;
  for (const auto& record : records) {
    try {
      jingo::corpus::Changeset cs = jingo::corpus::parse_diff(record.diff, record.meta);
      const auto doc = jingo::corpus::preprocess_changeset(cs, pre);
      model.expand_vocabulary(doc);
      model.update({doc});
      parsed.push_back(std::move(cs));
      tree.apply_diff(record.diff);
    } catch (const jingo::MalformedDiff& e) {
      jingo::log::warn("skipping changeset ", record.meta.sha, ": ", e.what());
    } catch (const jingo::EmptyDocument&) {
      tree.apply_diff(record.diff);
    }
  }

  std::map<std::string, std::string> snapshot;
  if (!args.src_dir.empty()) {
    snapshot = read_source_dir(args.src_dir, args.source_ext);
  } else {
    snapshot = tree.snapshot(args.source_ext);
  }

  jingo::evaluation::CochangeOptions opts;
  opts.top_n = args.top_n;
  const auto report = jingo::evaluation::cochange_analysis(parsed, model, snapshot, pre, opts);

  std::cout << "bucket\tpairs\tmean_cosine_similarity\n";
  std::cout << ">=20%\t" << report.high.pair_count << '\t' << report.high.mean_similarity << '\n';
  std::cout << "[5%,20%)\t" << report.mid.pair_count << '\t' << report.mid.mean_similarity << '\n';
  std::cout << "<5%\t" << report.low.pair_count << '\t' << report.low.mean_similarity << '\n';
  return 0;
}

int run_stats(const std::string& state_path, const std::string& timing_path) {
  const jingo::io::ModelState state = jingo::io::load_state(state_path);
  const auto& cs = state.changeset_model;
  const auto& br = state.bug_report_model;

  std::cout << "changeset model:  k=" << cs.config().k << "  vocab=" << cs.vocab().size()
            << "  updates=" << cs.update_count() << '\n';
  std::cout << "bug report model: k=" << br.config().k << "  vocab=" << br.vocab().size()
            << "  updates=" << br.update_count() << '\n';
  std::cout << "pair store: " << state.pairs.size() << " pairs ("
            << state.pairs.count(jingo::translation::PairKind::kRealFix) << " real, "
            << state.pairs.count(jingo::translation::PairKind::kCommitLog) << " commit-log)\n";
  if (state.translation.has_value()) {
    std::cout << "translation matrix: " << state.translation->rows << " x "
              << state.translation->cols << " fitted on " << state.translation->fitted_on
              << " pairs\n";
  } else {
    std::cout << "translation matrix: not fitted\n";
  }
  std::cout << "cursor: ts=" << state.cursor.last_timestamp << " sha="
            << state.cursor.last_changeset_sha << " bug=" << state.cursor.last_bug_id << '\n';

  if (!timing_path.empty()) {
    std::ifstream timing(timing_path);
    if (timing) {
      std::cout << "timing:\n" << timing.rdbuf();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jingo: streaming bug localization over changeset and bug-report topic models"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Export changesets from a repository and link bugs");
  ingest->add_option("--repo", ingest_args.repo, "Path to the git repository")->required();
  ingest->add_option("--bugs", ingest_args.bugs, "Bug stream file (JSON lines)");
  ingest->add_option("--out", ingest_args.out_dir, "Output directory")->required();
  ingest->add_option("--since", ingest_args.since, "Only commits strictly after this timestamp");
  ingest->add_option("--project", ingest_args.project_name, "Project name for ISSUE-123 links");
  ingest->add_option("--keywords", ingest_args.keywords, "Link keywords")->delimiter(',');
  ingest->add_option("--source-ext", ingest_args.source_ext, "Source file extension");

  ReplayArgs replay_args;
  auto* replay = app.add_subcommand("replay", "Replay a history and score every fixed bug");
  replay->add_option("--config", replay_args.config_path, "Project config file");
  replay->add_option("--changesets", replay_args.changesets, "Changeset stream file");
  replay->add_option("--bugs", replay_args.bugs, "Bug stream file");
  replay->add_option("--links", replay_args.links, "Links file");
  replay->add_option("--out", replay_args.out_dir, "Output directory for result tables");
  replay->add_option("--mode", replay_args.mode, "jingo or baseline")
      ->check(CLI::IsMember({"jingo", "baseline"}));
  replay->add_option("--seed", replay_args.seed, "Model seed");
  replay->add_option("--save-state", replay_args.save_state, "Write the model snapshot here");

  LocateArgs locate_args;
  auto* locate = app.add_subcommand("locate", "Rank classes for a bug report file");
  locate->add_option("--state", locate_args.state_path, "Model snapshot")->required();
  locate->add_option("--report", locate_args.report_path, "Bug report text file")->required();
  locate->add_option("--repo", locate_args.repo, "Repository for the snapshot");
  locate->add_option("--rev", locate_args.rev, "Revision to index (default HEAD)");
  locate->add_option("--src-dir", locate_args.src_dir, "Plain source directory instead of a repo");
  locate->add_option("--source-ext", locate_args.source_ext, "Source file extension");
  locate->add_option("--top", locate_args.top_n, "Ranking length to print");
  locate->add_flag("--baseline", locate_args.baseline, "Changeset distribution only");
  locate->add_option("--gamma", locate_args.gamma, "Amplifying factor");

  CochangeArgs cochange_args;
  auto* cochange = app.add_subcommand("cochange", "Co-change vs topic-similarity analysis");
  cochange->add_option("--changesets", cochange_args.changesets, "Changeset stream file")
      ->required();
  cochange->add_option("--src-dir", cochange_args.src_dir, "Snapshot directory (default: "
                                                           "reconstructed from the stream)");
  cochange->add_option("--source-ext", cochange_args.source_ext, "Source file extension");
  cochange->add_option("--topics", cochange_args.topics, "Topic count");
  cochange->add_option("--kappa", cochange_args.kappa, "Decay factor");
  cochange->add_option("--seed", cochange_args.seed, "Model seed");
  cochange->add_option("--top-n", cochange_args.top_n, "Most-changed classes considered");

  std::string stats_state;
  std::string stats_timing;
  auto* stats = app.add_subcommand("stats", "Print model and store sizes from a snapshot");
  stats->add_option("--state", stats_state, "Model snapshot")->required();
  stats->add_option("--timing", stats_timing, "Timing table to echo");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return run_ingest(ingest_args);
    if (replay->parsed()) return run_replay(replay_args);
    if (locate->parsed()) return run_locate(locate_args);
    if (cochange->parsed()) return run_cochange(cochange_args);
    if (stats->parsed()) return run_stats(stats_state, stats_timing);
  } catch (const jingo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
