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

#include "jingo/vcs/git.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "jingo/errors.hpp"
#include "jingo/log.hpp"

namespace jingo::vcs {

namespace {

// Hash of git's empty tree; the diff base for root commits.
constexpr const char* kEmptyTree = "4b825dc642cb6eb9a060e54bf8d69288fbee4904";

std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run(const std::vector<std::string>& args) {
  std::string command;
  for (const std::string& arg : args) {
    if (!command.empty()) command += ' ';
    command += shell_quote(arg);
  }
  command += " 2>/dev/null";

  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    throw ToolUnavailable("cannot spawn: " + args.front());
  }
  std::array<char, 1 << 14> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

void ensure_git_available() {
  const CommandResult probe = run({"git", "--version"});
  if (probe.exit_code != 0) {
    throw ToolUnavailable("git executable not found");
  }
}

void ensure_repository(const std::string& repo_path) {
  const CommandResult probe = run({"git", "-C", repo_path, "rev-parse", "--is-inside-work-tree"});
  if (probe.exit_code != 0) {
    throw NotARepository(repo_path + " is not a git repository");
  }
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<evaluation::ChangesetEvent> extract_changesets(const std::string& repo_path,
                                                           std::optional<std::int64_t> since) {
  ensure_git_available();
  ensure_repository(repo_path);

  // %x01 separates fields, %x02 separates records; %B is the full message.
  const CommandResult log = run({"git", "-C", repo_path, "log", "--first-parent", "--reverse",
                                 "--format=%H%x01%P%x01%ct%x01%an%x01%B%x02"});
  if (log.exit_code != 0) {
    throw NotARepository("git log failed in " + repo_path);
  }

  std::vector<evaluation::ChangesetEvent> records;
  for (const std::string& record : split_on(log.output, '\x02')) {
    // Records are separated by \x02\n; strip the leading newline.
    std::string trimmed = record;
    while (!trimmed.empty() && (trimmed.front() == '\n' || trimmed.front() == '\r')) {
      trimmed.erase(trimmed.begin());
    }
    if (trimmed.empty()) continue;

    const std::vector<std::string> fields = split_on(trimmed, '\x01');
    if (fields.size() < 5) continue;

    evaluation::ChangesetEvent event;
    event.meta.sha = fields[0];
    const std::string& parents = fields[1];
    event.meta.timestamp = std::strtoll(fields[2].c_str(), nullptr, 10);
    event.meta.author = fields[3];
    event.meta.message = fields[4];
    // %B ends with a newline git adds; drop exactly one.
    if (!event.meta.message.empty() && event.meta.message.back() == '\n') {
      event.meta.message.pop_back();
    }

    if (since.has_value() && event.meta.timestamp <= *since) continue;

    std::string first_parent = kEmptyTree;
    if (!parents.empty()) {
      const std::size_t space = parents.find(' ');
      first_parent = space == std::string::npos ? parents : parents.substr(0, space);
    }

    const CommandResult diff =
        run({"git", "-C", repo_path, "diff", first_parent, event.meta.sha});
    if (diff.exit_code != 0) {
      log::warn("git diff failed for ", event.meta.sha, "; emitting empty diff");
    }
    event.diff = diff.output;
    records.push_back(std::move(event));
  }
  return records;
}

std::map<std::string, std::string> snapshot_at(const std::string& repo_path,
                                               const std::string& sha) {
  ensure_git_available();
  ensure_repository(repo_path);

  const CommandResult resolve = run({"git", "-C", repo_path, "rev-parse", "--verify", sha});
  if (resolve.exit_code != 0) {
    throw UnknownCommit("commit not found: " + sha);
  }

  const CommandResult listing =
      run({"git", "-C", repo_path, "ls-tree", "-r", "-z", "--name-only", sha});
  if (listing.exit_code != 0) {
    throw UnknownCommit("cannot list tree of " + sha);
  }

  std::map<std::string, std::string> files;
  for (const std::string& path : split_on(listing.output, '\0')) {
    if (path.empty()) continue;
    const CommandResult content = run({"git", "-C", repo_path, "show", sha + ":" + path});
    if (content.exit_code != 0) {
      log::warn("cannot read ", path, " at ", sha);
      continue;
    }
    files.emplace(path, content.output);
  }
  return files;
}

}  // namespace jingo::vcs
