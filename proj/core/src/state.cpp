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

#include "jingo/io/state.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "jingo/errors.hpp"

namespace jingo::io {

namespace {

constexpr char kMagic[4] = {'J', 'N', 'G', 'O'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t fnv1a(const std::vector<char>& bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

class Writer {
 public:
  std::vector<char>& bytes() { return bytes_; }

  void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }

  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }

  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }

  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

  void f64(double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    u64(bits);
  }

  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }

 private:
  std::vector<char> bytes_;
};

class Reader {
 public:
  explicit Reader(const std::vector<char>& bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }

  std::uint32_t u32() {
    const char* p = take(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return v;
  }

  std::uint64_t u64() {
    const char* p = take(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return v;
  }

  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }

  double f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, sizeof(v));
    return v;
  }

  std::string str() {
    const std::uint32_t length = u32();
    const char* p = take(length);
    return std::string(p, p + length);
  }

  bool exhausted() const { return pos_ == bytes_.size(); }

 private:
  const char* take(std::size_t n) {
    if (pos_ + n > bytes_.size()) {
      throw CorruptSnapshot("snapshot payload is truncated");
    }
    const char* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }

  const std::vector<char>& bytes_;
  std::size_t pos_ = 0;
};

void write_lda_config(Writer& w, const topicmodel::LdaConfig& cfg) {
  w.u32(static_cast<std::uint32_t>(cfg.k));
  w.f64(cfg.alpha);
  w.f64(cfg.eta);
  w.f64(cfg.kappa);
  w.f64(cfg.tau0);
  w.u64(cfg.seed);
  w.u32(static_cast<std::uint32_t>(cfg.e_step_iters));
  w.f64(cfg.e_step_tol);
}

topicmodel::LdaConfig read_lda_config(Reader& r) {
  topicmodel::LdaConfig cfg;
  cfg.k = static_cast<int>(r.u32());
  cfg.alpha = r.f64();
  cfg.eta = r.f64();
  cfg.kappa = r.f64();
  cfg.tau0 = r.f64();
  cfg.seed = r.u64();
  cfg.e_step_iters = static_cast<int>(r.u32());
  cfg.e_step_tol = r.f64();
  return cfg;
}

void write_model(Writer& w, const topicmodel::TopicModel& model) {
  write_lda_config(w, model.config());
  const auto& terms = model.vocab().terms();
  w.u64(terms.size());
  for (const std::string& term : terms) w.str(term);
  w.u64(model.update_count());
  const auto& lambda = model.lambda();
  w.u64(lambda.size());
  for (double v : lambda) w.f64(v);
}

topicmodel::TopicModel read_model(Reader& r) {
  const topicmodel::LdaConfig cfg = read_lda_config(r);
  topicmodel::Vocabulary vocab;
  const std::uint64_t term_count = r.u64();
  for (std::uint64_t i = 0; i < term_count; ++i) vocab.add(r.str());
  const std::uint64_t updates = r.u64();
  const std::uint64_t lambda_size = r.u64();
  std::vector<double> lambda(lambda_size);
  for (double& v : lambda) v = r.f64();
  try {
    return topicmodel::TopicModel::from_state(cfg, std::move(vocab), std::move(lambda), updates);
  } catch (const ConfigError& e) {
    throw CorruptSnapshot(std::string("snapshot holds an invalid model: ") + e.what());
  }
}

}  // namespace

void save_state(const std::string& path, const ModelState& state) {
  Writer w;
  write_model(w, state.changeset_model);
  write_model(w, state.bug_report_model);

  w.u64(state.pairs.k_br());
  w.u64(state.pairs.k_cs());
  w.u64(state.pairs.size());
  for (std::size_t i = 0; i < state.pairs.size(); ++i) {
    w.u8(static_cast<std::uint8_t>(state.pairs.kinds()[i]));
    for (double v : state.pairs.rows_b()[i]) w.f64(v);
    for (double v : state.pairs.rows_a()[i]) w.f64(v);
  }

  w.u8(state.translation.has_value() ? 1 : 0);
  if (state.translation.has_value()) {
    const auto& t = *state.translation;
    w.u64(t.rows);
    w.u64(t.cols);
    w.u64(t.fitted_on);
    for (double v : t.data) w.f64(v);
  }

  w.i64(state.cursor.last_timestamp);
  w.str(state.cursor.last_changeset_sha);
  w.str(state.cursor.last_bug_id);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write snapshot: " + path);
  out.write(kMagic, sizeof(kMagic));
  const std::uint32_t version = kFormatVersion;
  char header[20];
  for (int i = 0; i < 4; ++i) header[i] = static_cast<char>((version >> (8 * i)) & 0xff);
  const std::uint64_t size = w.bytes().size();
  for (int i = 0; i < 8; ++i) header[4 + i] = static_cast<char>((size >> (8 * i)) & 0xff);
  const std::uint64_t checksum = fnv1a(w.bytes());
  for (int i = 0; i < 8; ++i) header[12 + i] = static_cast<char>((checksum >> (8 * i)) & 0xff);
  out.write(header, sizeof(header));
  out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
  if (!out) throw ConfigError("short write while saving snapshot: " + path);
}

ModelState load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open snapshot: " + path);

  char magic[4];
  char header[20];
  if (!in.read(magic, sizeof(magic)) || !in.read(header, sizeof(header))) {
    throw CorruptSnapshot("snapshot header is truncated: " + path);
  }
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw CorruptSnapshot("not a model snapshot: " + path);
  }
  std::uint32_t version = 0;
  for (int i = 0; i < 4; ++i) version |= static_cast<std::uint32_t>(static_cast<unsigned char>(header[i])) << (8 * i);
  if (version != kFormatVersion) {
    throw VersionMismatch("snapshot format version " + std::to_string(version) +
                          ", expected " + std::to_string(kFormatVersion));
  }
  std::uint64_t size = 0;
  std::uint64_t checksum = 0;
  for (int i = 0; i < 8; ++i) size |= static_cast<std::uint64_t>(static_cast<unsigned char>(header[4 + i])) << (8 * i);
  for (int i = 0; i < 8; ++i) checksum |= static_cast<std::uint64_t>(static_cast<unsigned char>(header[12 + i])) << (8 * i);

  std::vector<char> payload(size);
  if (!in.read(payload.data(), static_cast<std::streamsize>(size))) {
    throw CorruptSnapshot("snapshot payload is truncated: " + path);
  }
  if (fnv1a(payload) != checksum) {
    throw CorruptSnapshot("snapshot checksum mismatch: " + path);
  }

  Reader r(payload);
  topicmodel::TopicModel cs = read_model(r);
  topicmodel::TopicModel br = read_model(r);

  const std::size_t k_br = r.u64();
  const std::size_t k_cs = r.u64();
  translation::PairStore pairs(k_br, k_cs);
  const std::uint64_t pair_count = r.u64();
  for (std::uint64_t i = 0; i < pair_count; ++i) {
    const auto kind = static_cast<translation::PairKind>(r.u8());
    std::vector<double> b(k_br);
    for (double& v : b) v = r.f64();
    std::vector<double> a(k_cs);
    for (double& v : a) v = r.f64();
    pairs.record_pair(topicmodel::TopicDistribution{std::move(b)},
                      topicmodel::TopicDistribution{std::move(a)}, kind);
  }

  std::optional<translation::TranslationMatrix> t;
  if (r.u8() != 0) {
    translation::TranslationMatrix matrix;
    matrix.rows = r.u64();
    matrix.cols = r.u64();
    matrix.fitted_on = r.u64();
    matrix.data.resize(matrix.rows * matrix.cols);
    for (double& v : matrix.data) v = r.f64();
    t = std::move(matrix);
  }

  Cursor cursor;
  cursor.last_timestamp = r.i64();
  cursor.last_changeset_sha = r.str();
  cursor.last_bug_id = r.str();

  if (!r.exhausted()) {
    throw CorruptSnapshot("snapshot has trailing bytes: " + path);
  }
  return ModelState{std::move(cs), std::move(br), std::move(pairs), std::move(t),
                    std::move(cursor)};
}

}  // namespace jingo::io
