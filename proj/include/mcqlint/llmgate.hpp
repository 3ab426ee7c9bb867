// llmgate.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Gateway to the chat-model backend used by the verification-tier
// detectors and the answerability metric: prompt rendering, strict
// response parsing, retry with backoff, an in-flight request bound, and a
// persistent disk cache. The stub backend replays fixture responses so
// the whole pipeline runs offline and deterministically.

#ifndef MCQLINT_LLMGATE_HPP
#define MCQLINT_LLMGATE_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/criteria.hpp"

namespace mcqlint::llmgate {

struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Purpose { kAnswer, kVerify };

std::string purpose_key(Purpose purpose, std::optional<Criterion> criterion);

struct PromptSpec {
  Purpose purpose = Purpose::kAnswer;
  std::optional<Criterion> criterion;  // set for kVerify
  std::string template_text;           // {stem} {options} {evidence} slots
  enum class Form { kOptionLetter, kYesNo } expected_form = Form::kOptionLetter;
};

class PromptLibrary {
 public:
  // Loads answer_0..answer_2.txt and verify_<criterion>.txt files.
  static PromptLibrary load(const std::string& prompt_dir);

  static constexpr int kAnswerPromptCount = 3;

  PromptSpec answer_prompt(int index) const;
  PromptSpec verify_prompt(Criterion criterion) const;

  // Canonical rendering: options labeled A..E in original order, '\n'
  // separators. Identical input yields identical bytes, which keeps the
  // cache key stable.
  static std::string render(const PromptSpec& spec, const Mcq& mcq,
                            const std::string& evidence);
  static std::string options_block(const Mcq& mcq);

 private:
  std::vector<std::string> answer_templates_;
  std::unordered_map<int, std::string> verify_templates_;
};

// Context handed to a backend for one completion.
struct CallContext {
  std::string question_id;
  std::string purpose;      // purpose_key() string
  int prompt_index = 0;     // 0..2 for answer prompts
  std::string rendered;     // full prompt text
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string complete(const CallContext& call) = 0;
  virtual std::string id() const = 0;
  // Whether responses may be persisted in the disk cache.
  virtual bool cacheable() const { return false; }
};

// Fixture-driven backend. Fixture file: one JSON object per line with
// fields question_id, purpose, response, and optional prompt_index.
// Unmatched lookups fall back to the configured defaults. A response of
// "!ERROR" simulates a backend failure.
class StubBackend : public Backend {
 public:
  StubBackend() = default;
  static std::unique_ptr<StubBackend> from_file(const std::string& path);

  void add_fixture(const std::string& question_id, const std::string& purpose,
                   const std::string& response, int prompt_index = -1);
  void set_default_answer(std::string r) { default_answer_ = std::move(r); }
  void set_default_verify(std::string r) { default_verify_ = std::move(r); }

  std::string complete(const CallContext& call) override;
  std::string id() const override { return "stub"; }

  long calls() const { return calls_.load(); }

 private:
  std::unordered_map<std::string, std::string> fixtures_;
  std::string default_answer_ = "A";
  std::string default_verify_ = "No";
  std::atomic<long> calls_{0};
};

// Refuses every call; the gate maps the refusal to ABSTAIN / not-verified.
class DisabledBackend : public Backend {
 public:
  std::string complete(const CallContext&) override;
  std::string id() const override { return "disabled"; }
};

struct HttpConfig {
  std::string endpoint;   // e.g. https://host/v1/chat/completions
  std::string model = "gpt-4-0125-preview";
  std::string api_key;
  double temperature = 0.0;
  int connect_timeout_s = 10;
  int read_timeout_s = 60;
};

// JSON chat-completion client over cpp-httplib.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpConfig config);
  std::string complete(const CallContext& call) override;
  std::string id() const override;
  bool cacheable() const override { return true; }

 private:
  HttpConfig config_;
};

// Append-friendly JSONL cache; corrupt lines are skipped on load.
class DiskCache {
 public:
  explicit DiskCache(std::string dir);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& value);

  size_t entry_count() const;
  size_t byte_size() const;
  void clear();

  std::string file_path() const;

 private:
  void load();

  std::string dir_;
  std::unordered_map<std::string, std::string> entries_;
  mutable std::mutex mutex_;
};

struct GateOptions {
  std::string cache_dir;       // empty = no disk cache
  std::string model = "gpt-4-0125-preview";
  double temperature = 0.0;
  int max_inflight = 4;
  int max_attempts = 3;
  int backoff_ms = 100;        // doubled per retry; tests shrink it
};

struct GateStats {
  long backend_calls = 0;
  long cache_hits = 0;
  long answer_rounds = 0;
  long verify_calls = 0;
};

// The refusal marker returned by the disabled backend.
inline constexpr std::string_view kRefusal = "!DISABLED";

class Gate {
 public:
  Gate(std::unique_ptr<Backend> backend, PromptLibrary prompts,
       GateOptions options);

  // Majority vote over the three answer prompts; nullopt = ABSTAIN.
  std::optional<int> ask_answer(const Mcq& mcq);

  // Strict leading yes/no parse; anything else is false (a flag demands
  // positive evidence). Throws GateError after retries are exhausted.
  bool verify(Criterion criterion, const Mcq& mcq, const std::string& evidence);

  // Cache-first completion with bounded retries; exposed for tests.
  std::string cached_call(const PromptSpec& spec, const CallContext& call);

  bool disabled() const;
  GateStats stats() const;
  const Backend& backend() const { return *backend_; }

  static std::optional<int> parse_option_letter(std::string_view response,
                                                int option_count);
  // nullopt = unparseable (the caller logs and treats it as "no").
  static std::optional<bool> parse_yes_no(std::string_view response);

  std::string cache_key(const PromptSpec& spec,
                        const std::string& rendered) const;

 private:
  std::unique_ptr<Backend> backend_;
  PromptLibrary prompts_;
  GateOptions options_;
  std::unique_ptr<DiskCache> cache_;
  mutable std::mutex stats_mutex_;
  GateStats stats_;
  class Inflight;
  std::shared_ptr<Inflight> inflight_;
};

// Stable 64-bit FNV-1a digest used for cache keys and config digests.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace mcqlint::llmgate

#endif  // MCQLINT_LLMGATE_HPP
