// llmgate.cpp
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

#include "mcqlint/llmgate.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mcqlint/unicode.hpp"

namespace mcqlint::llmgate {

namespace fs = std::filesystem;
using json = nlohmann::json;

// Transient backend failure; the gate retries these.
struct TransientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

std::string purpose_key(Purpose purpose, std::optional<Criterion> criterion) {
  if (purpose == Purpose::kAnswer) return "answer";
  std::string key = "verify:";
  if (criterion) key += std::string(criterion_name(*criterion));
  return key;
}

// --- prompt library ---

PromptLibrary PromptLibrary::load(const std::string& prompt_dir) {
  PromptLibrary lib;
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GateError("cannot open prompt template " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  for (int i = 0; i < kAnswerPromptCount; ++i) {
    lib.answer_templates_.push_back(
        slurp(prompt_dir + "/answer_" + std::to_string(i) + ".txt"));
  }
  for (auto c : all_criteria()) {
    if (criterion_tier(c) != Tier::kLlmVerified) continue;
    lib.verify_templates_[index_of(c)] =
        slurp(prompt_dir + "/verify_" + std::string(criterion_name(c)) + ".txt");
  }
  return lib;
}

PromptSpec PromptLibrary::answer_prompt(int index) const {
  PromptSpec spec;
  spec.purpose = Purpose::kAnswer;
  spec.template_text = answer_templates_.at(index);
  spec.expected_form = PromptSpec::Form::kOptionLetter;
  return spec;
}

PromptSpec PromptLibrary::verify_prompt(Criterion criterion) const {
  auto it = verify_templates_.find(index_of(criterion));
  if (it == verify_templates_.end()) {
    throw GateError("no verify template for " +
                    std::string(criterion_name(criterion)));
  }
  PromptSpec spec;
  spec.purpose = Purpose::kVerify;
  spec.criterion = criterion;
  spec.template_text = it->second;
  spec.expected_form = PromptSpec::Form::kYesNo;
  return spec;
}

std::string PromptLibrary::options_block(const Mcq& mcq) {
  std::string out;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    out += static_cast<char>('A' + i);
    out += ") ";
    out += mcq.options[i].text;
    if (i + 1 < mcq.options.size()) out += '\n';
  }
  return out;
}

std::string PromptLibrary::render(const PromptSpec& spec, const Mcq& mcq,
                                  const std::string& evidence) {
  std::string out = spec.template_text;
  auto replace_all = [&out](std::string_view slot, const std::string& value) {
    size_t pos = 0;
    while ((pos = out.find(slot, pos)) != std::string::npos) {
      out.replace(pos, slot.size(), value);
      pos += value.size();
    }
  };
  replace_all("{stem}", mcq.stem);
  replace_all("{options}", options_block(mcq));
  replace_all("{evidence}", evidence);
  return out;
}

// --- backends ---

namespace {
std::string stub_key(const std::string& id, const std::string& purpose,
                     int prompt_index) {
  return id + "\x1f" + purpose + "\x1f" + std::to_string(prompt_index);
}
}  // namespace

std::unique_ptr<StubBackend> StubBackend::from_file(const std::string& path) {
  auto stub = std::make_unique<StubBackend>();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GateError("cannot open stub fixtures " + path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw GateError(path + ":" + std::to_string(line_no) +
                      ": bad fixture line: " + e.what());
    }
    stub->add_fixture(obj.at("question_id").get<std::string>(),
                      obj.at("purpose").get<std::string>(),
                      obj.at("response").get<std::string>(),
                      obj.value("prompt_index", -1));
  }
  return stub;
}

void StubBackend::add_fixture(const std::string& question_id,
                              const std::string& purpose,
                              const std::string& response, int prompt_index) {
  fixtures_[stub_key(question_id, purpose, prompt_index)] = response;
}

std::string StubBackend::complete(const CallContext& call) {
  calls_.fetch_add(1);
  auto it = fixtures_.find(stub_key(call.question_id, call.purpose,
                                    call.prompt_index));
  if (it == fixtures_.end()) {
    it = fixtures_.find(stub_key(call.question_id, call.purpose, -1));
  }
  std::string response;
  if (it != fixtures_.end()) {
    response = it->second;
  } else {
    response = call.purpose == "answer" ? default_answer_ : default_verify_;
  }
  if (response == "!ERROR") {
    throw TransientError("scripted stub failure for " + call.question_id);
  }
  return response;
}

std::string DisabledBackend::complete(const CallContext&) {
  return std::string(kRefusal);
}

HttpBackend::HttpBackend(HttpConfig config) : config_(std::move(config)) {}

std::string HttpBackend::id() const { return "http:" + config_.model; }

// --- disk cache ---

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
  load();
}

std::string DiskCache::file_path() const { return dir_ + "/llm_cache.jsonl"; }

void DiskCache::load() {
  std::ifstream in(file_path(), std::ios::binary);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json obj = json::parse(line);
      entries_[obj.at("key").get<std::string>()] =
          obj.at("response").get<std::string>();
    } catch (const json::exception&) {
      // Corrupt line: skip it; the entry will be re-fetched and rewritten.
      continue;
    }
  }
}

std::optional<std::string> DiskCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void DiskCache::store(const std::string& key, const std::string& value) {
  std::lock_guard lock(mutex_);
  entries_[key] = value;
  std::ofstream out(file_path(), std::ios::binary | std::ios::app);
  json obj;
  obj["key"] = key;
  obj["response"] = value;
  out << obj.dump() << '\n';
}

size_t DiskCache::entry_count() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

size_t DiskCache::byte_size() const {
  std::error_code ec;
  auto size = fs::file_size(file_path(), ec);
  return ec ? 0 : static_cast<size_t>(size);
}

void DiskCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
  std::error_code ec;
  fs::remove(file_path(), ec);
}

// --- gate ---

// Bounds the number of in-flight backend requests.
class Gate::Inflight {
 public:
  explicit Inflight(int limit) : available_(limit > 0 ? limit : 1) {}

  void acquire() {
    std::unique_lock lock(mutex_);
    cv_.wait(lock, [this] { return available_ > 0; });
    --available_;
  }
  void release() {
    std::lock_guard lock(mutex_);
    ++available_;
    cv_.notify_one();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int available_;
};

Gate::Gate(std::unique_ptr<Backend> backend, PromptLibrary prompts,
           GateOptions options)
    : backend_(std::move(backend)),
      prompts_(std::move(prompts)),
      options_(std::move(options)),
      inflight_(std::make_shared<Inflight>(options_.max_inflight)) {
  if (!options_.cache_dir.empty() && backend_->cacheable()) {
    cache_ = std::make_unique<DiskCache>(options_.cache_dir);
  }
}

bool Gate::disabled() const { return backend_->id() == "disabled"; }

GateStats Gate::stats() const {
  std::lock_guard lock(stats_mutex_);
  return stats_;
}

std::string Gate::cache_key(const PromptSpec& spec,
                            const std::string& rendered) const {
  char temp[32];
  std::snprintf(temp, sizeof(temp), "%.6g", options_.temperature);
  std::string material = backend_->id();
  material += '\x1f';
  material += options_.model;
  material += '\x1f';
  material += temp;
  material += '\x1f';
  material += purpose_key(spec.purpose, spec.criterion);
  material += '\x1f';
  material += rendered;
  return fnv1a64_hex(material);
}

std::string Gate::cached_call(const PromptSpec& spec, const CallContext& call) {
  const std::string key = cache_key(spec, call.rendered);
  if (cache_) {
    if (auto hit = cache_->lookup(key)) {
      std::lock_guard lock(stats_mutex_);
      ++stats_.cache_hits;
      return *hit;
    }
  }
  std::string last_error;
  for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
    if (attempt > 0 && options_.backoff_ms > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(options_.backoff_ms << (attempt - 1)));
    }
    inflight_->acquire();
    try {
      std::string response = backend_->complete(call);
      inflight_->release();
      {
        std::lock_guard lock(stats_mutex_);
        ++stats_.backend_calls;
      }
      if (cache_) cache_->store(key, response);
      return response;
    } catch (const std::exception& e) {
      inflight_->release();
      last_error = e.what();
      {
        std::lock_guard lock(stats_mutex_);
        ++stats_.backend_calls;
      }
    }
  }
  throw GateError("backend failed after " +
                  std::to_string(options_.max_attempts) +
                  " attempts: " + last_error);
}

std::optional<int> Gate::parse_option_letter(std::string_view response,
                                             int option_count) {
  auto alnum = [](char c) {
    return is_ascii_alpha(c) || is_ascii_digit(c);
  };
  for (size_t i = 0; i < response.size(); ++i) {
    char c = response[i];
    bool left_ok = i == 0 || !alnum(response[i - 1]);
    bool right_ok = i + 1 >= response.size() || !alnum(response[i + 1]);
    if (!left_ok || !right_ok) continue;
    if (c >= 'A' && c < 'A' + option_count) return c - 'A';
    // Lowercase letters only count with an explicit marker ("b)", "b.").
    if (c >= 'a' && c < 'a' + option_count && i + 1 < response.size()) {
      char next = response[i + 1];
      if (next == ')' || next == '.' || next == ':') return c - 'a';
    }
  }
  return std::nullopt;
}

std::optional<bool> Gate::parse_yes_no(std::string_view response) {
  size_t i = 0;
  while (i < response.size() && !is_ascii_alpha(response[i])) ++i;
  std::string word;
  while (i < response.size() && is_ascii_alpha(response[i])) {
    word += static_cast<char>(std::tolower(response[i]));
    ++i;
  }
  if (word == "yes") return true;
  if (word == "no") return false;
  return std::nullopt;
}

std::optional<int> Gate::ask_answer(const Mcq& mcq) {
  {
    std::lock_guard lock(stats_mutex_);
    ++stats_.answer_rounds;
  }
  const int option_count = static_cast<int>(mcq.options.size());
  std::array<int, 5> votes{};
  int parsed = 0;
  for (int i = 0; i < PromptLibrary::kAnswerPromptCount; ++i) {
    PromptSpec spec = prompts_.answer_prompt(i);
    CallContext call;
    call.question_id = mcq.id;
    call.purpose = purpose_key(Purpose::kAnswer, std::nullopt);
    call.prompt_index = i;
    call.rendered = PromptLibrary::render(spec, mcq, "");
    std::string response = cached_call(spec, call);
    if (auto letter = parse_option_letter(response, option_count)) {
      ++votes[*letter];
      ++parsed;
    }
  }
  (void)parsed;
  for (int idx = 0; idx < option_count; ++idx) {
    if (votes[idx] >= 2) return idx;  // majority of three
  }
  return std::nullopt;  // ABSTAIN
}

bool Gate::verify(Criterion criterion, const Mcq& mcq,
                  const std::string& evidence) {
  {
    std::lock_guard lock(stats_mutex_);
    ++stats_.verify_calls;
  }
  PromptSpec spec = prompts_.verify_prompt(criterion);
  CallContext call;
  call.question_id = mcq.id;
  call.purpose = purpose_key(Purpose::kVerify, criterion);
  call.prompt_index = 0;
  call.rendered = PromptLibrary::render(spec, mcq, evidence);
  std::string response = cached_call(spec, call);
  auto parsed = parse_yes_no(response);
  if (!parsed) {
    // Conservative: an unparseable verdict never flags. Keep the raw
    // response visible for debugging.
    std::cerr << "[llmgate] unparseable verify response for " << mcq.id << "/"
              << criterion_name(criterion) << ": " << response << '\n';
    return false;
  }
  return *parsed;
}

}  // namespace mcqlint::llmgate
