// test_llmgate.cpp
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "mcqlint/httplib_config.hpp"
#include <json.hpp>

#include "mcqlint/llmgate.hpp"
#include "support/testenv.hpp"

using namespace mcqlint;
using namespace mcqlint::llmgate;
using testenv::chemistry_sample;
using testenv::make_mcq;

namespace {

PromptLibrary prompts() { return PromptLibrary::load(testenv::paths().prompt_dir); }

GateOptions fast_options() {
  GateOptions o;
  o.backoff_ms = 0;
  return o;
}

std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("mcqlint_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("option letter parsing") {
  CHECK(Gate::parse_option_letter("A", 4) == 0);
  CHECK(Gate::parse_option_letter("The answer is (B).", 4) == 1);
  CHECK(Gate::parse_option_letter("I would pick option C here", 4) == 2);
  CHECK(Gate::parse_option_letter("b) because pressure rises", 4) == 1);
  CHECK(Gate::parse_option_letter("Maybe", 4) == std::nullopt);
  CHECK(Gate::parse_option_letter("", 4) == std::nullopt);
  // Letters beyond the option count never parse.
  CHECK(Gate::parse_option_letter("E", 4) == std::nullopt);
  // Letters inside words do not count.
  CHECK(Gate::parse_option_letter("An apple", 4) == std::nullopt);
}

TEST_CASE("yes/no parsing is strict on the leading token") {
  CHECK(Gate::parse_yes_no("Yes") == true);
  CHECK(Gate::parse_yes_no("  yes, clearly") == true);
  CHECK(Gate::parse_yes_no("No \xE2\x80\x94 the term is ordinary") == false);
  CHECK(Gate::parse_yes_no("Maybe") == std::nullopt);
  CHECK(Gate::parse_yes_no("The answer is yes") == std::nullopt);
}

TEST_CASE("prompt rendering labels options A..E in order") {
  auto mcq = chemistry_sample();
  PromptSpec spec = prompts().answer_prompt(0);
  std::string rendered = PromptLibrary::render(spec, mcq, "");
  CHECK(rendered.find("What is protons?") != std::string::npos);
  auto a = rendered.find("A) positively charged particles");
  auto b = rendered.find("B) sum the number of protons and neutrons");
  auto c = rendered.find("C) negatively charged subatomic particles");
  auto d = rendered.find("D) he discovered the charge of electron");
  REQUIRE(a != std::string::npos);
  REQUIRE(b != std::string::npos);
  REQUIRE(c != std::string::npos);
  REQUIRE(d != std::string::npos);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
}

TEST_CASE("stub majority vote and abstain") {
  auto mcq = chemistry_sample();

  SUBCASE("unanimous fixture answer") {
    auto stub = std::make_unique<StubBackend>();
    stub->add_fixture("chem_fig1", "answer", "A");
    Gate gate(std::move(stub), prompts(), fast_options());
    CHECK(gate.ask_answer(mcq) == 0);
  }
  SUBCASE("majority two of three") {
    auto stub = std::make_unique<StubBackend>();
    stub->add_fixture("chem_fig1", "answer", "The answer is (B).", 0);
    stub->add_fixture("chem_fig1", "answer", "B", 1);
    stub->add_fixture("chem_fig1", "answer", "C", 2);
    Gate gate(std::move(stub), prompts(), fast_options());
    CHECK(gate.ask_answer(mcq) == 1);
  }
  SUBCASE("three different letters abstains") {
    auto stub = std::make_unique<StubBackend>();
    stub->add_fixture("chem_fig1", "answer", "A", 0);
    stub->add_fixture("chem_fig1", "answer", "B", 1);
    stub->add_fixture("chem_fig1", "answer", "C", 2);
    Gate gate(std::move(stub), prompts(), fast_options());
    CHECK(gate.ask_answer(mcq) == std::nullopt);
  }
  SUBCASE("prose with no letter abstains") {
    auto stub = std::make_unique<StubBackend>();
    stub->add_fixture("chem_fig1", "answer", "it depends on the context");
    Gate gate(std::move(stub), prompts(), fast_options());
    CHECK(gate.ask_answer(mcq) == std::nullopt);
  }
}

TEST_CASE("stub verify verdicts") {
  auto mcq = chemistry_sample();
  auto stub = std::make_unique<StubBackend>();
  stub->add_fixture("chem_fig1", "verify:absolute_terms", "Yes");
  stub->add_fixture("chem_fig1", "verify:more_than_one_correct",
                    "No \xE2\x80\x94 the term is used plainly");
  stub->add_fixture("chem_fig1", "verify:complex_k_type", "Maybe");
  Gate gate(std::move(stub), prompts(), fast_options());
  CHECK(gate.verify(Criterion::kAbsoluteTerms, mcq, "evidence"));
  CHECK_FALSE(gate.verify(Criterion::kMoreThanOneCorrect, mcq, "evidence"));
  // Unparseable verdicts are conservative.
  CHECK_FALSE(gate.verify(Criterion::kComplexKType, mcq, "evidence"));
}

TEST_CASE("stub fixture file and defaults") {
  auto dir = temp_dir("stubfile");
  auto path = (dir / "fixtures.jsonl").string();
  {
    std::ofstream out(path);
    out << R"({"question_id":"chem_fig1","purpose":"answer","response":"A"})"
        << "\n";
    out << "\n";  // blank lines are fine
    out << R"({"question_id":"chem_fig1","purpose":"verify:convergence_cues","response":"Yes"})"
        << "\n";
  }
  auto stub = StubBackend::from_file(path);
  Gate gate(std::move(stub), prompts(), fast_options());
  auto mcq = chemistry_sample();
  CHECK(gate.ask_answer(mcq) == 0);
  CHECK(gate.verify(Criterion::kConvergenceCues, mcq, ""));
  // Unmatched lookups use the defaults: "No" for verify.
  CHECK_FALSE(gate.verify(Criterion::kAbsoluteTerms, mcq, ""));
}

TEST_CASE("scripted stub failure surfaces as GateError after retries") {
  auto stub = std::make_unique<StubBackend>();
  stub->add_fixture("chem_fig1", "verify:absolute_terms", "!ERROR");
  auto* raw = stub.get();
  Gate gate(std::move(stub), prompts(), fast_options());
  auto mcq = chemistry_sample();
  CHECK_THROWS_AS(gate.verify(Criterion::kAbsoluteTerms, mcq, ""),
                  GateError);
  CHECK(raw->calls() == 3);  // bounded retries
}

TEST_CASE("disabled backend refuses without error") {
  Gate gate(std::make_unique<DisabledBackend>(), prompts(), fast_options());
  CHECK(gate.disabled());
  auto mcq = chemistry_sample();
  CHECK(gate.ask_answer(mcq) == std::nullopt);
  CHECK_FALSE(gate.verify(Criterion::kAbsoluteTerms, mcq, ""));
}

TEST_CASE("cache keys are stable across re-rendering") {
  Gate gate(std::make_unique<StubBackend>(), prompts(), fast_options());
  auto mcq = chemistry_sample();
  PromptSpec spec = prompts().answer_prompt(1);
  std::string key1 = gate.cache_key(spec, PromptLibrary::render(spec, mcq, ""));
  std::string key2 = gate.cache_key(spec, PromptLibrary::render(spec, mcq, ""));
  CHECK(key1 == key2);
  CHECK(key1.size() == 16);
  PromptSpec other = prompts().answer_prompt(2);
  CHECK(gate.cache_key(other, PromptLibrary::render(other, mcq, "")) != key1);
}

TEST_CASE("disk cache ignores corrupt lines and rewrites them") {
  auto dir = temp_dir("cache");
  {
    std::ofstream out(dir / "llm_cache.jsonl");
    out << R"({"key":"k1","response":"hello"})" << "\n";
    out << "{corrupt line!!!" << "\n";
    out << R"({"key":"k2","response":"world"})" << "\n";
  }
  DiskCache cache(dir.string());
  CHECK(cache.entry_count() == 2);
  CHECK(cache.lookup("k1") == "hello");
  CHECK(cache.lookup("k-corrupt") == std::nullopt);
  cache.store("k3", "again");
  CHECK(cache.entry_count() == 3);
  DiskCache reloaded(dir.string());
  CHECK(reloaded.lookup("k3") == "again");
  reloaded.clear();
  CHECK(reloaded.entry_count() == 0);
  CHECK(DiskCache(dir.string()).entry_count() == 0);
}

TEST_CASE("http backend round-trip, retry, and cache write-through") {
  httplib::Server server;
  std::atomic<int> hits{0};
  std::atomic<int> failures_left{1};
  std::mutex seen_mutex;
  std::string seen_model;
  server.Post("/v1/chat/completions",
              [&](const httplib::Request& req, httplib::Response& res) {
                hits.fetch_add(1);
                if (failures_left.fetch_sub(1) > 0) {
                  res.status = 500;
                  res.set_content("overloaded", "text/plain");
                  return;
                }
                auto body = nlohmann::json::parse(req.body);
                {
                  std::lock_guard lock(seen_mutex);
                  seen_model = body.value("model", "");
                }
                nlohmann::json message;
                message["role"] = "assistant";
                message["content"] = "B";
                nlohmann::json choice;
                choice["message"] = message;
                nlohmann::json reply;
                reply["choices"] = nlohmann::json::array({choice});
                res.set_content(reply.dump(), "application/json");
              });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  auto dir = temp_dir("httpcache");
  HttpConfig config;
  config.endpoint =
      "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
  config.model = "test-model";
  GateOptions options = fast_options();
  options.cache_dir = dir.string();
  options.model = config.model;
  Gate gate(std::make_unique<HttpBackend>(config), prompts(), options);

  auto mcq = make_mcq("http_q", "unit", "Pick the letter?", {"x", "y"}, 1);
  // First call: one 500 then success (retry absorbed it).
  CHECK(gate.ask_answer(mcq) == 1);
  const int after_first = hits.load();
  CHECK(after_first == 4);  // 3 prompts + 1 retried failure

  // Identical round is served fully from the cache.
  CHECK(gate.ask_answer(mcq) == 1);
  CHECK(hits.load() == after_first);
  CHECK(gate.stats().cache_hits == 3);
  CHECK(DiskCache(dir.string()).entry_count() == 3);
  {
    std::lock_guard lock(seen_mutex);
    CHECK(seen_model == "test-model");
  }

  server.stop();
  server_thread.join();
}
