// pipeline.cpp
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

#include "mcqlint/pipeline.hpp"

#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mcqlint::pipeline {

using detectors::DetectorEnv;
using detectors::FlawReport;
using lingmetrics::LinguisticMetrics;

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::vector<FlawReport> lint_serial(const Dataset& dataset,
                                    const DetectorEnv& env) {
  std::vector<FlawReport> reports(dataset.questions.size());
  for (size_t i = 0; i < dataset.questions.size(); ++i) {
    reports[i] = detectors::run_all(dataset.questions[i], env);
  }
  return reports;
}

std::vector<FlawReport> lint_parallel(const Dataset& dataset,
                                      const DetectorEnv& env, int jobs) {
  const int n = static_cast<int>(dataset.questions.size());
  std::vector<FlawReport> reports(dataset.questions.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (int i = 0; i < n; ++i) {
    reports[i] = detectors::run_all(dataset.questions[i], env);
  }
#else
  (void)jobs;
  for (int i = 0; i < n; ++i) {
    reports[i] = detectors::run_all(dataset.questions[i], env);
  }
#endif
  return reports;
}

std::vector<FlawReport> lint_dataset(const Dataset& dataset,
                                     const DetectorEnv& env,
                                     const LintOptions& options) {
  if (options.jobs == 1) return lint_serial(dataset, env);
  return lint_parallel(dataset, env, options.jobs);
}

namespace {

LinguisticMetrics metrics_for(const Mcq& mcq, const TextKit& kit,
                              const MetricsOptions& options) {
  LinguisticMetrics m;
  m.diversity = lingmetrics::distinct3(mcq, kit, options.scope);
  m.grammar_errors = lingmetrics::grammar_errors(mcq, kit, options.scope);
  m.bloom_level = lingmetrics::bloom_level(mcq, kit);
  m.perplexity = options.scorer->perplexity(mcq, kit, options.scope);
  if (options.gate != nullptr && !options.gate->disabled()) {
    m.answerability = lingmetrics::answerability(mcq, *options.gate);
  }
  return m;
}

}  // namespace

std::vector<LinguisticMetrics> metrics_serial(const Dataset& dataset,
                                              const TextKit& kit,
                                              const MetricsOptions& options) {
  std::vector<LinguisticMetrics> out(dataset.questions.size());
  for (size_t i = 0; i < dataset.questions.size(); ++i) {
    out[i] = metrics_for(dataset.questions[i], kit, options);
  }
  return out;
}

std::vector<LinguisticMetrics> metrics_parallel(const Dataset& dataset,
                                                const TextKit& kit,
                                                const MetricsOptions& options) {
  const int n = static_cast<int>(dataset.questions.size());
  std::vector<LinguisticMetrics> out(dataset.questions.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(options.jobs))
  for (int i = 0; i < n; ++i) {
    out[i] = metrics_for(dataset.questions[i], kit, options);
  }
#else
  for (int i = 0; i < n; ++i) {
    out[i] = metrics_for(dataset.questions[i], kit, options);
  }
#endif
  return out;
}

std::vector<LinguisticMetrics> metrics_dataset(const Dataset& dataset,
                                               const TextKit& kit,
                                               const MetricsOptions& options) {
  if (options.scorer == nullptr) {
    throw DataError("perplexity scorer not configured");
  }
  if (options.jobs == 1) return metrics_serial(dataset, kit, options);
  return metrics_parallel(dataset, kit, options);
}

std::map<std::string, int> flaw_counts_from_reports(
    const std::vector<FlawReport>& reports) {
  std::map<std::string, int> out;
  for (const auto& r : reports) out[r.question_id] = r.flaw_count();
  return out;
}

std::map<std::string, int> flaw_counts_from_gold(const Dataset& dataset) {
  std::map<std::string, int> out;
  for (const auto& g : dataset.gold) out[g.question_id] = g.flaw_count();
  return out;
}

}  // namespace mcqlint::pipeline
