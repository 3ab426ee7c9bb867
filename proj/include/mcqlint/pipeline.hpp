// pipeline.hpp
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
// Dataset-level drivers. Questions are independent, so the hot loop is a
// plain parallel-for over the dataset; the serial path is kept as the
// reference implementation and the tests assert both produce identical
// reports. Results are ordered by input position either way.

#ifndef MCQLINT_PIPELINE_HPP
#define MCQLINT_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/detectors.hpp"
#include "mcqlint/lingmetrics.hpp"

namespace mcqlint::pipeline {

struct LintOptions {
  int jobs = 0;  // 0 = hardware default, 1 = serial reference path
};

// Serial reference implementation.
std::vector<detectors::FlawReport> lint_serial(const Dataset& dataset,
                                               const detectors::DetectorEnv& env);

// OpenMP path; falls back to serial when built without OpenMP or jobs==1.
std::vector<detectors::FlawReport> lint_parallel(const Dataset& dataset,
                                                 const detectors::DetectorEnv& env,
                                                 int jobs);

std::vector<detectors::FlawReport> lint_dataset(const Dataset& dataset,
                                                const detectors::DetectorEnv& env,
                                                const LintOptions& options = {});

struct MetricsOptions {
  lingmetrics::MetricScope scope = lingmetrics::MetricScope::kStemAndOptions;
  const lingmetrics::PerplexityScorer* scorer = nullptr;  // required
  llmgate::Gate* gate = nullptr;  // null = answerability column absent
  int jobs = 0;
};

std::vector<lingmetrics::LinguisticMetrics> metrics_serial(
    const Dataset& dataset, const TextKit& kit, const MetricsOptions& options);
std::vector<lingmetrics::LinguisticMetrics> metrics_parallel(
    const Dataset& dataset, const TextKit& kit, const MetricsOptions& options);
std::vector<lingmetrics::LinguisticMetrics> metrics_dataset(
    const Dataset& dataset, const TextKit& kit, const MetricsOptions& options);

// Flaw counts per question id, from detector reports.
std::map<std::string, int> flaw_counts_from_reports(
    const std::vector<detectors::FlawReport>& reports);
// ...or from gold labels.
std::map<std::string, int> flaw_counts_from_gold(const Dataset& dataset);

}  // namespace mcqlint::pipeline

#endif  // MCQLINT_PIPELINE_HPP
