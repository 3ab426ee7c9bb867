// report_io.hpp
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
// Report writers and readers. All artifacts are deterministic: fixed key
// order, fixed float formatting, and no timestamps unless explicitly
// requested. Every report embeds the schema version and the detector
// config digest that produced it.

#ifndef MCQLINT_REPORT_IO_HPP
#define MCQLINT_REPORT_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/detectors.hpp"
#include "mcqlint/evalharness.hpp"
#include "mcqlint/lingmetrics.hpp"

namespace mcqlint::report_io {

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv, kTable };
std::optional<Format> format_from_name(std::string_view name);

struct WriterOptions {
  Format format = Format::kJson;
  bool timestamps = false;  // opt-in; keeps artifacts byte-reproducible
};

std::string lint_report_text(const Dataset& dataset,
                             const std::vector<detectors::FlawReport>& reports,
                             const detectors::DetectorConfig& cfg,
                             const WriterOptions& options);

std::string metrics_report_text(
    const Dataset& dataset,
    const std::vector<lingmetrics::LinguisticMetrics>& metrics,
    const std::vector<lingmetrics::GroupSummary>& groups,
    const detectors::DetectorConfig& cfg, const WriterOptions& options);

std::string eval_report_text(const evalharness::EvalSummary& summary,
                             const detectors::DetectorConfig& cfg,
                             const WriterOptions& options);

// Reloads the flag grid of a saved JSON lint report (id -> 19 flags), so
// evaluate runs never re-incur gate traffic.
std::map<std::string, evalharness::LabelRow> read_lint_flags(
    const std::string& path);

void write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace mcqlint::report_io

#endif  // MCQLINT_REPORT_IO_HPP
