// evalharness.hpp
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
// Scores predicted flag grids against gold labels: per-criterion
// confusion counts and F1, micro-averaged F1, exact match ratio, Hamming
// loss, flaw-count statistics, and the 2x2 acceptability matrix.

#ifndef MCQLINT_EVALHARNESS_HPP
#define MCQLINT_EVALHARNESS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/criteria.hpp"
#include "mcqlint/detectors.hpp"

namespace mcqlint::evalharness {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using LabelRow = std::array<bool, kCriterionCount>;

// One question's gold and predicted label rows plus grouping key.
struct LabeledRow {
  std::string question_id;
  std::string domain;
  LabelRow gold{};
  LabelRow predicted{};
};

struct CriterionStats {
  Criterion criterion = Criterion::kLongestOptionCorrect;
  long tp = 0, fp = 0, fn = 0, tn = 0;
  int n_gold = 0;  // gold-flagged count
  int n_pred = 0;  // predicted-flagged count

  // 2tp / (2tp + fp + fn); empty when the denominator is zero (no gold
  // positives and no predictions), rendered as "-".
  std::optional<double> f1() const;
  double accuracy() const;
};

struct AcceptabilityMatrix {
  // rows: gold acceptable / unacceptable; columns: predicted.
  std::array<std::array<long, 2>, 2> counts{};

  long total() const;
  double match_rate() const;  // trace / total
};

struct FlawCountStats {
  double mean_pred = 0.0, sd_pred = 0.0;
  double mean_gold = 0.0, sd_gold = 0.0;
  int max_pred = 0, max_gold = 0;
};

struct DomainStats {
  std::string domain;
  int n = 0;
  std::array<CriterionStats, kCriterionCount> per_criterion{};
  double micro_f1 = 0.0;
  long gold_total = 0;  // flags summed over the domain
  long pred_total = 0;
};

struct EvalSummary {
  int n_questions = 0;
  std::array<CriterionStats, kCriterionCount> per_criterion{};
  double overall_accuracy = 0.0;
  double exact_match_ratio = 0.0;
  double hamming_loss = 0.0;
  double micro_f1 = 0.0;
  FlawCountStats flaw_counts;
  AcceptabilityMatrix acceptability;
  std::vector<DomainStats> domains;  // sorted by domain name
};

// Core scoring over label rows; the dataset/report adapters below feed it.
EvalSummary evaluate_rows(const std::vector<LabeledRow>& rows);

// Pairs every question with its gold labels and report; throws EvalError
// listing the ids with missing coverage.
EvalSummary evaluate(const Dataset& dataset,
                     const std::vector<detectors::FlawReport>& reports);

std::vector<LabeledRow> make_rows(const Dataset& dataset,
                                  const std::vector<detectors::FlawReport>& reports);

AcceptabilityMatrix acceptability_matrix(const std::vector<LabeledRow>& rows);
FlawCountStats flaw_count_stats(const std::vector<LabeledRow>& rows);

// Sample standard deviation (n-1 denominator; 0 when n < 2).
double sample_sd(const std::vector<int>& values);

}  // namespace mcqlint::evalharness

#endif  // MCQLINT_EVALHARNESS_HPP
