// evalharness.cpp
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

#include "mcqlint/evalharness.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mcqlint::evalharness {

std::optional<double> CriterionStats::f1() const {
  const double denom = 2.0 * tp + fp + fn;
  if (denom <= 0.0) return std::nullopt;  // no gold positives, no predictions
  return 2.0 * tp / denom;
}

double CriterionStats::accuracy() const {
  const long total = tp + fp + fn + tn;
  return total == 0 ? 0.0 : static_cast<double>(tp + tn) / total;
}

long AcceptabilityMatrix::total() const {
  return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

double AcceptabilityMatrix::match_rate() const {
  const long t = total();
  return t == 0 ? 0.0 : static_cast<double>(counts[0][0] + counts[1][1]) / t;
}

double sample_sd(const std::vector<int>& values) {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (int v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (int v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

namespace {

int row_count(const LabelRow& row) {
  int n = 0;
  for (bool b : row) n += b ? 1 : 0;
  return n;
}

void accumulate(std::array<CriterionStats, kCriterionCount>& stats,
                const LabeledRow& row) {
  for (int c = 0; c < kCriterionCount; ++c) {
    const bool gold = row.gold[c];
    const bool pred = row.predicted[c];
    auto& s = stats[c];
    if (gold && pred) ++s.tp;
    if (!gold && pred) ++s.fp;
    if (gold && !pred) ++s.fn;
    if (!gold && !pred) ++s.tn;
    s.n_gold += gold ? 1 : 0;
    s.n_pred += pred ? 1 : 0;
  }
}

double micro_f1_of(const std::array<CriterionStats, kCriterionCount>& stats) {
  long tp = 0, fp = 0, fn = 0;
  for (const auto& s : stats) {
    tp += s.tp;
    fp += s.fp;
    fn += s.fn;
  }
  const double denom = 2.0 * tp + fp + fn;
  return denom <= 0.0 ? 1.0 : 2.0 * tp / denom;
}

}  // namespace

AcceptabilityMatrix acceptability_matrix(const std::vector<LabeledRow>& rows) {
  AcceptabilityMatrix m;
  for (const auto& row : rows) {
    const int gold_band = row_count(row.gold) <= 1 ? 0 : 1;
    const int pred_band = row_count(row.predicted) <= 1 ? 0 : 1;
    ++m.counts[gold_band][pred_band];
  }
  return m;
}

FlawCountStats flaw_count_stats(const std::vector<LabeledRow>& rows) {
  FlawCountStats out;
  std::vector<int> pred, gold;
  for (const auto& row : rows) {
    pred.push_back(row_count(row.predicted));
    gold.push_back(row_count(row.gold));
  }
  auto mean = [](const std::vector<int>& v) {
    if (v.empty()) return 0.0;
    double m = 0;
    for (int x : v) m += x;
    return m / static_cast<double>(v.size());
  };
  out.mean_pred = mean(pred);
  out.mean_gold = mean(gold);
  out.sd_pred = sample_sd(pred);
  out.sd_gold = sample_sd(gold);
  out.max_pred = pred.empty() ? 0 : *std::max_element(pred.begin(), pred.end());
  out.max_gold = gold.empty() ? 0 : *std::max_element(gold.begin(), gold.end());
  return out;
}

EvalSummary evaluate_rows(const std::vector<LabeledRow>& rows) {
  if (rows.empty()) throw EvalError("no rows to evaluate");

  EvalSummary summary;
  summary.n_questions = static_cast<int>(rows.size());
  for (int c = 0; c < kCriterionCount; ++c) {
    summary.per_criterion[c].criterion = static_cast<Criterion>(c);
  }

  long cells = 0, matches = 0, exact = 0;
  std::map<std::string, std::vector<const LabeledRow*>> by_domain;
  for (const auto& row : rows) {
    accumulate(summary.per_criterion, row);
    bool full_match = true;
    for (int c = 0; c < kCriterionCount; ++c) {
      ++cells;
      if (row.gold[c] == row.predicted[c]) {
        ++matches;
      } else {
        full_match = false;
      }
    }
    exact += full_match ? 1 : 0;
    by_domain[row.domain].push_back(&row);
  }

  summary.overall_accuracy = static_cast<double>(matches) / cells;
  summary.hamming_loss = static_cast<double>(cells - matches) / cells;
  summary.exact_match_ratio = static_cast<double>(exact) / rows.size();
  summary.micro_f1 = micro_f1_of(summary.per_criterion);
  summary.flaw_counts = flaw_count_stats(rows);
  summary.acceptability = acceptability_matrix(rows);

  for (const auto& [domain, domain_rows] : by_domain) {
    DomainStats ds;
    ds.domain = domain;
    ds.n = static_cast<int>(domain_rows.size());
    for (int c = 0; c < kCriterionCount; ++c) {
      ds.per_criterion[c].criterion = static_cast<Criterion>(c);
    }
    for (const auto* row : domain_rows) {
      accumulate(ds.per_criterion, *row);
    }
    ds.micro_f1 = micro_f1_of(ds.per_criterion);
    for (const auto& s : ds.per_criterion) {
      ds.gold_total += s.n_gold;
      ds.pred_total += s.n_pred;
    }
    summary.domains.push_back(std::move(ds));
  }
  return summary;
}

std::vector<LabeledRow> make_rows(
    const Dataset& dataset, const std::vector<detectors::FlawReport>& reports) {
  std::map<std::string, const detectors::FlawReport*> by_id;
  for (const auto& r : reports) by_id[r.question_id] = &r;

  std::string missing_gold, missing_report;
  std::vector<LabeledRow> rows;
  for (const auto& q : dataset.questions) {
    const GoldLabels* gold = dataset.find_gold(q.id);
    auto rep = by_id.find(q.id);
    if (gold == nullptr) missing_gold += " " + q.id;
    if (rep == by_id.end()) missing_report += " " + q.id;
    if (gold == nullptr || rep == by_id.end()) continue;
    LabeledRow row;
    row.question_id = q.id;
    row.domain = q.domain;
    row.gold = gold->flags;
    for (int c = 0; c < kCriterionCount; ++c) {
      row.predicted[c] = rep->second->findings[c].flagged;
    }
    rows.push_back(std::move(row));
  }
  if (!missing_gold.empty() || !missing_report.empty()) {
    std::string msg = "evaluation coverage gaps:";
    if (!missing_gold.empty()) msg += " no gold for" + missing_gold + ";";
    if (!missing_report.empty()) msg += " no report for" + missing_report;
    throw EvalError(msg);
  }
  return rows;
}

EvalSummary evaluate(const Dataset& dataset,
                     const std::vector<detectors::FlawReport>& reports) {
  return evaluate_rows(make_rows(dataset, reports));
}

}  // namespace mcqlint::evalharness
