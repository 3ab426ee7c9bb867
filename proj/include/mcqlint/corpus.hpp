// corpus.hpp
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
// Question data model plus dataset ingestion: line-delimited JSON for
// questions, flat CSV for gold labels. Datasets are immutable after
// construction and safe to share across threads.

#ifndef MCQLINT_CORPUS_HPP
#define MCQLINT_CORPUS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcqlint/criteria.hpp"

namespace mcqlint {

struct OptionEntry {
  std::string text;
  bool is_correct = false;

  friend bool operator==(const OptionEntry&, const OptionEntry&) = default;
};

struct Mcq {
  std::string id;
  std::string domain;
  std::string stem;
  std::vector<OptionEntry> options;  // 2..5 entries, exactly one correct
  int key = 0;                       // zero-based index of the correct option
  std::map<std::string, std::string> metadata;

  const std::string& correct_text() const { return options[key].text; }

  friend bool operator==(const Mcq&, const Mcq&) = default;
};

struct GoldLabels {
  std::string question_id;
  std::array<bool, kCriterionCount> flags{};

  int flaw_count() const;
  bool acceptable() const { return flaw_count() <= 1; }

  friend bool operator==(const GoldLabels&, const GoldLabels&) = default;
};

struct Dataset {
  std::vector<Mcq> questions;
  std::vector<GoldLabels> gold;  // empty = lint-only mode

  bool has_gold() const { return !gold.empty(); }
  const Mcq* find_question(std::string_view id) const;
  const GoldLabels* find_gold(std::string_view id) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// All ingestion failures derive from CorpusError; messages carry the
// file/line or row/column context.
struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : CorpusError {
  using CorpusError::CorpusError;
};
struct ValidationError : CorpusError {
  using CorpusError::CorpusError;
};
struct JoinError : CorpusError {
  using CorpusError::CorpusError;
};

// One question object per line; see README for the schema. Text fields are
// NFC-composed at parse time and option order is preserved exactly.
Dataset parse_jsonl(const std::string& path);
Dataset parse_jsonl_text(std::string_view text, std::string_view source_name);

// Canonical JSONL serialization; parse_jsonl_text(serialize_jsonl(d)) == d.
std::string serialize_jsonl(const Dataset& dataset);

// Header must name question_id plus the 19 criterion columns in canonical
// order; cells are 0 or 1.
std::vector<GoldLabels> parse_gold_csv(const std::string& path);
std::vector<GoldLabels> parse_gold_csv_text(std::string_view text,
                                            std::string_view source_name);
std::string serialize_gold_csv(const std::vector<GoldLabels>& gold);

// Attaches gold labels; every gold id must match a question.
Dataset join(Dataset dataset, std::vector<GoldLabels> gold);

// The exact CSV header line, also the canonical criterion order.
std::string gold_csv_header();

}  // namespace mcqlint

#endif  // MCQLINT_CORPUS_HPP
