// report_io.cpp
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

#include "mcqlint/report_io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcqlint::report_io {

using json = nlohmann::ordered_json;
using detectors::EvidenceLocation;
using detectors::FindingStatus;

namespace {

std::string fixed(double v, int places = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json finding_json(const detectors::FlawFinding& f) {
  json out;
  out["criterion"] = std::string(criterion_name(f.criterion));
  out["flagged"] = f.flagged;
  out["tier"] = std::string(tier_name(f.tier));
  out["llm_consulted"] = f.llm_consulted;
  out["status"] =
      f.status == FindingStatus::kOk ? "ok" : "unavailable";
  if (!f.note.empty()) out["note"] = f.note;
  json evidence = json::array();
  for (const auto& ev : f.evidence) {
    json e;
    e["location"] = ev.where == EvidenceLocation::kStem
                        ? "stem"
                        : "option:" + std::to_string(ev.option_index);
    e["begin"] = ev.begin;
    e["end"] = ev.end;
    if (!ev.note.empty()) e["note"] = ev.note;
    evidence.push_back(std::move(e));
  }
  out["evidence"] = std::move(evidence);
  return out;
}

json header_json(const char* kind, const detectors::DetectorConfig& cfg,
                 const WriterOptions& options) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["config_digest"] = cfg.digest();
  doc["detector_config"] = json::parse(cfg.to_json());
  if (options.timestamps) doc["generated_at"] = timestamp_now();
  return doc;
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "table") return Format::kTable;
  return std::nullopt;
}

// --- lint ---

std::string lint_report_text(const Dataset& dataset,
                             const std::vector<detectors::FlawReport>& reports,
                             const detectors::DetectorConfig& cfg,
                             const WriterOptions& options) {
  int acceptable = 0, unavailable = 0;
  std::map<int, int> histogram;
  for (const auto& r : reports) {
    acceptable += r.acceptable() ? 1 : 0;
    unavailable += r.any_unavailable() ? 1 : 0;
    ++histogram[r.flaw_count()];
  }

  if (options.format == Format::kJson) {
    json doc = header_json("lint", cfg, options);
    json summary;
    summary["questions"] = reports.size();
    summary["acceptable"] = acceptable;
    summary["unacceptable"] = reports.size() - acceptable;
    summary["questions_with_unavailable_findings"] = unavailable;
    json hist;
    for (const auto& [count, n] : histogram) {
      hist[std::to_string(count)] = n;
    }
    summary["flaw_histogram"] = std::move(hist);
    doc["summary"] = std::move(summary);

    json questions = json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      json q;
      q["id"] = r.question_id;
      q["domain"] = i < dataset.questions.size() ? dataset.questions[i].domain
                                                 : std::string();
      q["flaw_count"] = r.flaw_count();
      q["acceptable"] = r.acceptable();
      json flags = json::array();
      for (const auto& f : r.findings) {
        if (f.flagged) flags.push_back(std::string(criterion_name(f.criterion)));
      }
      q["flags"] = std::move(flags);
      json findings = json::array();
      for (const auto& f : r.findings) findings.push_back(finding_json(f));
      q["findings"] = std::move(findings);
      questions.push_back(std::move(q));
    }
    doc["questions"] = std::move(questions);
    return doc.dump(2) + "\n";
  }

  if (options.format == Format::kCsv) {
    std::string out = "question_id,domain,flaw_count,acceptable";
    for (auto c : all_criteria()) {
      out += ',';
      out += std::string(criterion_name(c));
    }
    out += '\n';
    for (size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out += r.question_id;
      out += ',';
      out += i < dataset.questions.size() ? dataset.questions[i].domain : "";
      out += ',' + std::to_string(r.flaw_count());
      out += r.acceptable() ? ",1" : ",0";
      for (const auto& f : r.findings) out += f.flagged ? ",1" : ",0";
      out += '\n';
    }
    return out;
  }

  // Table format: summary block plus one line per question.
  std::ostringstream out;
  out << "questions: " << reports.size() << "  acceptable: " << acceptable
      << "  unacceptable: " << reports.size() - acceptable << '\n';
  out << "flaw-count histogram:";
  for (const auto& [count, n] : histogram) {
    out << "  " << count << ":" << n;
  }
  out << '\n' << '\n';
  for (const auto& r : reports) {
    out << r.question_id << "  flaws=" << r.flaw_count()
        << (r.acceptable() ? "  acceptable" : "  unacceptable");
    bool first = true;
    for (const auto& f : r.findings) {
      if (!f.flagged) continue;
      out << (first ? "  [" : ", ") << criterion_name(f.criterion);
      first = false;
    }
    if (!first) out << "]";
    if (r.any_unavailable()) out << "  (some findings unavailable)";
    out << '\n';
  }
  return out.str();
}

// --- metrics ---

std::string metrics_report_text(
    const Dataset& dataset,
    const std::vector<lingmetrics::LinguisticMetrics>& metrics,
    const std::vector<lingmetrics::GroupSummary>& groups,
    const detectors::DetectorConfig& cfg, const WriterOptions& options) {
  if (options.format == Format::kJson) {
    json doc = header_json("metrics", cfg, options);
    json questions = json::array();
    for (size_t i = 0; i < metrics.size(); ++i) {
      const auto& m = metrics[i];
      json q;
      q["id"] = dataset.questions[i].id;
      q["domain"] = dataset.questions[i].domain;
      q["perplexity"] = m.perplexity;
      q["diversity"] = m.diversity;
      q["grammar_errors"] = m.grammar_errors;
      q["bloom_level"] = m.bloom_level;
      if (m.answerability) {
        q["answerability"] = *m.answerability;
      } else {
        q["answerability"] = nullptr;
      }
      questions.push_back(std::move(q));
    }
    doc["questions"] = std::move(questions);
    json gs = json::array();
    for (const auto& g : groups) {
      json row;
      row["domain"] = g.domain;
      row["iwf_band"] = g.iwf_band;
      row["n"] = g.n;
      row["perplexity"] = g.perplexity;
      row["diversity"] = g.diversity;
      row["grammatical_error"] = g.grammar_errors;
      row["cognitive_complexity"] = g.bloom_level;
      if (g.answerability) {
        row["answerability"] = *g.answerability;
      } else {
        row["answerability"] = nullptr;
      }
      gs.push_back(std::move(row));
    }
    doc["groups"] = std::move(gs);
    return doc.dump(2) + "\n";
  }

  if (options.format == Format::kCsv) {
    std::string out =
        "question_id,domain,perplexity,diversity,grammar_errors,bloom_level,"
        "answerability\n";
    for (size_t i = 0; i < metrics.size(); ++i) {
      const auto& m = metrics[i];
      out += dataset.questions[i].id + ',' + dataset.questions[i].domain;
      out += ',' + fixed(m.perplexity);
      out += ',' + fixed(m.diversity);
      out += ',' + std::to_string(m.grammar_errors);
      out += ',' + std::to_string(m.bloom_level);
      out += ',';
      out += m.answerability ? std::to_string(*m.answerability) : "-";
      out += '\n';
    }
    out += '\n';
    out +=
        "Domain,IWF band,N,Perplexity,Diversity,GrammaticalError,"
        "CognitiveComplexity,Answerability\n";
    for (const auto& g : groups) {
      out += g.domain + ',' + g.iwf_band + ',' + std::to_string(g.n);
      out += ',' + fixed(g.perplexity, 2);
      out += ',' + fixed(g.diversity, 3);
      out += ',' + fixed(g.grammar_errors, 3);
      out += ',' + fixed(g.bloom_level, 3);
      out += ',';
      out += g.answerability ? fixed(*g.answerability, 3) : "-";
      out += '\n';
    }
    return out;
  }

  std::ostringstream out;
  out << "per-question metrics\n";
  for (size_t i = 0; i < metrics.size(); ++i) {
    const auto& m = metrics[i];
    out << "  " << dataset.questions[i].id << "  ppl=" << fixed(m.perplexity, 2)
        << "  div=" << fixed(m.diversity, 3) << "  gram=" << m.grammar_errors
        << "  bloom=" << m.bloom_level << "  ans="
        << (m.answerability ? std::to_string(*m.answerability) : "-") << '\n';
  }
  out << "\ngroup summaries (domain / IWF band)\n";
  for (const auto& g : groups) {
    out << "  " << g.domain << " " << g.iwf_band << "  n=" << g.n
        << "  ppl=" << fixed(g.perplexity, 2) << "  div=" << fixed(g.diversity, 3)
        << "  gram=" << fixed(g.grammar_errors, 3)
        << "  bloom=" << fixed(g.bloom_level, 3) << "  ans="
        << (g.answerability ? fixed(*g.answerability, 3) : "-") << '\n';
  }
  return out.str();
}

// --- evaluate ---

std::string eval_report_text(const evalharness::EvalSummary& summary,
                             const detectors::DetectorConfig& cfg,
                             const WriterOptions& options) {
  if (options.format == Format::kJson) {
    json doc = header_json("evaluate", cfg, options);
    doc["n_questions"] = summary.n_questions;
    doc["overall_accuracy"] = summary.overall_accuracy;
    doc["exact_match_ratio"] = summary.exact_match_ratio;
    doc["hamming_loss"] = summary.hamming_loss;
    doc["micro_f1"] = summary.micro_f1;
    json fc;
    fc["mean_pred"] = summary.flaw_counts.mean_pred;
    fc["sd_pred"] = summary.flaw_counts.sd_pred;
    fc["mean_gold"] = summary.flaw_counts.mean_gold;
    fc["sd_gold"] = summary.flaw_counts.sd_gold;
    fc["max_pred"] = summary.flaw_counts.max_pred;
    fc["max_gold"] = summary.flaw_counts.max_gold;
    doc["flaw_counts"] = std::move(fc);
    json acc;
    acc["gold_acceptable_pred_acceptable"] = summary.acceptability.counts[0][0];
    acc["gold_acceptable_pred_unacceptable"] = summary.acceptability.counts[0][1];
    acc["gold_unacceptable_pred_acceptable"] = summary.acceptability.counts[1][0];
    acc["gold_unacceptable_pred_unacceptable"] =
        summary.acceptability.counts[1][1];
    acc["match_rate"] = summary.acceptability.match_rate();
    doc["acceptability"] = std::move(acc);

    json crits = json::array();
    for (const auto& s : summary.per_criterion) {
      json c;
      c["criterion"] = std::string(criterion_name(s.criterion));
      c["tp"] = s.tp;
      c["fp"] = s.fp;
      c["fn"] = s.fn;
      c["tn"] = s.tn;
      c["n_gold"] = s.n_gold;
      c["n_pred"] = s.n_pred;
      if (auto f1 = s.f1()) {
        c["f1"] = *f1;
      } else {
        c["f1"] = nullptr;
      }
      crits.push_back(std::move(c));
    }
    doc["per_criterion"] = std::move(crits);

    json domains = json::array();
    for (const auto& d : summary.domains) {
      json dj;
      dj["domain"] = d.domain;
      dj["n"] = d.n;
      dj["micro_f1"] = d.micro_f1;
      dj["gold_total"] = d.gold_total;
      dj["pred_total"] = d.pred_total;
      json per = json::array();
      for (const auto& s : d.per_criterion) {
        json c;
        c["criterion"] = std::string(criterion_name(s.criterion));
        c["n_gold"] = s.n_gold;
        c["n_pred"] = s.n_pred;
        if (auto f1 = s.f1()) {
          c["f1"] = *f1;
        } else {
          c["f1"] = nullptr;
        }
        per.push_back(std::move(c));
      }
      dj["per_criterion"] = std::move(per);
      domains.push_back(std::move(dj));
    }
    doc["domains"] = std::move(domains);
    return doc.dump(2) + "\n";
  }

  if (options.format == Format::kCsv) {
    // Criterion x domain grid of gold/predicted counts and F1.
    std::string out = "criterion";
    for (const auto& d : summary.domains) {
      out += ',' + d.domain + "_gold_n," + d.domain + "_pred_n," + d.domain +
             "_f1";
    }
    out += ",overall_gold_n,overall_pred_n,overall_f1\n";
    for (int c = 0; c < kCriterionCount; ++c) {
      out += std::string(criterion_name(static_cast<Criterion>(c)));
      for (const auto& d : summary.domains) {
        const auto& s = d.per_criterion[c];
        out += ',' + std::to_string(s.n_gold) + ',' + std::to_string(s.n_pred);
        auto f1 = s.f1();
        out += ',';
        out += f1 ? fixed(*f1, 2) : "-";
      }
      const auto& s = summary.per_criterion[c];
      out += ',' + std::to_string(s.n_gold) + ',' + std::to_string(s.n_pred);
      auto f1 = s.f1();
      out += ',';
      out += f1 ? fixed(*f1, 2) : "-";
      out += '\n';
    }
    out += "micro_f1";
    for (const auto& d : summary.domains) {
      out += ",,," + fixed(d.micro_f1, 2);
    }
    out += ",,," + fixed(summary.micro_f1, 2) + '\n';
    out += "iwf_totals";
    long gold_total = 0, pred_total = 0;
    for (const auto& d : summary.domains) {
      out += ',' + std::to_string(d.gold_total) + ',' +
             std::to_string(d.pred_total) + ',';
      gold_total += d.gold_total;
      pred_total += d.pred_total;
    }
    out += ',' + std::to_string(gold_total) + ',' + std::to_string(pred_total) +
           ",\n";
    return out;
  }

  std::ostringstream out;
  out << "questions: " << summary.n_questions << '\n';
  out << "overall accuracy:  " << fixed(summary.overall_accuracy * 100, 2)
      << "%\n";
  out << "exact match ratio: " << fixed(summary.exact_match_ratio * 100, 2)
      << "%\n";
  out << "hamming loss:      " << fixed(summary.hamming_loss * 100, 2) << "%\n";
  out << "micro-averaged F1: " << fixed(summary.micro_f1, 4) << '\n';
  out << "flaws per question: predicted M=" << fixed(summary.flaw_counts.mean_pred, 2)
      << " SD=" << fixed(summary.flaw_counts.sd_pred, 2)
      << ", gold M=" << fixed(summary.flaw_counts.mean_gold, 2)
      << " SD=" << fixed(summary.flaw_counts.sd_gold, 2)
      << ", max pred=" << summary.flaw_counts.max_pred
      << " gold=" << summary.flaw_counts.max_gold << '\n';
  out << "\nacceptability matrix (rows gold, columns predicted)\n";
  out << "                 acceptable  unacceptable\n";
  out << "  acceptable     " << summary.acceptability.counts[0][0] << "  "
      << summary.acceptability.counts[0][1] << '\n';
  out << "  unacceptable   " << summary.acceptability.counts[1][0] << "  "
      << summary.acceptability.counts[1][1] << '\n';
  out << "  match rate: " << fixed(summary.acceptability.match_rate() * 100, 2)
      << "%\n";
  out << "\nper-criterion F1 (gold n / predicted n)\n";
  for (const auto& s : summary.per_criterion) {
    out << "  " << criterion_name(s.criterion) << ": " << s.n_gold << " / "
        << s.n_pred << "  F1=";
    auto f1 = s.f1();
    out << (f1 ? fixed(*f1, 2) : "-") << '\n';
  }
  out << "\nper-domain micro-F1\n";
  for (const auto& d : summary.domains) {
    out << "  " << d.domain << " (" << d.n << "): " << fixed(d.micro_f1, 2)
        << '\n';
  }
  return out.str();
}

std::map<std::string, evalharness::LabelRow> read_lint_flags(
    const std::string& path) {
  json doc = json::parse(read_file(path));
  if (doc.value("kind", std::string()) != "lint") {
    throw std::runtime_error(path + " is not a lint report");
  }
  std::map<std::string, evalharness::LabelRow> out;
  for (const auto& q : doc.at("questions")) {
    evalharness::LabelRow row{};
    for (const auto& f : q.at("findings")) {
      auto c = criterion_from_name(f.at("criterion").get<std::string>());
      if (!c) continue;
      row[index_of(*c)] = f.at("flagged").get<bool>();
    }
    out[q.at("id").get<std::string>()] = row;
  }
  return out;
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mcqlint::report_io
