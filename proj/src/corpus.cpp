// corpus.cpp
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

#include "mcqlint/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mcqlint/unicode.hpp"

namespace mcqlint {

using json = nlohmann::ordered_json;

namespace {

std::string trimmed(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail_line(std::string_view source, size_t line_no,
                            const std::string& what, bool parse) {
  std::ostringstream msg;
  msg << source << ":" << line_no << ": " << what;
  if (parse) throw ParseError(msg.str());
  throw ValidationError(msg.str());
}

Mcq parse_question_line(const std::string& line, std::string_view source,
                        size_t line_no) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    fail_line(source, line_no, std::string("malformed JSON: ") + e.what(), true);
  }
  if (!obj.is_object()) fail_line(source, line_no, "line is not a JSON object", true);

  Mcq q;
  try {
    q.id = obj.at("id").get<std::string>();
    q.domain = nfc_compose(obj.value("domain", std::string()));
    q.stem = nfc_compose(obj.at("stem").get<std::string>());
    for (const auto& opt : obj.at("options")) {
      q.options.push_back({nfc_compose(opt.get<std::string>()), false});
    }
    if (obj.contains("key")) {
      q.key = obj.at("key").get<int>();
    } else if (obj.contains("answer")) {
      // Letter form, canonicalized to the zero-based key.
      std::string a = obj.at("answer").get<std::string>();
      if (a.size() != 1 || (std::toupper(a[0]) < 'A' || std::toupper(a[0]) > 'E')) {
        fail_line(source, line_no, "id '" + q.id + "': answer must be A..E", false);
      }
      q.key = std::toupper(a[0]) - 'A';
    } else {
      fail_line(source, line_no, "id '" + q.id + "': missing key/answer", false);
    }
    if (obj.contains("metadata")) {
      for (const auto& [k, v] : obj.at("metadata").items()) {
        q.metadata[k] = v.get<std::string>();
      }
    }
  } catch (const json::exception& e) {
    fail_line(source, line_no, std::string("schema error: ") + e.what(), true);
  }

  if (q.id.empty()) fail_line(source, line_no, "empty id", false);
  if (q.options.size() < 2 || q.options.size() > 5) {
    fail_line(source, line_no, "id '" + q.id + "': options out of range (2-5)",
              false);
  }
  if (q.key < 0 || q.key >= static_cast<int>(q.options.size())) {
    fail_line(source, line_no, "id '" + q.id + "': key out of range", false);
  }
  if (trimmed(q.stem).empty()) {
    fail_line(source, line_no, "id '" + q.id + "': empty stem", false);
  }
  for (size_t i = 0; i < q.options.size(); ++i) {
    if (trimmed(q.options[i].text).empty()) {
      fail_line(source, line_no,
                "id '" + q.id + "': empty option " + std::to_string(i), false);
    }
  }
  q.options[q.key].is_correct = true;
  return q;
}

}  // namespace

int GoldLabels::flaw_count() const {
  int n = 0;
  for (bool f : flags) n += f ? 1 : 0;
  return n;
}

const Mcq* Dataset::find_question(std::string_view id) const {
  for (const auto& q : questions) {
    if (q.id == id) return &q;
  }
  return nullptr;
}

const GoldLabels* Dataset::find_gold(std::string_view id) const {
  for (const auto& g : gold) {
    if (g.question_id == id) return &g;
  }
  return nullptr;
}

Dataset parse_jsonl_text(std::string_view text, std::string_view source_name) {
  Dataset ds;
  std::set<std::string> seen;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line_view =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trimmed(line_view);
    if (line.empty()) continue;
    Mcq q = parse_question_line(line, source_name, line_no);
    if (!seen.insert(q.id).second) {
      fail_line(source_name, line_no, "duplicate id '" + q.id + "'", false);
    }
    ds.questions.push_back(std::move(q));
  }
  return ds;
}

Dataset parse_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open questions file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_jsonl_text(buf.str(), path);
}

std::string serialize_jsonl(const Dataset& dataset) {
  std::string out;
  for (const auto& q : dataset.questions) {
    json obj;
    obj["id"] = q.id;
    obj["domain"] = q.domain;
    obj["stem"] = q.stem;
    json opts = json::array();
    for (const auto& o : q.options) opts.push_back(o.text);
    obj["options"] = std::move(opts);
    obj["key"] = q.key;
    if (!q.metadata.empty()) {
      json meta;
      for (const auto& [k, v] : q.metadata) meta[k] = v;
      obj["metadata"] = std::move(meta);
    }
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string gold_csv_header() {
  std::string head = "question_id";
  for (auto c : all_criteria()) {
    head += ',';
    head += criterion_name(c);
  }
  return head;
}

std::vector<GoldLabels> parse_gold_csv_text(std::string_view text,
                                            std::string_view source_name) {
  std::vector<GoldLabels> rows;
  size_t line_no = 0;
  size_t pos = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line_view =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trimmed(line_view);
    if (line.empty()) continue;

    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trimmed(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");

    if (!header_seen) {
      header_seen = true;
      if (line != gold_csv_header()) {
        std::ostringstream msg;
        msg << source_name << ":" << line_no
            << ": gold header mismatch; expected '" << gold_csv_header() << "'";
        throw ParseError(msg.str());
      }
      continue;
    }

    if (cells.size() != 1 + kCriterionCount) {
      fail_line(source_name, line_no,
                "expected " + std::to_string(1 + kCriterionCount) + " cells, got " +
                    std::to_string(cells.size()),
                true);
    }
    GoldLabels g;
    g.question_id = cells[0];
    if (g.question_id.empty()) fail_line(source_name, line_no, "empty question_id", false);
    for (int i = 0; i < kCriterionCount; ++i) {
      const std::string& v = cells[i + 1];
      if (v == "0") {
        g.flags[i] = false;
      } else if (v == "1") {
        g.flags[i] = true;
      } else {
        fail_line(source_name, line_no,
                  "column '" + std::string(criterion_name(static_cast<Criterion>(i))) +
                      "': cell must be 0 or 1, got '" + v + "'",
                  false);
      }
    }
    rows.push_back(std::move(g));
  }
  if (!header_seen) {
    throw ParseError(std::string(source_name) + ": empty gold file");
  }
  return rows;
}

std::vector<GoldLabels> parse_gold_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open gold file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gold_csv_text(buf.str(), path);
}

std::string serialize_gold_csv(const std::vector<GoldLabels>& gold) {
  std::string out = gold_csv_header() + "\n";
  for (const auto& g : gold) {
    out += g.question_id;
    for (bool f : g.flags) {
      out += f ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

Dataset join(Dataset dataset, std::vector<GoldLabels> gold) {
  std::vector<std::string> orphans;
  for (const auto& g : gold) {
    if (dataset.find_question(g.question_id) == nullptr) {
      orphans.push_back(g.question_id);
    }
  }
  if (!orphans.empty()) {
    std::string msg = "gold rows with no matching question:";
    for (const auto& id : orphans) msg += " " + id;
    throw JoinError(msg);
  }
  dataset.gold = std::move(gold);
  return dataset;
}

}  // namespace mcqlint
