// detectors.cpp
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
// Config, shared helpers, the text-matching tier, and run_all.

#include "mcqlint/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "mcqlint/detectors_internal.hpp"
#include "mcqlint/unicode.hpp"

namespace mcqlint::detectors {

using json = nlohmann::ordered_json;

// --- config ---

std::string DetectorConfig::to_json() const {
  json obj;
  obj["longest_option_ratio"] = longest_option_ratio;
  obj["implausible_sim_threshold"] = implausible_sim_threshold;
  obj["synonym_threshold"] = synonym_threshold;
  obj["wellformedness_threshold"] = wellformedness_threshold;
  obj["min_blank_run"] = min_blank_run;
  obj["logical_cue_margin"] = logical_cue_margin;
  obj["near_duplicate_edit"] = near_duplicate_edit;
  obj["near_duplicate_embedding"] = near_duplicate_embedding;
  obj["multi_correct_similarity"] = multi_correct_similarity;
  obj["gratuitous_length_factor"] = gratuitous_length_factor;
  obj["llm_enabled"] = llm_enabled;
  json en;
  for (auto c : all_criteria()) {
    en[std::string(criterion_name(c))] = enabled[index_of(c)];
  }
  obj["enabled"] = std::move(en);
  return obj.dump();
}

DetectorConfig DetectorConfig::from_json(const std::string& json_text) {
  DetectorConfig cfg;
  json obj = json::parse(json_text);
  cfg.longest_option_ratio =
      obj.value("longest_option_ratio", cfg.longest_option_ratio);
  cfg.implausible_sim_threshold =
      obj.value("implausible_sim_threshold", cfg.implausible_sim_threshold);
  cfg.synonym_threshold = obj.value("synonym_threshold", cfg.synonym_threshold);
  cfg.wellformedness_threshold =
      obj.value("wellformedness_threshold", cfg.wellformedness_threshold);
  cfg.min_blank_run = obj.value("min_blank_run", cfg.min_blank_run);
  cfg.logical_cue_margin = obj.value("logical_cue_margin", cfg.logical_cue_margin);
  cfg.near_duplicate_edit = obj.value("near_duplicate_edit", cfg.near_duplicate_edit);
  cfg.near_duplicate_embedding =
      obj.value("near_duplicate_embedding", cfg.near_duplicate_embedding);
  cfg.multi_correct_similarity =
      obj.value("multi_correct_similarity", cfg.multi_correct_similarity);
  cfg.gratuitous_length_factor =
      obj.value("gratuitous_length_factor", cfg.gratuitous_length_factor);
  cfg.llm_enabled = obj.value("llm_enabled", cfg.llm_enabled);
  if (obj.contains("enabled")) {
    for (const auto& [name, value] : obj.at("enabled").items()) {
      auto c = criterion_from_name(name);
      if (!c) throw std::runtime_error("unknown criterion in config: " + name);
      cfg.enabled[index_of(*c)] = value.get<bool>();
    }
  }
  if (cfg.longest_option_ratio <= 0.0 || cfg.longest_option_ratio > 1.0) {
    throw std::runtime_error("longest_option_ratio must be in (0,1]");
  }
  if (cfg.min_blank_run < 1) {
    throw std::runtime_error("min_blank_run must be >= 1");
  }
  return cfg;
}

std::string DetectorConfig::digest() const {
  return llmgate::fnv1a64_hex(to_json());
}

// --- report plumbing ---

int FlawReport::flaw_count() const {
  int n = 0;
  for (const auto& f : findings) n += f.flagged ? 1 : 0;
  return n;
}

bool FlawReport::any_unavailable() const {
  for (const auto& f : findings) {
    if (f.status == FindingStatus::kUnavailable) return true;
  }
  return false;
}

double DatasetContext::median_for(const std::string& domain) const {
  auto it = median_stem_tokens.find(domain);
  if (it != median_stem_tokens.end()) return it->second;
  return fallback_median;
}

DatasetContext make_context(const Dataset& dataset, const TextKit& kit) {
  DatasetContext ctx;
  std::map<std::string, std::vector<int>> lengths;
  std::vector<int> all;
  for (const auto& q : dataset.questions) {
    int words = 0;
    for (const auto& t : kit.tokenize(q.stem)) {
      if (t.pos != Pos::kOther) ++words;
    }
    lengths[q.domain].push_back(words);
    all.push_back(words);
  }
  auto median = [](std::vector<int> v) -> double {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;
  };
  for (auto& [domain, v] : lengths) {
    ctx.median_stem_tokens[domain] = median(v);
  }
  ctx.fallback_median = median(std::move(all));
  return ctx;
}

// --- shared helpers (detectors_internal.hpp) ---

namespace internal {

std::string normalize_phrase(std::string_view text) {
  std::string out;
  bool last_space = true;
  for (char c : ascii_lower(text)) {
    bool keep = is_ascii_alpha(c) || is_ascii_digit(c) ||
                static_cast<unsigned char>(c) >= 0x80;
    if (keep) {
      out += c;
      last_space = false;
    } else if (!last_space) {
      out += ' ';
      last_space = true;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<std::pair<size_t, size_t>> whole_word_spans(std::string_view text,
                                                        std::string_view word) {
  std::vector<std::pair<size_t, size_t>> spans;
  const std::string lower = ascii_lower(text);
  const std::string target = ascii_lower(word);
  size_t pos = 0;
  while ((pos = lower.find(target, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_ascii_alpha(lower[pos - 1]);
    size_t end = pos + target.size();
    bool right_ok = end >= lower.size() || !is_ascii_alpha(lower[end]);
    if (left_ok && right_ok) spans.emplace_back(pos, end);
    pos = end;
  }
  return spans;
}

std::vector<std::pair<size_t, size_t>> quoted_regions(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> regions;
  size_t open = std::string_view::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '"') {
      if (open == std::string_view::npos) {
        open = i;
      } else {
        regions.emplace_back(open, i + 1);
        open = std::string_view::npos;
      }
    }
  }
  // Curly quotes U+201C/U+201D.
  size_t i = 0;
  size_t curly_open = std::string_view::npos;
  while (i < text.size()) {
    size_t start = i;
    char32_t cp = utf8_decode(text, i);
    if (cp == 0x201C) curly_open = start;
    if (cp == 0x201D && curly_open != std::string_view::npos) {
      regions.emplace_back(curly_open, i);
      curly_open = std::string_view::npos;
    }
  }
  return regions;
}

bool inside_any(const std::vector<std::pair<size_t, size_t>>& regions,
                size_t begin, size_t end) {
  for (const auto& [b, e] : regions) {
    if (begin >= b && end <= e) return true;
  }
  return false;
}

Evidence stem_evidence(size_t begin, size_t end, std::string note) {
  Evidence ev;
  ev.where = EvidenceLocation::kStem;
  ev.begin = begin;
  ev.end = end;
  ev.note = std::move(note);
  return ev;
}

Evidence option_evidence(int index, size_t begin, size_t end,
                         std::string note) {
  Evidence ev;
  ev.where = EvidenceLocation::kOption;
  ev.option_index = index;
  ev.begin = begin;
  ev.end = end;
  ev.note = std::move(note);
  return ev;
}

FlawFinding base_finding(Criterion c) {
  FlawFinding f;
  f.criterion = c;
  f.tier = criterion_tier(c);
  return f;
}

std::string format2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string leading_word(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && !is_ascii_alpha(text[i])) ++i;
  std::string word;
  while (i < text.size() && is_ascii_alpha(text[i])) {
    word += static_cast<char>(std::tolower(text[i]));
    ++i;
  }
  return word;
}

bool vowel_sound(const std::string& word) {
  if (word.empty()) return false;
  static const std::set<std::string> silent_h = {"hour", "honest", "honor",
                                                 "honour", "heir"};
  static const std::set<std::string> glide = {
      "university", "unit", "united", "uniform", "user", "useful",
      "european", "one", "once", "unique"};
  if (silent_h.count(word)) return true;
  if (glide.count(word)) return false;
  char c = word[0];
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace internal

using namespace internal;

// --- edit similarity ---

double edit_similarity(std::string_view a, std::string_view b) {
  const std::string la = ascii_lower(a);
  const std::string lb = ascii_lower(b);
  if (la.empty() && lb.empty()) return 1.0;
  const size_t n = la.size(), m = lb.size();
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = prev[j - 1] + (la[i - 1] == lb[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  const double dist = static_cast<double>(prev[m]);
  return 1.0 - dist / static_cast<double>(std::max(n, m));
}

// --- scalar parsing for lost-sequence ---

namespace {

const char* kMonths[] = {"january", "february", "march",     "april",
                         "may",     "june",     "july",      "august",
                         "september", "october", "november", "december"};

std::optional<int> month_index(const std::string& word) {
  for (int i = 0; i < 12; ++i) {
    if (word == kMonths[i]) return i + 1;
  }
  return std::nullopt;
}

// Plain number with optional thousands separators, decimals, sign.
std::optional<double> parse_plain_number(std::string_view s, size_t& consumed) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  bool any = false;
  bool dot = false;
  while (i < s.size()) {
    char c = s[i];
    if (is_ascii_digit(c)) {
      digits += c;
      any = true;
      ++i;
    } else if (c == ',' && i + 1 < s.size() && is_ascii_digit(s[i + 1]) && any) {
      ++i;  // thousands separator
    } else if (c == '.' && !dot && i + 1 < s.size() && is_ascii_digit(s[i + 1])) {
      digits += '.';
      dot = true;
      ++i;
    } else {
      break;
    }
  }
  if (!any) return std::nullopt;
  consumed = i;
  double value = std::strtod(digits.c_str(), nullptr);
  return neg ? -value : value;
}

std::string strip_edges(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::optional<double> parse_option_scalar(const std::string& text) {
  std::string s = strip_edges(text);
  if (s.empty()) return std::nullopt;

  // Currency prefix.
  for (const char* cur : {"$", "\xE2\x82\xAC" /* € */, "\xC2\xA3" /* £ */}) {
    std::string_view c(cur);
    if (s.rfind(cur, 0) == 0) {
      s = strip_edges(std::string_view(s).substr(c.size()));
      break;
    }
  }

  const std::string lower = ascii_lower(s);

  // ISO date YYYY-MM-DD.
  if (lower.size() == 10 && lower[4] == '-' && lower[7] == '-') {
    bool digits = true;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
      digits = digits && is_ascii_digit(lower[i]);
    }
    if (digits) {
      int y = std::atoi(lower.substr(0, 4).c_str());
      int m = std::atoi(lower.substr(5, 2).c_str());
      int d = std::atoi(lower.substr(8, 2).c_str());
      if (m >= 1 && m <= 12 && d >= 1 && d <= 31) {
        return y * 372.0 + (m - 1) * 31.0 + (d - 1);
      }
    }
  }

  // Natural dates: "March 5, 1999", "5 March 1999", "March 1999".
  {
    std::vector<std::string> words;
    std::string cur;
    for (char c : lower) {
      if (is_ascii_alpha(c) || is_ascii_digit(c)) {
        cur += c;
      } else if (!cur.empty()) {
        words.push_back(cur);
        cur.clear();
      }
    }
    if (!cur.empty()) words.push_back(cur);
    auto as_int = [](const std::string& w) -> std::optional<int> {
      if (w.empty()) return std::nullopt;
      for (char c : w) {
        if (!is_ascii_digit(c)) return std::nullopt;
      }
      return std::atoi(w.c_str());
    };
    if (words.size() == 3) {
      if (auto m = month_index(words[0])) {
        auto d = as_int(words[1]);
        auto y = as_int(words[2]);
        if (d && y && *d >= 1 && *d <= 31) {
          return *y * 372.0 + (*m - 1) * 31.0 + (*d - 1);
        }
      }
      if (auto m = month_index(words[1])) {
        auto d = as_int(words[0]);
        auto y = as_int(words[2]);
        if (d && y && *d >= 1 && *d <= 31) {
          return *y * 372.0 + (*m - 1) * 31.0 + (*d - 1);
        }
      }
    }
    if (words.size() == 2) {
      if (auto m = month_index(words[0])) {
        if (auto y = as_int(words[1])) {
          return *y * 372.0 + (*m - 1) * 31.0;
        }
      }
    }
  }

  // Number, percentage, or range (lower bound).
  size_t consumed = 0;
  auto first = parse_plain_number(lower, consumed);
  if (!first) return std::nullopt;
  std::string_view rest = std::string_view(lower).substr(consumed);

  auto skip_ws = [](std::string_view v) {
    size_t i = 0;
    while (i < v.size() && std::isspace(static_cast<unsigned char>(v[i]))) ++i;
    return v.substr(i);
  };
  rest = skip_ws(rest);
  if (rest.empty()) return first;
  if (rest == "%") return first;

  // Range separators: "-", en dash, "to".
  for (std::string_view sep : {std::string_view("-"),
                               std::string_view("\xE2\x80\x93"),
                               std::string_view("\xE2\x80\x94"),
                               std::string_view("to ")}) {
    if (rest.rfind(sep, 0) == 0) {
      std::string_view tail = skip_ws(rest.substr(sep.size()));
      size_t c2 = 0;
      auto second = parse_plain_number(tail, c2);
      if (second) {
        std::string_view after = skip_ws(tail.substr(c2));
        if (after.empty() || after == "%") return first;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// --- text-matching tier ---

namespace {

FlawFinding detect_phrase_option(const Mcq& mcq, Criterion criterion,
                                 const std::vector<std::string>& phrases) {
  FlawFinding f = base_finding(criterion);
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    const std::string norm = normalize_phrase(mcq.options[i].text);
    for (const auto& phrase : phrases) {
      if (norm == phrase) {
        f.flagged = true;
        f.evidence.push_back(option_evidence(
            static_cast<int>(i), 0, mcq.options[i].text.size(),
            "matches phrase '" + phrase + "'"));
      }
    }
  }
  return f;
}

}  // namespace

FlawFinding detect_none_of_the_above(const Mcq& mcq, const DetectorEnv& env) {
  return detect_phrase_option(mcq, Criterion::kNoneOfTheAbove,
                              env.kit.lexicons().noa_phrases);
}

FlawFinding detect_all_of_the_above(const Mcq& mcq, const DetectorEnv& env) {
  return detect_phrase_option(mcq, Criterion::kAllOfTheAbove,
                              env.kit.lexicons().aota_phrases);
}

FlawFinding detect_fill_in_the_blank(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kFillInTheBlank);
  const std::string& stem = mcq.stem;

  // Inline code spans are exempt.
  std::vector<std::pair<size_t, size_t>> code_spans;
  {
    size_t open = std::string::npos;
    for (size_t i = 0; i < stem.size(); ++i) {
      if (stem[i] != '`') continue;
      if (open == std::string::npos) {
        open = i;
      } else {
        code_spans.emplace_back(open, i + 1);
        open = std::string::npos;
      }
    }
  }

  auto alnum_at = [&](size_t i) {
    return i < stem.size() && (is_ascii_alpha(stem[i]) || is_ascii_digit(stem[i]));
  };
  auto has_content_after = [&](size_t end) {
    for (size_t i = end; i < stem.size(); ++i) {
      if (is_ascii_alpha(stem[i]) || is_ascii_digit(stem[i]) ||
          static_cast<unsigned char>(stem[i]) >= 0x80) {
        return true;
      }
    }
    return false;
  };

  // Underscore runs.
  size_t i = 0;
  while (i < stem.size()) {
    if (stem[i] != '_') {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < stem.size() && stem[i] == '_') ++i;
    const int run = static_cast<int>(i - start);
    if (run < env.cfg.min_blank_run) continue;
    if (inside_any(code_spans, start, i)) continue;
    // Identifier-style runs touch alphanumerics on both sides.
    if (alnum_at(start == 0 ? stem.size() : start - 1) && alnum_at(i)) continue;
    if (!has_content_after(i)) continue;  // terminal blank reads as completion
    f.flagged = true;
    f.evidence.push_back(stem_evidence(start, i, "blank marker"));
  }

  // "(blank)" marker.
  const std::string lower = ascii_lower(stem);
  size_t pos = 0;
  while ((pos = lower.find("(blank)", pos)) != std::string::npos) {
    size_t end = pos + 7;
    if (!inside_any(code_spans, pos, end) && has_content_after(end)) {
      f.flagged = true;
      f.evidence.push_back(stem_evidence(pos, end, "blank marker"));
    }
    pos = end;
  }
  return f;
}

namespace {

// Strips a leading true/false/yes/no label; the remainder must be empty or
// start with an explanation separator.
bool polar_label(const std::string& option) {
  const std::string lower = ascii_lower(strip_edges(option));
  size_t i = 0;
  std::string word;
  while (i < lower.size() && is_ascii_alpha(lower[i])) {
    word += lower[i];
    ++i;
  }
  if (word != "true" && word != "false" && word != "yes" && word != "no") {
    return false;
  }
  std::string_view rest = std::string_view(lower).substr(i);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty()) return true;
  if (rest.front() == ',' || rest.front() == ':' || rest.front() == ';' ||
      rest.front() == '.' || rest.front() == '-') {
    return true;
  }
  if (rest.rfind("\xE2\x80\x94", 0) == 0) return true;  // em dash
  if (rest.rfind("because", 0) == 0) return true;
  return false;
}

}  // namespace

FlawFinding detect_true_or_false(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kTrueOrFalse);
  if (mcq.options.size() == 2 && polar_label(mcq.options[0].text) &&
      polar_label(mcq.options[1].text)) {
    f.flagged = true;
    for (int i = 0; i < 2; ++i) {
      f.evidence.push_back(option_evidence(i, 0, mcq.options[i].text.size(),
                                           "true/false style option"));
    }
    return f;
  }

  // "Which of these is true?" over full-statement options.
  static const char* kPatterns[] = {
      "is true",  "are true",  "is false",     "are false",
      "is correct", "are correct", "is incorrect", "is not true",
  };
  const std::string lower = ascii_lower(mcq.stem);
  bool stem_asks = lower.find("which") != std::string::npos;
  if (stem_asks) {
    bool any = false;
    for (const char* p : kPatterns) {
      if (lower.find(p) != std::string::npos) any = true;
    }
    stem_asks = any;
  }
  if (stem_asks) {
    bool all_statements = true;
    for (const auto& opt : mcq.options) {
      if (option_shape(env.kit.tokenize(opt.text), env.kit) !=
          OptionShape::kClause) {
        all_statements = false;
        break;
      }
    }
    if (all_statements) {
      f.flagged = true;
      f.evidence.push_back(
          stem_evidence(0, mcq.stem.size(), "true/false statement series"));
    }
  }
  return f;
}

FlawFinding detect_longest_option_correct(
    const Mcq& mcq, const DetectorEnv& env,
    std::optional<bool> true_or_false_flagged) {
  FlawFinding f = base_finding(Criterion::kLongestOptionCorrect);
  bool tf = true_or_false_flagged.has_value()
                ? *true_or_false_flagged
                : detect_true_or_false(mcq, env).flagged;
  if (tf) {
    f.note = "true/false question, exempt";
    return f;
  }
  const size_t correct_len = utf8_length(mcq.correct_text());
  size_t longest_distractor = 0;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (static_cast<int>(i) == mcq.key) continue;
    longest_distractor = std::max(longest_distractor,
                                  utf8_length(mcq.options[i].text));
  }
  if (correct_len > longest_distractor &&
      static_cast<double>(longest_distractor) <
          env.cfg.longest_option_ratio * static_cast<double>(correct_len)) {
    f.flagged = true;
    f.evidence.push_back(option_evidence(
        mcq.key, 0, mcq.correct_text().size(),
        "correct option " + std::to_string(correct_len) +
            " chars, longest distractor " +
            std::to_string(longest_distractor)));
  }
  return f;
}

FlawFinding detect_negatively_worded(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kNegativelyWorded);
  const auto quoted = quoted_regions(mcq.stem);
  for (const auto& marker : env.kit.lexicons().negation_markers) {
    for (const auto& [begin, end] : whole_word_spans(mcq.stem, marker)) {
      std::string_view hit(mcq.stem.data() + begin, end - begin);
      bool all_caps = true;
      for (char c : hit) {
        if (!(c >= 'A' && c <= 'Z')) all_caps = false;
      }
      if (inside_any(quoted, begin, end) && !all_caps) continue;
      f.flagged = true;
      f.evidence.push_back(
          stem_evidence(begin, end, "negation marker '" + marker + "'"));
    }
  }
  std::sort(f.evidence.begin(), f.evidence.end(),
            [](const Evidence& a, const Evidence& b) { return a.begin < b.begin; });
  return f;
}

FlawFinding detect_lost_sequence(const Mcq& mcq, const DetectorEnv& env) {
  (void)env;
  FlawFinding f = base_finding(Criterion::kLostSequence);
  std::vector<double> values;
  for (const auto& opt : mcq.options) {
    auto v = parse_option_scalar(opt.text);
    if (!v) return f;  // not a scalar sequence
    values.push_back(*v);
  }
  bool non_decreasing = true, non_increasing = true;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) non_decreasing = false;
    if (values[i] > values[i - 1]) non_increasing = false;
  }
  if (!non_decreasing && !non_increasing) {
    f.flagged = true;
    for (size_t i = 0; i < mcq.options.size(); ++i) {
      f.evidence.push_back(option_evidence(static_cast<int>(i), 0,
                                           mcq.options[i].text.size(),
                                           "out-of-order scalar"));
    }
  }
  return f;
}

FlawFinding detect_vague_terms(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kVagueTerms);
  // Table 1 scopes this flaw to the options; stem hits are ignored.
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    for (const auto& term : env.kit.lexicons().vague_terms) {
      for (const auto& [begin, end] :
           whole_word_spans(mcq.options[i].text, term)) {
        f.flagged = true;
        f.evidence.push_back(option_evidence(static_cast<int>(i), begin, end,
                                             "vague term '" + term + "'"));
      }
    }
  }
  return f;
}

// --- run_all ---

FlawReport run_all(const Mcq& mcq, const DetectorEnv& env) {
  FlawReport report;
  report.question_id = mcq.id;

  // True/false runs first: the longest-option rule consumes its result.
  FlawFinding tf;
  bool tf_ready = false;
  if (env.cfg.enabled[index_of(Criterion::kTrueOrFalse)]) {
    tf = detect_true_or_false(mcq, env);
    tf_ready = true;
  }

  for (auto c : all_criteria()) {
    FlawFinding f;
    if (!env.cfg.enabled[index_of(c)]) {
      f = base_finding(c);
      f.note = "disabled";
      report.findings[index_of(c)] = std::move(f);
      continue;
    }
    switch (c) {
      case Criterion::kLongestOptionCorrect:
        f = detect_longest_option_correct(
            mcq, env,
            tf_ready ? std::optional<bool>(tf.flagged) : std::nullopt);
        break;
      case Criterion::kAmbiguousInformation:
        f = detect_ambiguous_information(mcq, env);
        break;
      case Criterion::kImplausibleDistractors:
        f = detect_implausible_distractors(mcq, env);
        break;
      case Criterion::kTrueOrFalse:
        f = tf;
        break;
      case Criterion::kAbsoluteTerms:
        f = detect_absolute_terms(mcq, env);
        break;
      case Criterion::kComplexKType:
        f = detect_complex_k_type(mcq, env);
        break;
      case Criterion::kNegativelyWorded:
        f = detect_negatively_worded(mcq, env);
        break;
      case Criterion::kConvergenceCues:
        f = detect_convergence_cues(mcq, env);
        break;
      case Criterion::kLostSequence:
        f = detect_lost_sequence(mcq, env);
        break;
      case Criterion::kUnfocusedStem:
        f = detect_unfocused_stem(mcq, env);
        break;
      case Criterion::kNoneOfTheAbove:
        f = detect_none_of_the_above(mcq, env);
        break;
      case Criterion::kWordRepeats:
        f = detect_word_repeats(mcq, env);
        break;
      case Criterion::kMoreThanOneCorrect:
        f = detect_more_than_one_correct(mcq, env);
        break;
      case Criterion::kLogicalCues:
        f = detect_logical_cues(mcq, env);
        break;
      case Criterion::kAllOfTheAbove:
        f = detect_all_of_the_above(mcq, env);
        break;
      case Criterion::kFillInTheBlank:
        f = detect_fill_in_the_blank(mcq, env);
        break;
      case Criterion::kVagueTerms:
        f = detect_vague_terms(mcq, env);
        break;
      case Criterion::kGrammaticalCues:
        f = detect_grammatical_cues(mcq, env);
        break;
      case Criterion::kGratuitousInformation:
        f = detect_gratuitous_information(mcq, env);
        break;
    }
    report.findings[index_of(c)] = std::move(f);
  }
  return report;
}

}  // namespace mcqlint::detectors
