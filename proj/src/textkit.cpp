// textkit.cpp
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

#include "mcqlint/textkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mcqlint/unicode.hpp"

namespace mcqlint {

namespace {

// Closed-class word lists are part of the tagger itself, not the data
// bundle: they are fixed linguistic constants.
const std::set<std::string>& determiners() {
  static const std::set<std::string> s = {
      "the", "a", "an", "this", "that", "these", "those", "each", "every",
      "some", "any", "no", "both", "either", "neither", "another", "such"};
  return s;
}

const std::set<std::string>& pronouns() {
  static const std::set<std::string> s = {
      "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
      "them", "mine", "yours", "hers", "ours", "theirs", "myself", "yourself",
      "himself", "herself", "itself", "ourselves", "themselves", "who", "whom",
      "whose", "what", "which", "someone", "anyone", "everyone", "nobody",
      "something", "anything", "everything", "nothing"};
  return s;
}

const std::set<std::string>& auxiliaries() {
  static const std::set<std::string> s = {
      "is", "are", "was", "were", "be", "been", "being", "am", "do", "does",
      "did", "done", "doing", "have", "has", "had", "having", "will", "would",
      "can", "could", "shall", "should", "may", "might", "must"};
  return s;
}

const std::set<std::string>& prepositions() {
  static const std::set<std::string> s = {
      "of", "in", "on", "at", "by", "for", "with", "from", "to", "into",
      "onto", "as", "and", "or", "but", "if", "because", "while", "during",
      "between", "under", "over", "about", "above", "below", "after",
      "before", "against", "up", "down", "off", "until", "once", "since",
      "through", "throughout", "via", "per", "within", "without", "across",
      "along", "around", "behind", "beside", "beyond", "except", "near",
      "toward", "towards", "upon", "although", "though", "unless", "whether",
      "so", "than", "despite", "regarding", "concerning", "not", "nor"};
  return s;
}

const std::set<std::string>& wh_adverbs() {
  static const std::set<std::string> s = {"when", "where", "why", "how"};
  return s;
}

const std::set<std::string>& closed_adverbs() {
  static const std::set<std::string> s = {
      "very", "quite", "too", "also", "always", "never", "often", "sometimes",
      "rarely", "usually", "frequently", "occasionally", "seldom", "commonly",
      "here", "there", "now", "then", "only", "just", "most", "more", "less",
      "least", "yes"};
  return s;
}

bool is_word_byte(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool all_underscores(std::string_view s) {
  return !s.empty() && s.find_first_not_of('_') == std::string_view::npos;
}

bool has_letter_or_digit(std::string_view s) {
  for (char c : s) {
    if (is_ascii_alpha(c) || is_ascii_digit(c) ||
        static_cast<unsigned char>(c) >= 0x80) {
      return true;
    }
  }
  return false;
}

bool numeric_surface(const std::string& lower) {
  if (lower.empty() || !is_ascii_digit(lower[0])) return false;
  size_t i = 0;
  bool digits = false;
  while (i < lower.size() && (is_ascii_digit(lower[i]) || lower[i] == '.' ||
                              lower[i] == ',')) {
    digits = digits || is_ascii_digit(lower[i]);
    ++i;
  }
  if (!digits) return false;
  std::string_view rest = std::string_view(lower).substr(i);
  return rest.empty() || rest == "th" || rest == "st" || rest == "nd" ||
         rest == "rd" || rest == "s";
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::kNoun: return "NOUN";
    case Pos::kVerb: return "VERB";
    case Pos::kAdj: return "ADJ";
    case Pos::kAdv: return "ADV";
    case Pos::kNum: return "NUM";
    case Pos::kPron: return "PRON";
    case Pos::kDet: return "DET";
    case Pos::kOther: return "OTHER";
  }
  return "OTHER";
}

DataPaths DataPaths::from_root(const std::string& root) {
  DataPaths p;
  p.lexicon_dir = root + "/lexicons";
  p.vectors_file = root + "/embeddings/vectors.txt";
  p.corpus_file = root + "/corpus/reference_sentences.txt";
  p.prompt_dir = root + "/prompts";
  return p;
}

LexiconSet LexiconSet::load(const std::string& dir) {
  LexiconSet lex;
  auto as_set = [](std::vector<std::string> v) {
    return std::set<std::string>(v.begin(), v.end());
  };
  lex.absolute_terms = as_set(read_lines(dir + "/absolute_terms.txt"));
  lex.vague_terms = as_set(read_lines(dir + "/vague_terms.txt"));
  lex.negation_markers = as_set(read_lines(dir + "/negation_markers.txt"));
  lex.stopwords = as_set(read_lines(dir + "/stopwords.txt"));
  lex.noa_phrases = read_lines(dir + "/noa_phrases.txt");
  lex.aota_phrases = read_lines(dir + "/aota_phrases.txt");
  lex.wordlist = as_set(read_lines(dir + "/wordlist.txt"));
  for (const auto& line : read_lines(dir + "/verbs.txt")) {
    lex.verb_bases.insert(line);
  }

  for (const auto& line : read_lines(dir + "/bloom_verbs.csv")) {
    if (line.rfind("verb,", 0) == 0) continue;  // header
    auto comma = line.find(',');
    if (comma == std::string::npos) throw DataError("bad bloom_verbs line: " + line);
    int level = std::atoi(line.c_str() + comma + 1);
    if (level < 0 || level > 5) throw DataError("bloom level out of range: " + line);
    lex.bloom_verbs[line.substr(0, comma)] = level;
  }

  for (const auto& line : read_lines(dir + "/dictionary.tsv")) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError("bad dictionary line: " + line);
    std::string word = line.substr(0, tab);
    std::string tag = line.substr(tab + 1);
    Pos pos = Pos::kNoun;
    if (tag == "VERB") pos = Pos::kVerb;
    else if (tag == "ADJ") pos = Pos::kAdj;
    else if (tag == "ADV") pos = Pos::kAdv;
    else if (tag != "NOUN") throw DataError("unknown tag in dictionary: " + line);
    lex.dictionary[word] = pos;
  }

  for (const auto& line : read_lines(dir + "/irregular_lemmas.tsv")) {
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DataError("bad irregular line: " + line);
    lex.irregular_lemmas[line.substr(0, tab)] = line.substr(tab + 1);
  }

  if (lex.absolute_terms.empty() || lex.stopwords.empty() ||
      lex.noa_phrases.empty() || lex.aota_phrases.empty() ||
      lex.bloom_verbs.empty()) {
    throw DataError("lexicon files under " + dir + " are incomplete");
  }
  return lex;
}

EmbeddingTable EmbeddingTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vector file " + path);
  size_t count = 0, dim = 0;
  in >> count >> dim;
  if (!in || dim == 0) throw DataError("bad vector file header in " + path);
  EmbeddingTable table;
  table.dimension_ = dim;
  table.vectors_.reserve(count);
  std::string word;
  for (size_t n = 0; n < count; ++n) {
    if (!(in >> word)) throw DataError("truncated vector file " + path);
    std::vector<float> vec(dim);
    for (size_t d = 0; d < dim; ++d) {
      if (!(in >> vec[d])) {
        throw DataError("truncated vector for '" + word + "' in " + path);
      }
    }
    table.vectors_.emplace(ascii_lower(word), std::move(vec));
  }
  return table;
}

const std::vector<float>* EmbeddingTable::lookup(std::string_view word) const {
  auto it = vectors_.find(ascii_lower(word));
  return it == vectors_.end() ? nullptr : &it->second;
}

void EmbeddingTable::insert(const std::string& word, std::vector<float> vec) {
  if (dimension_ == 0) dimension_ = vec.size();
  vectors_[ascii_lower(word)] = std::move(vec);
}

TextKit::TextKit(LexiconSet lexicons, EmbeddingTable vectors)
    : lexicons_(std::move(lexicons)), vectors_(std::move(vectors)) {}

TextKit TextKit::load(const DataPaths& paths) {
  return TextKit(LexiconSet::load(paths.lexicon_dir),
                 EmbeddingTable::load(paths.vectors_file));
}

Pos TextKit::tag_word(const std::string& lower, bool sentence_initial,
                      Pos prev_pos) const {
  (void)sentence_initial;
  if (numeric_surface(lower)) return Pos::kNum;
  if (determiners().count(lower)) return Pos::kDet;
  if (pronouns().count(lower)) return Pos::kPron;
  if (auxiliaries().count(lower)) return Pos::kVerb;
  if (prepositions().count(lower)) return Pos::kOther;
  if (wh_adverbs().count(lower) || closed_adverbs().count(lower)) {
    return Pos::kAdv;
  }

  auto it = lexicons_.dictionary.find(lower);
  if (it != lexicons_.dictionary.end()) {
    // "the <verb>" reads as a nominal use.
    if (it->second == Pos::kVerb && prev_pos == Pos::kDet) return Pos::kNoun;
    return it->second;
  }

  // Inflection analysis against the base-form dictionary.
  auto dict_tag = [&](const std::string& w) -> std::optional<Pos> {
    auto d = lexicons_.dictionary.find(w);
    if (d == lexicons_.dictionary.end()) return std::nullopt;
    return d->second;
  };
  if (ends_with(lower, "ies") && lower.size() > 4) {
    if (auto t = dict_tag(lower.substr(0, lower.size() - 3) + "y")) return *t;
  }
  if (ends_with(lower, "s") && !ends_with(lower, "ss") && lower.size() > 3) {
    if (auto t = dict_tag(lower.substr(0, lower.size() - 1))) return *t;
    if (ends_with(lower, "es")) {
      if (auto t = dict_tag(lower.substr(0, lower.size() - 2))) return *t;
    }
  }
  if (ends_with(lower, "ed") && lower.size() > 4) {
    if (dict_tag(lower.substr(0, lower.size() - 2)) ||
        dict_tag(lower.substr(0, lower.size() - 1))) {
      return Pos::kVerb;
    }
  }
  if (ends_with(lower, "ing") && lower.size() > 5) {
    const std::string stem = lower.substr(0, lower.size() - 3);
    if (dict_tag(stem) || dict_tag(stem + "e")) return Pos::kVerb;
  }
  if (lexicons_.irregular_lemmas.count(lower)) {
    const std::string& base = lexicons_.irregular_lemmas.at(lower);
    if (auto t = dict_tag(base)) return *t;
    if (lexicons_.verb_bases.count(base)) return Pos::kVerb;
  }

  // Suffix heuristics, then the noun default.
  if (ends_with(lower, "ly") && lower.size() > 4) return Pos::kAdv;
  if ((ends_with(lower, "ing") || ends_with(lower, "ed")) && lower.size() > 5) {
    return Pos::kVerb;
  }
  for (const char* suf : {"tion", "sion", "ment", "ness", "ity", "ism",
                          "ance", "ence", "ship", "hood"}) {
    if (ends_with(lower, suf)) return Pos::kNoun;
  }
  for (const char* suf : {"ous", "ive", "ful", "less", "able", "ible", "ic",
                          "ical", "ary"}) {
    if (ends_with(lower, suf)) return Pos::kAdj;
  }
  return Pos::kNoun;
}

std::vector<Token> TextKit::tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
        c == '\v') {
      ++i;
      continue;
    }
    size_t start = i;
    if (is_word_byte(c)) {
      ++i;
      while (i < n) {
        char w = text[i];
        if (is_word_byte(w)) {
          ++i;
          continue;
        }
        // Keep intra-word apostrophes and hyphens, and digit separators.
        bool prev_alnum = is_ascii_alpha(text[i - 1]) || is_ascii_digit(text[i - 1]);
        bool next_alnum = i + 1 < n && (is_ascii_alpha(text[i + 1]) ||
                                        is_ascii_digit(text[i + 1]));
        if ((w == '\'' || w == '-') && prev_alnum && next_alnum) {
          ++i;
          continue;
        }
        if ((w == '.' || w == ',') && i + 1 < n &&
            is_ascii_digit(text[i - 1]) && is_ascii_digit(text[i + 1])) {
          ++i;
          continue;
        }
        break;
      }
    } else {
      // Run of the same punctuation character collapses to one token.
      ++i;
      while (i < n && text[i] == c) ++i;
    }
    Token tok;
    tok.surface = std::string(text.substr(start, i - start));
    tok.begin = start;
    tok.end = i;
    if (!has_letter_or_digit(tok.surface) || all_underscores(tok.surface)) {
      tok.pos = Pos::kOther;
      tok.lemma = ascii_lower(tok.surface);
    } else {
      const std::string lower = ascii_lower(tok.surface);
      Pos prev = tokens.empty() ? Pos::kOther : tokens.back().pos;
      tok.pos = tag_word(lower, tokens.empty(), prev);
      tok.lemma = lemmatize(tok.surface, tok.pos);
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::string TextKit::lemmatize(std::string_view surface, Pos pos) const {
  std::string s = ascii_lower(surface);
  if (s.empty()) return s;

  auto irr = lexicons_.irregular_lemmas.find(s);
  if (irr != lexicons_.irregular_lemmas.end()) return irr->second;
  if (lexicons_.dictionary.count(s)) return s;  // already a base form

  auto in_dict = [&](const std::string& w) {
    return lexicons_.dictionary.count(w) > 0;
  };

  if (pos == Pos::kNoun || pos == Pos::kVerb) {
    if (ends_with(s, "s") && !ends_with(s, "ss") && !ends_with(s, "us") &&
        !ends_with(s, "is") && s.size() > 3) {
      std::string strip1 = s.substr(0, s.size() - 1);
      if (in_dict(strip1)) return strip1;
      if (ends_with(s, "ies") && s.size() > 4) {
        return s.substr(0, s.size() - 3) + "y";
      }
      for (const char* suf : {"ses", "xes", "zes", "ches", "shes"}) {
        if (ends_with(s, suf)) {
          std::string es = s.substr(0, s.size() - 2);
          return es;
        }
      }
      return strip1;
    }
  }
  if (pos == Pos::kVerb) {
    if (ends_with(s, "ed") && s.size() > 4) {
      std::string bare = s.substr(0, s.size() - 2);
      if (in_dict(bare)) return bare;
      std::string keep_e = s.substr(0, s.size() - 1);  // used -> use
      if (in_dict(keep_e)) return keep_e;
      if (bare.size() >= 2 && bare[bare.size() - 1] == bare[bare.size() - 2]) {
        std::string undoubled = bare.substr(0, bare.size() - 1);
        if (in_dict(undoubled)) return undoubled;
      }
      return bare;
    }
    if (ends_with(s, "ing") && s.size() > 5) {
      std::string bare = s.substr(0, s.size() - 3);
      if (in_dict(bare)) return bare;
      if (in_dict(bare + "e")) return bare + "e";
      if (bare.size() >= 2 && bare[bare.size() - 1] == bare[bare.size() - 2]) {
        std::string undoubled = bare.substr(0, bare.size() - 1);
        if (in_dict(undoubled)) return undoubled;
      }
      return bare;
    }
  }
  if (pos == Pos::kAdj || pos == Pos::kAdv) {
    for (const char* suf : {"est", "er"}) {
      if (ends_with(s, suf)) {
        std::string bare = s.substr(0, s.size() - std::string_view(suf).size());
        if (in_dict(bare)) return bare;
        if (in_dict(bare + "e")) return bare + "e";
      }
    }
  }
  return s;
}

std::vector<Token> TextKit::content_tokens(std::string_view text) const {
  std::vector<Token> out;
  for (auto& tok : tokenize(text)) {
    if (tok.pos != Pos::kNoun && tok.pos != Pos::kVerb &&
        tok.pos != Pos::kAdj && tok.pos != Pos::kNum) {
      continue;
    }
    if (is_stopword(ascii_lower(tok.surface)) || is_stopword(tok.lemma)) {
      continue;
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<std::string> TextKit::content_lemmas(std::string_view text) const {
  std::vector<std::string> out;
  for (auto& tok : content_tokens(text)) out.push_back(tok.lemma);
  return out;
}

bool TextKit::is_stopword(std::string_view word) const {
  return lexicons_.stopwords.count(std::string(word)) > 0;
}

namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0 || nb <= 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double cosine_f(const std::vector<float>& a, const std::vector<float>& b) {
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na <= 0 || nb <= 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double TextKit::lemma_set_similarity(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) const {
  const size_t dim = vectors_.dimension();
  auto mean_of = [&](const std::vector<std::string>& words,
                     std::vector<double>& mean) -> bool {
    mean.assign(dim, 0.0);
    size_t found = 0;
    for (const auto& w : words) {
      if (const auto* v = vectors_.lookup(w)) {
        for (size_t i = 0; i < dim; ++i) mean[i] += (*v)[i];
        ++found;
      }
    }
    if (found == 0) return false;
    for (auto& x : mean) x /= static_cast<double>(found);
    return true;
  };
  std::vector<double> ma, mb;
  if (!mean_of(a, ma) || !mean_of(b, mb)) return 0.0;
  return cosine(ma, mb);
}

double TextKit::text_similarity(std::string_view a, std::string_view b) const {
  return lemma_set_similarity(content_lemmas(a), content_lemmas(b));
}

double TextKit::lemma_association(
    const std::vector<std::string>& stem_lemmas,
    const std::vector<std::string>& option_lemmas) const {
  double sum = 0.0;
  long pairs = 0;
  for (const auto& s : stem_lemmas) {
    const auto* vs = vectors_.lookup(s);
    if (!vs) continue;
    for (const auto& o : option_lemmas) {
      if (o == s) continue;  // exact repeats belong to the word-repeats rule
      const auto* vo = vectors_.lookup(o);
      if (!vo) continue;
      sum += cosine_f(*vs, *vo);
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : sum / static_cast<double>(pairs);
}

Wellformedness TextKit::wellformedness_breakdown(std::string_view stem) const {
  Wellformedness w;
  auto tokens = tokenize(stem);
  std::vector<const Token*> words;
  for (const auto& t : tokens) {
    if (t.pos != Pos::kOther || has_letter_or_digit(t.surface)) {
      words.push_back(&t);
    }
  }
  if (words.empty()) return w;  // empty stem scores 0

  for (const auto* t : words) {
    if (t->pos == Pos::kVerb) {
      w.has_finite_verb = true;
      break;
    }
  }

  const std::string first = ascii_lower(words.front()->surface);
  bool interrogative = pronouns().count(first) > 0 &&
                       (first == "what" || first == "which" || first == "who" ||
                        first == "whom" || first == "whose");
  interrogative = interrogative || wh_adverbs().count(first) > 0 ||
                  auxiliaries().count(first) > 0;
  for (const auto& t : tokens) {
    if (t.surface.find('?') != std::string::npos) interrogative = true;
  }
  bool imperative = lexicons_.verb_bases.count(first) > 0 &&
                    auxiliaries().count(first) == 0;
  w.has_frame = interrogative || imperative;

  const Token& last = tokens.back();
  bool terminal = last.pos == Pos::kOther &&
                  (last.surface.find('.') != std::string::npos ||
                   last.surface.find('?') != std::string::npos ||
                   last.surface.find('!') != std::string::npos);
  w.complete = terminal ||
               words.size() >= Wellformedness::kCompleteTokenCount;

  // Deictic pronouns need an in-stem referent before them.
  static const std::set<std::string> deictic = {"this", "it", "they", "these",
                                                "those"};
  bool dangling = false;
  bool saw_noun = false;
  for (const auto& t : tokens) {
    const std::string lower = ascii_lower(t.surface);
    if (deictic.count(lower) && !saw_noun) {
      dangling = true;
      break;
    }
    if (t.pos == Pos::kNoun || t.pos == Pos::kNum) saw_noun = true;
  }
  w.referents_ok = !dangling;

  w.score = (w.has_finite_verb ? Wellformedness::kVerbWeight : 0.0) +
            (w.has_frame ? Wellformedness::kFrameWeight : 0.0) +
            (w.complete ? Wellformedness::kCompletenessWeight : 0.0) +
            (w.referents_ok ? Wellformedness::kReferentWeight : 0.0);
  return w;
}

double TextKit::wellformedness(std::string_view stem) const {
  return wellformedness_breakdown(stem).score;
}

}  // namespace mcqlint
