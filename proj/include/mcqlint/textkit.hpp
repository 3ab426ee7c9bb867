// textkit.hpp
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
// Self-contained NLP substrate: tokenizer, rule/lexicon POS tagger,
// lemmatizer, word lists, static word vectors, and the stem
// well-formedness score. Everything here is deterministic and read-only
// after load, so one TextKit can serve any number of threads.

#ifndef MCQLINT_TEXTKIT_HPP
#define MCQLINT_TEXTKIT_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mcqlint {

enum class Pos {
  kNoun,
  kVerb,
  kAdj,
  kAdv,
  kNum,
  kPron,
  kDet,
  kOther,
};

std::string_view pos_name(Pos p);

struct Token {
  std::string surface;
  std::string lemma;   // lowercased, normalized form
  Pos pos = Pos::kOther;
  size_t begin = 0;    // byte offsets into the source text
  size_t end = 0;

  bool is_word() const { return pos != Pos::kOther || !surface.empty(); }
};

struct DataPaths {
  std::string lexicon_dir;
  std::string vectors_file;
  std::string corpus_file;
  std::string prompt_dir;

  // Standard layout under one root directory (data/ in the repo).
  static DataPaths from_root(const std::string& root);
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LexiconSet {
  std::set<std::string> absolute_terms;
  std::set<std::string> vague_terms;
  std::set<std::string> negation_markers;
  std::set<std::string> stopwords;
  std::vector<std::string> noa_phrases;
  std::vector<std::string> aota_phrases;
  std::map<std::string, int> bloom_verbs;          // verb -> level 0..5
  std::map<std::string, Pos> dictionary;           // base form -> primary tag
  std::set<std::string> verb_bases;                // all verb base forms
  std::map<std::string, std::string> irregular_lemmas;
  std::set<std::string> wordlist;                  // spelled-correctly forms

  static LexiconSet load(const std::string& dir);
};

class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // File format: header "W D", then one word and D floats per line.
  static EmbeddingTable load(const std::string& path);

  size_t dimension() const { return dimension_; }
  size_t size() const { return vectors_.size(); }

  // Case-insensitive; returns nullptr for out-of-vocabulary words.
  const std::vector<float>* lookup(std::string_view word) const;

  void insert(const std::string& word, std::vector<float> vec);

 private:
  size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<float>> vectors_;
};

// Score components and fixed weights of the well-formedness heuristic.
struct Wellformedness {
  bool has_finite_verb = false;
  bool has_frame = false;       // interrogative or imperative opening
  bool complete = false;        // terminal punctuation or enough tokens
  bool referents_ok = false;    // no dangling deictic pronoun
  double score = 0.0;

  static constexpr double kVerbWeight = 0.35;
  static constexpr double kFrameWeight = 0.25;
  static constexpr double kCompletenessWeight = 0.25;
  static constexpr double kReferentWeight = 0.15;
  static constexpr int kCompleteTokenCount = 6;
};

class TextKit {
 public:
  TextKit(LexiconSet lexicons, EmbeddingTable vectors);

  static TextKit load(const DataPaths& paths);

  const LexiconSet& lexicons() const { return lexicons_; }
  const EmbeddingTable& vectors() const { return vectors_; }

  // Tokens carry byte spans, coarse POS, and lemma. Concatenating the
  // surfaces plus the skipped separators reconstructs the input.
  std::vector<Token> tokenize(std::string_view text) const;

  // Deterministic and idempotent for dictionary words; unknown words pass
  // through lowercased.
  std::string lemmatize(std::string_view surface, Pos pos) const;

  // Lemmas of NOUN/VERB/ADJ/NUM tokens with stopwords and punctuation
  // removed, in occurrence order (duplicates kept).
  std::vector<std::string> content_lemmas(std::string_view text) const;
  std::vector<Token> content_tokens(std::string_view text) const;

  // Cosine of the mean content-word vectors; 0 when either side has no
  // in-vocabulary content word.
  double text_similarity(std::string_view a, std::string_view b) const;

  double wellformedness(std::string_view stem) const;
  Wellformedness wellformedness_breakdown(std::string_view stem) const;

  bool is_stopword(std::string_view word) const;

  // Mean pairwise cosine between two lemma sets, skipping identical
  // lemmas and out-of-vocabulary words; 0 when no pair qualifies.
  double lemma_association(const std::vector<std::string>& stem_lemmas,
                           const std::vector<std::string>& option_lemmas) const;

  // Cosine of mean vectors over explicit lemma lists (the core of
  // text_similarity, exposed for the detectors).
  double lemma_set_similarity(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) const;

 private:
  Pos tag_word(const std::string& lower, bool sentence_initial,
               Pos prev_pos) const;

  LexiconSet lexicons_;
  EmbeddingTable vectors_;
};

}  // namespace mcqlint

#endif  // MCQLINT_TEXTKIT_HPP
