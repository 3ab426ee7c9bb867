// testenv.cpp
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

#include "testenv.hpp"

namespace mcqlint::testenv {

namespace {

const std::vector<std::string>& sample_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> out;
    for (const auto& [word, pos] : kit().lexicons().dictionary) {
      (void)pos;
      out.push_back(word);
      if (out.size() >= 600) break;
    }
    return out;
  }();
  return words;
}

}  // namespace

Dataset synthetic_dataset(std::uint64_t seed, int count) {
  Lcg rng(seed);
  const auto& words = sample_words();
  const std::vector<std::string> domains = {"chemistry", "statistics",
                                            "computer science", "humanities",
                                            "healthcare"};
  auto word = [&] { return words[rng.uniform(0, static_cast<int>(words.size()) - 1)]; };
  auto phrase = [&](int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += ' ';
      out += word();
    }
    return out;
  };

  Dataset ds;
  for (int i = 0; i < count; ++i) {
    Mcq q;
    q.id = "syn_" + std::to_string(i);
    q.domain = domains[rng.uniform(0, 4)];
    switch (rng.uniform(0, 3)) {
      case 0:
        q.stem = "What is the " + word() + " of the " + word() + "?";
        break;
      case 1:
        q.stem = "Which " + word() + " best describes the " + word() + "?";
        break;
      case 2:
        q.stem = "Explain how the " + word() + " affects the " + word() + ".";
        break;
      default:
        q.stem = "The " + word() + " of a " + word() + " is measured by the " +
                 word() + ".";
        break;
    }
    const int option_count = rng.uniform(2, 5);
    for (int o = 0; o < option_count; ++o) {
      q.options.push_back({phrase(rng.uniform(1, 5)), false});
    }
    q.key = rng.uniform(0, option_count - 1);
    q.options[q.key].is_correct = true;
    ds.questions.push_back(std::move(q));
  }
  return ds;
}

}  // namespace mcqlint::testenv
