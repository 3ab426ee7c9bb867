// testenv.hpp
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
// Shared fixtures for the test binaries: lazily-loaded data bundle,
// question builders, a deterministic RNG, and the synthetic dataset
// generator used by the determinism/throughput suites.

#ifndef MCQLINT_TESTS_TESTENV_HPP
#define MCQLINT_TESTS_TESTENV_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/textkit.hpp"

namespace mcqlint::testenv {

inline std::string data_root() {
  const char* env = std::getenv("MCQLINT_DATA");
  return env != nullptr ? env : "data";
}

inline const DataPaths& paths() {
  static DataPaths p = DataPaths::from_root(data_root());
  return p;
}

inline const TextKit& kit() {
  static TextKit k = TextKit::load(paths());
  return k;
}

inline Mcq make_mcq(std::string id, std::string domain, std::string stem,
                    std::vector<std::string> options, int key) {
  Mcq q;
  q.id = std::move(id);
  q.domain = std::move(domain);
  q.stem = std::move(stem);
  for (auto& o : options) q.options.push_back({std::move(o), false});
  q.key = key;
  q.options[key].is_correct = true;
  return q;
}

// The chemistry sample question exercised throughout the suites.
inline Mcq chemistry_sample() {
  return make_mcq("chem_fig1", "chemistry", "What is protons?",
                  {"positively charged particles",
                   "sum the number of protons and neutrons",
                   "negatively charged subatomic particles",
                   "he discovered the charge of electron"},
                  0);
}

// Deterministic 64-bit LCG (MMIX constants); never std::rand.
struct Lcg {
  std::uint64_t state;

  explicit Lcg(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state;
  }
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }
};

// Synthetic questions built from the bundled vocabulary; deterministic for
// a given seed and count.
Dataset synthetic_dataset(std::uint64_t seed, int count);

}  // namespace mcqlint::testenv

#endif  // MCQLINT_TESTS_TESTENV_HPP
