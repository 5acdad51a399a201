#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "cogrowth/words.hpp"

namespace corpus {

inline unsigned default_seed() {
  if (const char* s = std::getenv("COGROWTH_SEED")) {
    return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
  }
  return 20250817u;
}

// Uniform nonempty reduced word: each letter avoids cancelling the previous.
inline cogrowth::ReducedWord random_reduced_word(std::mt19937& rng, int rank, int max_len) {
  int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  cogrowth::Word w;
  w.reserve(len);
  int prev = -1;
  for (int i = 0; i < len; ++i) {
    int s;
    if (prev == -1) {
      s = std::uniform_int_distribution<int>(0, 2 * rank - 1)(rng);
    } else {
      s = std::uniform_int_distribution<int>(0, 2 * rank - 2)(rng);
      if (s >= cogrowth::inverse_sigma(prev)) ++s;
    }
    w.push_back(cogrowth::Letter::from_sigma_index(s));
    prev = s;
  }
  return cogrowth::ReducedWord::from_reduced(w);
}

struct Subgroup {
  int rank = 2;
  std::vector<cogrowth::ReducedWord> generators;
};

// Random finitely generated subgroups: rank 2..3, 1..4 generators of length
// 1..6 each (the shared property-test corpus).
inline std::vector<Subgroup> random_corpus(int count, unsigned seed = default_seed()) {
  std::mt19937 rng(seed);
  std::vector<Subgroup> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Subgroup s;
    s.rank = std::uniform_int_distribution<int>(2, 3)(rng);
    int k = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < k; ++j) {
      s.generators.push_back(random_reduced_word(rng, s.rank, 6));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace corpus
