#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cogrowth/errors.hpp"

namespace cogrowth {

// One symbol of Sigma = {a_1, a_1^-1, ..., a_m, a_m^-1}.
struct Letter {
  std::int32_t base = 1;  // generator index, 1-based
  std::int32_t sign = 1;  // +1 or -1

  Letter inverse() const { return {base, -sign}; }

  // Dense index respecting the canonical order a_1 < a_1^-1 < a_2 < a_2^-1 < ...
  int sigma_index() const { return 2 * (base - 1) + (sign < 0 ? 1 : 0); }
  static Letter from_sigma_index(int s) {
    return {static_cast<std::int32_t>(s / 2 + 1), s % 2 == 0 ? 1 : -1};
  }

  auto operator<=>(const Letter&) const = default;
};

inline int inverse_sigma(int s) { return s ^ 1; }

// Possibly unreduced word.
using Word = std::vector<Letter>;

// Freely reduced word: no adjacent (x, x^-1) pair.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Wraps a word the caller knows to be reduced; throws DomainError otherwise.
  static ReducedWord from_reduced(Word letters);

  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  auto operator<=>(const ReducedWord&) const = default;

 private:
  Word letters_;
};

bool is_reduced(const Word& w);

// Throws AlphabetError if any letter base falls outside 1..rank.
void validate_rank(const Word& w, int rank);

// The unique reduced word equal to w in F_rank.
ReducedWord free_reduce(const Word& w, int rank);

ReducedWord invert(const ReducedWord& w);

// red(u v).
ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v);

// Total number of symbols deleted when reducing u v (both sides of every
// cancelled pair), so |red(uv)| = |u| + |v| - beta(u, v). Always even.
int beta(const ReducedWord& u, const ReducedWord& v);

// Splits w = conjugator . core . conjugator^-1 with core cyclically reduced
// (first letter is not the inverse of the last, or |core| <= 1).
std::pair<ReducedWord, ReducedWord> cyclically_reduce(const ReducedWord& w);

// Text syntax: lowercase a-z = positive generators in index order, uppercase
// A-Z = their inverses, so "abA" = a b a^-1.  "a^-1" flips the preceding
// letter.  "xN" (x immediately followed by digits) addresses generator N for
// ranks beyond 26.  "1" stands for the empty word.  Whitespace is ignored.
Word parse_word(const std::string& text, int rank);
ReducedWord parse_reduced(const std::string& text, int rank);

std::string to_text(const Letter& x);
std::string to_text(const Word& w);
std::string to_text(const ReducedWord& w);

}  // namespace cogrowth
