#include "cogrowth/words.hpp"

#include <cctype>

namespace cogrowth {

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == w[i].inverse()) return false;
  }
  return true;
}

ReducedWord ReducedWord::from_reduced(Word letters) {
  if (!is_reduced(letters)) throw DomainError("word is not freely reduced");
  ReducedWord r;
  r.letters_ = std::move(letters);
  return r;
}

void validate_rank(const Word& w, int rank) {
  for (const Letter& x : w) {
    if (x.base < 1 || x.base > rank) {
      throw AlphabetError("letter " + to_text(x) + " outside rank " +
                          std::to_string(rank));
    }
    if (x.sign != 1 && x.sign != -1) throw AlphabetError("letter sign must be +1 or -1");
  }
}

ReducedWord free_reduce(const Word& w, int rank) {
  validate_rank(w, rank);
  Word stack;
  stack.reserve(w.size());
  for (const Letter& x : w) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return ReducedWord::from_reduced(std::move(stack));
}

ReducedWord invert(const ReducedWord& w) {
  Word out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord concat_reduce(const ReducedWord& u, const ReducedWord& v) {
  // Only the seam can cancel; both sides are already reduced.
  Word out = u.letters();
  for (const Letter& x : v.letters()) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return ReducedWord::from_reduced(std::move(out));
}

int beta(const ReducedWord& u, const ReducedWord& v) {
  ReducedWord red = concat_reduce(u, v);
  return static_cast<int>(u.length() + v.length() - red.length());
}

std::pair<ReducedWord, ReducedWord> cyclically_reduce(const ReducedWord& w) {
  const Word& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  Word conj(ls.begin(), ls.begin() + i);
  Word core(ls.begin() + i, ls.begin() + j);
  return {ReducedWord::from_reduced(std::move(conj)),
          ReducedWord::from_reduced(std::move(core))};
}

Word parse_word(const std::string& text, int rank) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& what) {
    throw ParseError("cannot parse word \"" + text + "\": " + what);
  };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {  // empty-word symbol
      ++i;
      continue;
    }
    Letter x;
    if (c == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      long base = 0;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) {
        base = base * 10 + (text[j] - '0');
        if (base > 1000000) fail("generator index too large");
        ++j;
      }
      if (base < 1) fail("generator index must be >= 1");
      x = {static_cast<std::int32_t>(base), 1};
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      x = {static_cast<std::int32_t>(c - 'a' + 1), 1};
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      x = {static_cast<std::int32_t>(c - 'A' + 1), -1};
      ++i;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (i < n && text[i] == '^') {
      if (i + 2 < n + 1 && text.compare(i, 3, "^-1") == 0) {
        x = x.inverse();
        i += 3;
      } else {
        fail("'^' must be followed by -1");
      }
    }
    out.push_back(x);
  }
  validate_rank(out, rank);
  return out;
}

ReducedWord parse_reduced(const std::string& text, int rank) {
  return free_reduce(parse_word(text, rank), rank);
}

std::string to_text(const Letter& x) {
  if (x.base <= 26) {
    char c = static_cast<char>((x.sign > 0 ? 'a' : 'A') + x.base - 1);
    return std::string(1, c);
  }
  std::string s = "x" + std::to_string(x.base);
  if (x.sign < 0) s += "^-1";
  return s;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& x : w) s += to_text(x);
  return s;
}

std::string to_text(const ReducedWord& w) { return to_text(w.letters()); }

}  // namespace cogrowth
