#include "freewalk/words.hpp"

#include <algorithm>
#include <set>

namespace freewalk {

char to_char(Letter x) {
  switch (x) {
    case Letter::a: return 'a';
    case Letter::A: return 'A';
    case Letter::b: return 'b';
    case Letter::B: return 'B';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
  }
  throw ValidationError("ParseError",
                        std::string("invalid letter '") + c +
                            "' (expected one of a, A, b, B)");
}

namespace {
bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == inverse(w[i])) return false;
  }
  return true;
}
}  // namespace

ReducedWord::ReducedWord(Word letters) : letters_(std::move(letters)) {
  if (!is_reduced(letters_)) {
    throw ValidationError("NotReduced",
                          "word '" + freewalk::to_string(letters_) +
                              "' contains a cancelling pair");
  }
}

ReducedWord ReducedWord::prefix(std::size_t n) const {
  return ReducedWord(Word(letters_.begin(), letters_.begin() + n),
                     AlreadyReduced{});
}

ReducedWord reduce(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == inverse(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return ReducedWord(std::move(stack), ReducedWord::AlreadyReduced{});
}

ReducedWord product(const ReducedWord& u, const ReducedWord& v) {
  Word cat = u.letters();
  cat.insert(cat.end(), v.letters().begin(), v.letters().end());
  return reduce(cat);
}

ReducedWord inverse_word(const ReducedWord& u) {
  Word inv;
  inv.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    inv.push_back(inverse(*it));
  }
  return ReducedWord(std::move(inv));
}

bool is_cyclically_reduced(const ReducedWord& w) {
  if (w.size() <= 1) return true;
  return w.back() != inverse(w.front());
}

std::vector<ReducedWord> prefix_closure(const std::vector<ReducedWord>& words) {
  std::set<ReducedWord> out;
  out.insert(ReducedWord{});
  for (const ReducedWord& w : words) {
    for (std::size_t n = 1; n <= w.size(); ++n) out.insert(w.prefix(n));
  }
  return {out.begin(), out.end()};
}

Word parse_word(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(letter_from_char(c));
  return w;
}

ReducedWord parse_reduced(const std::string& text) {
  return ReducedWord(parse_word(text));
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(to_char(x));
  return s;
}

std::string to_string(const ReducedWord& w) { return to_string(w.letters()); }

}  // namespace freewalk
