#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "freewalk/errors.hpp"

namespace freewalk {

// The four generators of F2.  The inverse of a letter flips the low bit, so
// inverse(inverse(x)) == x holds structurally.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr std::array<Letter, 4> kAlphabet = {Letter::a, Letter::A, Letter::b,
                                             Letter::B};

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

constexpr int letter_index(Letter x) { return static_cast<int>(x); }

char to_char(Letter x);
Letter letter_from_char(char c);  // throws ValidationError("ParseError") on bad char

// A raw (possibly unreduced) word.  The empty vector is the empty word.
using Word = std::vector<Letter>;

// A word with no adjacent cancelling pair.  Construction enforces the
// invariant; use reduce() to obtain one from an arbitrary Word.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Throws ValidationError("NotReduced") if the letters are not reduced.
  explicit ReducedWord(Word letters);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  ReducedWord prefix(std::size_t n) const;  // first n letters

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend bool operator<(const ReducedWord& u, const ReducedWord& v) {
    return u.letters_ < v.letters_;
  }

 private:
  struct AlreadyReduced {};
  ReducedWord(Word letters, AlreadyReduced) : letters_(std::move(letters)) {}
  friend ReducedWord reduce(const Word&);

  Word letters_;
};

// Unique reduced form: single left-to-right pass with a stack.
ReducedWord reduce(const Word& w);

// Group product: reduce(u concatenated with v).
ReducedWord product(const ReducedWord& u, const ReducedWord& v);

ReducedWord inverse_word(const ReducedWord& u);

// True iff w is empty, a single letter, or last(w) != inverse(first(w)).
bool is_cyclically_reduced(const ReducedWord& w);

// All prefixes of all inputs, including the empty word, sorted
// lexicographically (so the empty word is first).
std::vector<ReducedWord> prefix_closure(const std::vector<ReducedWord>& words);

// Text syntax: 'a','b' for generators, 'A','B' for their inverses, "" for
// the empty word.
Word parse_word(const std::string& text);
ReducedWord parse_reduced(const std::string& text);  // input must be reduced
std::string to_string(const Word& w);
std::string to_string(const ReducedWord& w);

}  // namespace freewalk
