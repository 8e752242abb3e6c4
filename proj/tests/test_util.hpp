#pragma once

// Shared fixtures and random generators for the test suite.

#include <cmath>
#include <vector>

#include "freewalk/rng.hpp"
#include "freewalk/step_distribution.hpp"
#include "freewalk/words.hpp"

namespace freewalk::testutil {

// Uniform random letter.
inline Letter random_letter(Rng& rng) {
  return static_cast<Letter>(static_cast<int>(rng.uniform01() * 4.0) & 3);
}

// Random (possibly unreduced) word of the given length.
inline Word random_word(Rng& rng, int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(random_letter(rng));
  return w;
}

// Random reduced word of exactly the given length.
inline ReducedWord random_reduced(Rng& rng, int length) {
  Word w;
  while (static_cast<int>(w.size()) < length) {
    Letter x = random_letter(rng);
    if (!w.empty() && w.back() == inverse(x)) continue;
    w.push_back(x);
  }
  return ReducedWord(std::move(w));
}

// Random step distribution: support size <= max_support, word length <=
// max_len, probabilities normalized.  Duplicates are skipped, so the
// support may come out smaller than requested.
inline StepDistribution random_mu(Rng& rng, int max_support = 8,
                                  int max_len = 4) {
  const int target = 1 + static_cast<int>(rng.uniform01() * max_support);
  std::vector<Atom> atoms;
  while (static_cast<int>(atoms.size()) < target) {
    int len = 1 + static_cast<int>(rng.uniform01() * max_len);
    ReducedWord w = random_reduced(rng, len);
    bool dup = false;
    for (const Atom& atom : atoms) dup = dup || atom.word == w;
    if (dup) continue;
    atoms.push_back({w, 0.0});
  }
  double total = 0.0;
  for (Atom& atom : atoms) {
    atom.prob = 0.05 + rng.uniform01();
    total += atom.prob;
  }
  for (Atom& atom : atoms) atom.prob /= total;
  return StepDistribution(atoms);
}

// The worked small-support example: supp = {a, aa, b} with probabilities
// (p1, p2, p3).
inline StepDistribution small_support_mu(double p1, double p2, double p3) {
  return StepDistribution({{parse_reduced("a"), p1},
                           {parse_reduced("aa"), p2},
                           {parse_reduced("b"), p3}});
}

// Uniform distribution on the 13-word support
// {a, ab, aB} u {b, A, B, bb, bA, Ab, AA, AB, BA, BB}: every nonempty
// prefix ends in a distinct letter for 'a' (only "a" does), so the
// unique-last-letter hypothesis holds at 'a' while the walk still has
// steps of length 2.
inline StepDistribution length_two_support_mu() {
  const char* support[] = {"a",  "ab", "aB", "b",  "A",  "B",  "bb",
                           "bA", "Ab", "AA", "AB", "BA", "BB"};
  std::vector<Atom> atoms;
  for (const char* text : support) {
    atoms.push_back({parse_reduced(text), 1.0 / 13.0});
  }
  return StepDistribution(atoms);
}

}  // namespace freewalk::testutil
