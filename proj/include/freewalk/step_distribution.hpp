#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "freewalk/words.hpp"

namespace freewalk {

struct Atom {
  ReducedWord word;
  double prob = 0.0;
};

// Finitely supported step distribution mu on nonempty reduced words.
// Immutable after construction; the constructor enforces the hard
// invariants (nonempty support, no empty-word atom, probabilities in (0,1]
// summing to 1 within 1e-12).
class StepDistribution {
 public:
  static constexpr double kNormalizationTol = 1e-12;

  explicit StepDistribution(std::vector<Atom> atoms);

  // Bypasses invariant checks; for fault-injection fixtures only.
  static StepDistribution unchecked(std::vector<Atom> atoms);

  static StepDistribution uniform_letters();  // mass 1/4 on each of a,A,b,B

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  std::vector<ReducedWord> support() const;
  std::size_t max_word_length() const;
  double normalization_residual() const;

  // Probability of a single word (0 if not in the support).
  double mass(const ReducedWord& w) const;

 private:
  StepDistribution() = default;
  std::vector<Atom> atoms_;  // sorted by word
};

struct ValidationReport {
  double normalization_residual = 0.0;
  std::size_t support_size = 0;
  int radius = 0;
  std::array<bool, 4> letter_reached{};  // indexed by letter_index
  bool generation_verified = false;      // all four letters reached by BFS
};

// Normalization plus the sufficient semigroup-generation check: BFS over
// products of at most `radius` support elements, looking for all four
// single letters as group elements.  An unverified result is a warning
// carried in the report, not an error.
ValidationReport validate(const StepDistribution& mu, int radius);

inline int default_validation_radius(const StepDistribution& mu) {
  return 2 * static_cast<int>(mu.max_word_length());
}

struct LastLetterReport {
  int count = 0;
  std::vector<ReducedWord> witnesses;
};

// Number of elements of Prefix(supp(mu)) \ {empty} whose last letter is x.
// The unique-last-letter hypothesis holds for x iff count == 1.
LastLetterReport last_letter_multiplicity(const StepDistribution& mu, Letter x);

struct WalkSample {
  Word raw;             // g_1 ... g_n concatenated
  ReducedWord reduced;  // reduced form of the product
};

// n i.i.d. draws from mu; bit-reproducible given the seed.
WalkSample sample_walk(const StepDistribution& mu, int n, std::uint64_t seed);

}  // namespace freewalk
