#include <doctest.h>

#include <cmath>

#include "freewalk/step_distribution.hpp"
#include "test_util.hpp"

using namespace freewalk;

TEST_CASE("constructor enforces the distribution invariants") {
  CHECK_THROWS_AS(StepDistribution(std::vector<Atom>{}), ValidationError);
  CHECK_THROWS_AS(StepDistribution({{ReducedWord(), 1.0}}), ValidationError);
  CHECK_THROWS_AS(StepDistribution({{parse_reduced("a"), 0.999}}),
                  ValidationError);
  CHECK_THROWS_AS(StepDistribution({{parse_reduced("a"), 0.5},
                                    {parse_reduced("a"), 0.5}}),
                  ValidationError);
  CHECK_THROWS_AS(StepDistribution({{parse_reduced("a"), 1.5},
                                    {parse_reduced("b"), -0.5}}),
                  ValidationError);
  CHECK_NOTHROW(StepDistribution({{parse_reduced("a"), 0.5},
                                  {parse_reduced("b"), 0.5}}));
}

TEST_CASE("validate: uniform letters generate at radius 1") {
  auto report = validate(StepDistribution::uniform_letters(), 1);
  CHECK(report.generation_verified);
  CHECK(report.normalization_residual <= 1e-12);
  for (bool reached : report.letter_reached) CHECK(reached);
}

TEST_CASE("validate: a one-word support does not generate") {
  StepDistribution mu({{parse_reduced("ab"), 1.0}});
  auto report = validate(mu, 6);
  CHECK_FALSE(report.generation_verified);
}

TEST_CASE("validate: generation through cancellation is found") {
  // ab * (ab)^-1-ish products: {ab, A, B} generates as a semigroup since
  // ab*B = a and A, B are atoms; b = A*(ab).
  StepDistribution mu({{parse_reduced("ab"), 1.0 / 3},
                       {parse_reduced("A"), 1.0 / 3},
                       {parse_reduced("B"), 1.0 / 3}});
  auto report = validate(mu, 4);
  CHECK(report.generation_verified);
}

TEST_CASE("last-letter multiplicity over the prefix closure") {
  auto uniform = StepDistribution::uniform_letters();
  auto m = last_letter_multiplicity(uniform, Letter::a);
  CHECK(m.count == 1);
  REQUIRE(m.witnesses.size() == 1);
  CHECK(to_string(m.witnesses[0]) == "a");

  // {a, ba}: both "a" and "ba" end in 'a'.
  StepDistribution bad({{parse_reduced("a"), 0.5},
                        {parse_reduced("ba"), 0.5}});
  CHECK(last_letter_multiplicity(bad, Letter::a).count == 2);

  // The length-two support satisfies the hypothesis at 'a'.
  auto big = testutil::length_two_support_mu();
  CHECK(last_letter_multiplicity(big, Letter::a).count == 1);

  // Counts over all letters sum to the number of nonempty prefixes.
  int total = 0;
  for (Letter x : kAlphabet) total += last_letter_multiplicity(big, x).count;
  CHECK(total == static_cast<int>(prefix_closure(big.support()).size()) - 1);
}

TEST_CASE("sample_walk: determinism and degenerate support") {
  auto mu = StepDistribution::uniform_letters();
  auto one = sample_walk(mu, 50, 42);
  auto two = sample_walk(mu, 50, 42);
  CHECK(one.raw == two.raw);
  CHECK(one.reduced == two.reduced);
  CHECK(sample_walk(mu, 0, 1).reduced.empty());

  StepDistribution det({{parse_reduced("ab"), 1.0}});
  CHECK(to_string(sample_walk(det, 3, 7).reduced) == "ababab");
}

TEST_CASE("sample_walk: reduced form matches reducing the raw letters") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto mu = testutil::random_mu(rng);
    auto sample = sample_walk(mu, 100, 1000 + trial);
    CHECK(sample.reduced == reduce(sample.raw));
  }
}

TEST_CASE("uniform letter frequencies match within 4 sigma") {
  auto mu = StepDistribution::uniform_letters();
  const int n = 100000;
  auto sample = sample_walk(mu, n, 5);
  double sigma = std::sqrt(0.25 * 0.75 / n);
  std::array<int, 4> counts{};
  for (Letter x : sample.raw) counts[letter_index(x)]++;
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(counts[i] / static_cast<double>(n) - 0.25) <= 4 * sigma);
  }
}

TEST_CASE("nearest-neighbor drift is 1/2") {
  // Known escape rate of the uniform walk: |reduced(n)|/n -> 1/2.
  auto mu = StepDistribution::uniform_letters();
  const int n = 2000, trials = 200;
  double mean = 0.0;
  for (int t = 0; t < trials; ++t) {
    mean += static_cast<double>(sample_walk(mu, n, child_seed(99, t))
                                    .reduced.size()) /
            n;
  }
  mean /= trials;
  CHECK(std::abs(mean - 0.5) < 0.02);
}
