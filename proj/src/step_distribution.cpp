#include "freewalk/step_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "freewalk/rng.hpp"

namespace freewalk {

StepDistribution::StepDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw ValidationError("EmptySupport", "step distribution has no atoms");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& x, const Atom& y) { return x.word < y.word; });
  double sum = 0.0;
  for (const Atom& atom : atoms_) {
    if (atom.word.empty()) {
      throw ValidationError("EpsilonAtom",
                            "the empty word is not allowed in the support");
    }
    if (!(atom.prob > 0.0) || atom.prob > 1.0) {
      throw ValidationError("NonNormalized",
                            "atom '" + to_string(atom.word) +
                                "' has probability outside (0, 1]");
    }
    sum += atom.prob;
  }
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i) {
    if (atoms_[i].word == atoms_[i + 1].word) {
      throw ValidationError("DuplicateAtom",
                            "word '" + to_string(atoms_[i].word) +
                                "' appears twice in the support");
    }
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw ValidationError("NonNormalized",
                          "probabilities sum to " + std::to_string(sum));
  }
}

StepDistribution StepDistribution::unchecked(std::vector<Atom> atoms) {
  StepDistribution mu;
  mu.atoms_ = std::move(atoms);
  std::sort(mu.atoms_.begin(), mu.atoms_.end(),
            [](const Atom& x, const Atom& y) { return x.word < y.word; });
  return mu;
}

StepDistribution StepDistribution::uniform_letters() {
  std::vector<Atom> atoms;
  for (Letter x : kAlphabet) {
    atoms.push_back({ReducedWord(Word{x}), 0.25});
  }
  return StepDistribution(std::move(atoms));
}

std::vector<ReducedWord> StepDistribution::support() const {
  std::vector<ReducedWord> words;
  words.reserve(atoms_.size());
  for (const Atom& atom : atoms_) words.push_back(atom.word);
  return words;
}

std::size_t StepDistribution::max_word_length() const {
  std::size_t m = 0;
  for (const Atom& atom : atoms_) m = std::max(m, atom.word.size());
  return m;
}

double StepDistribution::normalization_residual() const {
  double sum = 0.0;
  for (const Atom& atom : atoms_) sum += atom.prob;
  return std::abs(sum - 1.0);
}

double StepDistribution::mass(const ReducedWord& w) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), w,
      [](const Atom& atom, const ReducedWord& v) { return atom.word < v; });
  if (it != atoms_.end() && it->word == w) return it->prob;
  return 0.0;
}

ValidationReport validate(const StepDistribution& mu, int radius) {
  if (radius < 1) {
    throw ValidationError("BadRadius", "generation radius must be >= 1");
  }
  ValidationReport report;
  report.normalization_residual = mu.normalization_residual();
  report.support_size = mu.support_size();
  report.radius = radius;
  if (report.normalization_residual > StepDistribution::kNormalizationTol) {
    throw ValidationError("NonNormalized",
                          "probabilities deviate from 1 by " +
                              std::to_string(report.normalization_residual));
  }

  // BFS over products of up to `radius` support elements.  The node count
  // is capped; hitting the cap leaves generation unverified, never "false".
  constexpr std::size_t kNodeCap = 200000;
  std::set<ReducedWord> seen;
  std::deque<std::pair<ReducedWord, int>> queue;
  auto mark = [&report](const ReducedWord& w) {
    if (w.size() == 1) report.letter_reached[letter_index(w[0])] = true;
  };
  for (const Atom& atom : mu.atoms()) {
    if (seen.insert(atom.word).second) {
      mark(atom.word);
      queue.emplace_back(atom.word, 1);
    }
  }
  while (!queue.empty() && seen.size() < kNodeCap) {
    auto [w, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= radius) continue;
    bool all_found = true;
    for (bool found : report.letter_reached) all_found = all_found && found;
    if (all_found) break;
    for (const Atom& atom : mu.atoms()) {
      ReducedWord next = product(w, atom.word);
      if (seen.insert(next).second) {
        mark(next);
        queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  report.generation_verified = true;
  for (bool found : report.letter_reached) {
    report.generation_verified = report.generation_verified && found;
  }
  return report;
}

LastLetterReport last_letter_multiplicity(const StepDistribution& mu,
                                          Letter x) {
  LastLetterReport report;
  for (const ReducedWord& w : prefix_closure(mu.support())) {
    if (!w.empty() && w.back() == x) {
      ++report.count;
      report.witnesses.push_back(w);
    }
  }
  return report;
}

WalkSample sample_walk(const StepDistribution& mu, int n, std::uint64_t seed) {
  Rng rng(seed);
  WalkSample sample;
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform01();
    double acc = 0.0;
    const Atom* chosen = &mu.atoms().back();
    for (const Atom& atom : mu.atoms()) {
      acc += atom.prob;
      if (u < acc) {
        chosen = &atom;
        break;
      }
    }
    sample.raw.insert(sample.raw.end(), chosen->word.letters().begin(),
                      chosen->word.letters().end());
  }
  sample.reduced = reduce(sample.raw);
  return sample;
}

}  // namespace freewalk
