#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freewalk/schottky.hpp"
#include "freewalk/step_distribution.hpp"

namespace freewalk {

// Parsed run configuration; every command reads the subset it needs.
// Probabilities accept decimals or rational strings "p/q".
struct RunConfig {
  struct RepSpec {
    std::string type = "standard";  // "standard" or "explicit"
    double L = 4.0;
    // explicit form: generator entries [a_re, a_im, b_re, b_im] and the
    // four boundary arcs in letter order a, A, b, B.
    std::vector<double> gen_a, gen_b;
    std::vector<ArcInterval> arcs;
  };

  std::vector<Atom> mu_atoms;
  RepSpec rep;
  double solver_tol = 1e-12;
  long solver_max_iter = 1000000;
  std::uint64_t seed = 1;
  long trials = 1000;
  int ray_length = 400;
  int dimension_depth = 6;
  double dimension_tol = 1e-8;
  std::optional<int> validate_radius;
  std::vector<std::string> words;
  int mc_steps = 400;
  long mc_trials = 100000;
  std::string powerword_word = "ab";
  int powerword_nmax = 20;
  std::string additivity_w1 = "aa";
  std::string additivity_w2 = "ab";
  int gibbs_max_length = 8;
  int gibbs_per_length = 40;
  int figures_depth = 5;
};

// Parses and validates a JSON config document.  Unknown fields are
// rejected with ValidationError("SchemaError"); malformed JSON raises
// ValidationError("ParseError") with the position from the parser.
RunConfig parse_config(const std::string& text);

StepDistribution make_mu(const RunConfig& config);
SchottkyRep make_rep(const RunConfig& config);

}  // namespace freewalk
