#pragma once

#include <cstdint>
#include <vector>

#include "freewalk/boundary_chain.hpp"
#include "freewalk/dimension.hpp"
#include "freewalk/schottky.hpp"
#include "freewalk/step_distribution.hpp"

namespace freewalk {

struct HarmonicDimensionEstimate {
  double dim = 0.0;
  double dim_stderr = 0.0;
  double entropy = 0.0;        // mean of -log nu([r[1:n]]) / n
  double entropy_stderr = 0.0;
  double drift = 0.0;          // mean of dist(o, rho(r[1:n]) o) / n
  double drift_stderr = 0.0;
  int ray_length = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;  // entropy ~ 0: boundary measure is atomic
};

// Estimates dim(nu) = entropy / drift from sampled boundary rays, with
// exact per-ray cylinder evaluation and first-order error propagation
// (including the entropy-drift covariance).
HarmonicDimensionEstimate harmonic_dimension_estimate(const BoundaryChain& B,
                                                      const SchottkyRep& rep,
                                                      int n, long trials,
                                                      std::uint64_t seed);

struct ReportParams {
  int depth = 6;
  double dim_tol = 1e-8;
  int ray_length = 400;
  long trials = 1000;
  std::uint64_t seed = 1;
  double solver_tol = 1e-12;
  long solver_max_iter = 1000000;
};

struct DimensionDropReport {
  DimensionEstimate delta;              // limit-set dimension
  double delta_uncertainty = 0.0;       // bracket + depth-convergence term
  HarmonicDimensionEstimate harmonic;   // dim(nu) estimate
  double combined_uncertainty = 0.0;
  double margin = 0.0;                  // (delta - dim) / combined
  bool hypothesis_holds = false;        // unique-last-letter predicate at 'a'
  bool drop_detected = false;           // margin > 5
  bool degenerate = false;
};

DimensionDropReport dimension_drop_report(const StepDistribution& mu,
                                          const SchottkyRep& rep,
                                          const ReportParams& params);

struct PowerWordRate {
  std::vector<double> root_values;  // nu([w^n])^{1/n}, n = 1..n_max
  std::vector<double> ratios;       // nu([w^{n+1}]) / nu([w^n])
  double reference = 0.0;           // exp(-delta * ell(rho(w)))
  double translation_len = 0.0;
  double deviation = 0.0;           // |last ratio - reference|
};

// Exact cylinder decay rate along powers of a cyclically reduced word,
// against the no-drop reference rate.  Throws
// ValidationError("ZeroCylinder") when nu([w]) = 0.
PowerWordRate power_word_rate(const BoundaryChain& B, const SchottkyRep& rep,
                              const ReducedWord& w, int n_max, double delta);

// Sum over admissible hidden-state paths spelling w of the g-products
// (no f or h factors).
double path_sum(const BoundaryChain& B, const ReducedWord& w);

struct AdditivityResult {
  double len_product = 0.0;  // ell(rho(w1 w2))
  double len_sum = 0.0;      // ell(rho(w1)) + ell(rho(w2))
  double gap = 0.0;          // len_product - len_sum
  bool axes_intersect = false;
  bool sign_consistent = false;  // gap < 0 iff axes cross (0 gap is consistent)
  AxisEndpoints axis1, axis2;
};

// Translation-length additivity obstruction with the axis-configuration
// classification of the gap sign.
AdditivityResult additivity_test(const SchottkyRep& rep, const ReducedWord& w1,
                                 const ReducedWord& w2);

struct GibbsRow {
  std::size_t length = 0;
  int count = 0;
  double min_log_ratio = 0.0;  // of log(nu([w])) + delta * dist(o, rho(w) o)
  double max_log_ratio = 0.0;
  double log_spread = 0.0;     // max - min; growth in |w| is drop evidence
};

std::vector<GibbsRow> gibbs_comparison_diagnostic(
    const BoundaryChain& B, const SchottkyRep& rep, double delta,
    const std::vector<ReducedWord>& words);

}  // namespace freewalk
