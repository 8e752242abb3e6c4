#include "freewalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "freewalk/prefix_graph.hpp"
#include "freewalk/rng.hpp"

namespace freewalk {

HarmonicDimensionEstimate harmonic_dimension_estimate(const BoundaryChain& B,
                                                      const SchottkyRep& rep,
                                                      int n, long trials,
                                                      std::uint64_t seed) {
  if (n < 50) throw ValidationError("BadLength", "ray length must be >= 50");
  if (trials < 100) throw ValidationError("BadTrials", "need >= 100 trials");

  HarmonicDimensionEstimate est;
  est.ray_length = n;
  est.trials = trials;
  est.seed = seed;

  std::vector<double> entropies(trials), drifts(trials);
  for (long i = 0; i < trials; ++i) {
    ReducedWord ray =
        sample_boundary(B, n, child_seed(seed, static_cast<std::uint64_t>(i)));
    entropies[i] = -log_cylinder_probability(B, ray) / n;
    drifts[i] = displacement(rep_of_word_scaled(rep, ray)) / n;
  }

  auto mean_of = [&](const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
  };
  const double N = static_cast<double>(trials);
  est.entropy = mean_of(entropies);
  est.drift = mean_of(drifts);
  double var_h = 0.0, var_l = 0.0, cov = 0.0;
  for (long i = 0; i < trials; ++i) {
    var_h += (entropies[i] - est.entropy) * (entropies[i] - est.entropy);
    var_l += (drifts[i] - est.drift) * (drifts[i] - est.drift);
    cov += (entropies[i] - est.entropy) * (drifts[i] - est.drift);
  }
  var_h /= N * (N - 1.0);
  var_l /= N * (N - 1.0);
  cov /= N * (N - 1.0);
  est.entropy_stderr = std::sqrt(var_h);
  est.drift_stderr = std::sqrt(var_l);

  if (!(est.drift > 0.0)) {
    throw SolverError("DegenerateDistribution",
                      "nonpositive drift estimate " + std::to_string(est.drift));
  }
  if (est.entropy < 1e-12) {
    est.degenerate = true;
    est.dim = 0.0;
    est.dim_stderr = 0.0;
    return est;
  }

  est.dim = est.entropy / est.drift;
  // First-order propagation for a ratio of correlated means.
  const double l2 = est.drift * est.drift;
  double var_dim = var_h / l2 +
                   est.entropy * est.entropy / (l2 * l2) * var_l -
                   2.0 * est.entropy / (l2 * est.drift) * cov;
  est.dim_stderr = std::sqrt(std::max(var_dim, 0.0));
  return est;
}

DimensionDropReport dimension_drop_report(const StepDistribution& mu,
                                          const SchottkyRep& rep,
                                          const ReportParams& params) {
  DimensionDropReport report;
  validate(mu, default_validation_radius(mu));
  report.hypothesis_holds = last_letter_multiplicity(mu, Letter::a).count == 1;

  report.delta = hausdorff_dimension(rep, params.depth, params.dim_tol);
  double depth_term = 0.0;
  if (report.delta.convergence.size() >= 2) {
    const auto& conv = report.delta.convergence;
    depth_term = std::abs(conv[conv.size() - 1].second -
                          conv[conv.size() - 2].second);
  }
  report.delta_uncertainty =
      std::max(depth_term, (report.delta.hi - report.delta.lo) / 2.0);

  ChainKernel P = kernel(build_prefix_graph(mu));
  FirstPassageFamily F =
      solve_first_passage(P, params.solver_tol, params.solver_max_iter);
  BoundaryChain B = build_boundary_chain(F, P);
  report.harmonic = harmonic_dimension_estimate(
      B, rep, params.ray_length, params.trials, params.seed);
  report.degenerate = report.harmonic.degenerate;

  report.combined_uncertainty =
      std::sqrt(report.delta_uncertainty * report.delta_uncertainty +
                report.harmonic.dim_stderr * report.harmonic.dim_stderr);
  report.margin = (report.delta.value - report.harmonic.dim) /
                  report.combined_uncertainty;
  report.drop_detected = report.margin > 5.0;
  return report;
}

PowerWordRate power_word_rate(const BoundaryChain& B, const SchottkyRep& rep,
                              const ReducedWord& w, int n_max, double delta) {
  if (!is_cyclically_reduced(w) || w.empty()) {
    throw ValidationError("NotCyclicallyReduced",
                          "'" + to_string(w) + "' is not cyclically reduced");
  }
  PowerWordRate out;
  out.translation_len = translation_length(rep_of_word_scaled(rep, w));
  out.reference = std::exp(-delta * out.translation_len);

  std::vector<double> logs(n_max);
  Word power;
  for (int n = 1; n <= n_max; ++n) {
    power.insert(power.end(), w.letters().begin(), w.letters().end());
    logs[n - 1] = log_cylinder_probability(B, ReducedWord(power));
    if (std::isinf(logs[n - 1])) {
      throw ValidationError("ZeroCylinder",
                            "nu([" + to_string(ReducedWord(power)) +
                                "]) = 0");
    }
    out.root_values.push_back(std::exp(logs[n - 1] / n));
    if (n > 1) out.ratios.push_back(std::exp(logs[n - 1] - logs[n - 2]));
  }
  if (!out.ratios.empty()) {
    out.deviation = std::abs(out.ratios.back() - out.reference);
  }
  return out;
}

double path_sum(const BoundaryChain& B, const ReducedWord& w) {
  if (w.empty()) return 1.0;
  const int m = B.state_count();
  std::vector<double> v(m, 0.0);
  for (int s = 0; s < m; ++s) {
    if (B.proj[s] == w[0]) v[s] = 1.0;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<double> next(m, 0.0);
    for (int t = 0; t < m; ++t) {
      if (B.proj[t] != w[i]) continue;
      for (int s = 0; s < m; ++s) next[t] += v[s] * B.g_at(s, t);
    }
    v = std::move(next);
  }
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum;
}

namespace {
double angle_span_from(double base, double theta) {
  double d = theta - base;
  while (d < 0.0) d += 2.0 * std::atan(1.0) * 4.0;
  return d;
}

bool geodesics_cross(const AxisEndpoints& u, const AxisEndpoints& v) {
  // The axes cross iff the endpoints of v separate those of u on the circle.
  double span = angle_span_from(u.repelling, u.attracting);
  bool inside1 = angle_span_from(u.repelling, v.attracting) < span;
  bool inside2 = angle_span_from(u.repelling, v.repelling) < span;
  return inside1 != inside2;
}
}  // namespace

AdditivityResult additivity_test(const SchottkyRep& rep, const ReducedWord& w1,
                                 const ReducedWord& w2) {
  AdditivityResult out;
  MobiusMap g1 = rep_of_word(rep, w1);
  MobiusMap g2 = rep_of_word(rep, w2);
  MobiusMap g12 = rep_of_word(rep, product(w1, w2));
  const double l1 = translation_length(g1);
  const double l2 = translation_length(g2);
  out.len_product = translation_length(g12);
  if (l1 <= 0.0 || l2 <= 0.0 || out.len_product <= 0.0) {
    throw ValidationError("NotHyperbolic",
                          "all three words must be hyperbolic");
  }
  out.len_sum = l1 + l2;
  out.gap = out.len_product - out.len_sum;
  out.axis1 = axis_endpoints(g1);
  out.axis2 = axis_endpoints(g2);
  out.axes_intersect = geodesics_cross(out.axis1, out.axis2);
  if (std::abs(out.gap) <= 1e-9) {
    out.sign_consistent = true;  // common axis: additivity holds exactly
  } else {
    out.sign_consistent = (out.gap < 0.0) == out.axes_intersect;
  }
  return out;
}

std::vector<GibbsRow> gibbs_comparison_diagnostic(
    const BoundaryChain& B, const SchottkyRep& rep, double delta,
    const std::vector<ReducedWord>& words) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw ValidationError("BadDelta", "delta must be in (0, 1)");
  }
  std::map<std::size_t, GibbsRow> rows;
  for (const ReducedWord& w : words) {
    double log_nu = log_cylinder_probability(B, w);
    if (std::isinf(log_nu)) continue;  // zero cylinders carry no ratio
    double log_ratio =
        log_nu + delta * displacement(rep_of_word_scaled(rep, w));
    auto [it, inserted] = rows.try_emplace(w.size());
    GibbsRow& row = it->second;
    if (inserted) {
      row.length = w.size();
      row.min_log_ratio = row.max_log_ratio = log_ratio;
    } else {
      row.min_log_ratio = std::min(row.min_log_ratio, log_ratio);
      row.max_log_ratio = std::max(row.max_log_ratio, log_ratio);
    }
    ++row.count;
  }
  std::vector<GibbsRow> out;
  for (auto& [length, row] : rows) {
    row.log_spread = row.max_log_ratio - row.min_log_ratio;
    out.push_back(row);
  }
  return out;
}

}  // namespace freewalk
