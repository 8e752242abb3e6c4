// End-to-end acceptance suite: one line per criterion, pass/fail, with the
// pinned tolerances.  Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "freewalk/boundary_chain.hpp"
#include "freewalk/dimension.hpp"
#include "freewalk/experiments.hpp"
#include "freewalk/prefix_graph.hpp"
#include "test_util.hpp"

using namespace freewalk;
using testutil::random_mu;
using testutil::random_reduced;

namespace {

int failures = 0;
std::string detail;

void criterion(int number, const char* description,
               const std::function<bool()>& run) {
  bool ok = false;
  detail.clear();
  try {
    ok = run();
  } catch (const std::exception& err) {
    detail = err.what();
  }
  if (!ok) ++failures;
  std::printf("[%2d] %s  %s%s%s\n", number, ok ? "PASS" : "FAIL", description,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool expect(bool ok, const std::string& note) {
  if (!ok && detail.empty()) detail = note;
  return ok;
}

BoundaryChain chain_for(const StepDistribution& mu) {
  auto P = kernel(build_prefix_graph(mu));
  return build_boundary_chain(solve_first_passage(P), P);
}

double nu(const BoundaryChain& B, const ReducedWord& w) {
  return cylinder_probability(B, w).value;
}

}  // namespace

int main() {
  criterion(1, "flow conservation residual <= 1e-12, 50 random distributions",
            [] {
              Rng rng(1001);
              for (int t = 0; t < 50; ++t) {
                double residual = check_flow(build_prefix_graph(random_mu(rng)));
                if (!expect(residual <= 1e-12,
                            "residual " + std::to_string(residual))) {
                  return false;
                }
              }
              return true;
            });

  criterion(2, "excursion path products equal mu within 1e-12, same 50",
            [] {
              Rng rng(1001);  // the same 50 distributions as criterion 1
              for (int t = 0; t < 50; ++t) {
                auto mu = random_mu(rng);
                auto g = build_prefix_graph(mu);
                auto P = kernel(g);
                for (const Atom& atom : mu.atoms()) {
                  double prob = excursion_probability(g, P, atom.word);
                  if (!expect(std::abs(prob - atom.prob) <= 1e-12,
                              "atom " + to_string(atom.word))) {
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(
      3, "supp {a,aa,b}: exact non-Markov cylinder ratios (20 random vectors)",
      [] {
        Rng rng(1003);
        auto ratios = [](const BoundaryChain& B) {
          return std::pair<double, double>(
              nu(B, parse_reduced("ab")) / nu(B, parse_reduced("a")),
              nu(B, parse_reduced("aab")) / nu(B, parse_reduced("aa")));
        };
        for (int t = 0; t < 20; ++t) {
          double p1 = 0.05 + rng.uniform01(), p2 = 0.05 + rng.uniform01(),
                 p3 = 0.05 + rng.uniform01();
          double total = p1 + p2 + p3;
          p1 /= total, p2 /= total, p3 /= total;
          auto [r1, r2] = ratios(chain_for(testutil::small_support_mu(p1, p2, p3)));
          double e1 = p1 * p3 / (p1 + p2);
          double e2 = (p1 * p1 * p3 + p2 * p3) / (p1 * p1 + p1 * p2 + p2);
          if (!expect(std::abs(r1 - e1) <= 1e-9, "first ratio off")) return false;
          if (!expect(std::abs(r2 - e2) <= 1e-9, "second ratio off")) return false;
          if (!expect(std::abs(r1 - r2) > 1e-6, "ratios not distinct")) {
            return false;
          }
        }
        auto [r1, r2] =
            ratios(chain_for(testutil::small_support_mu(1.0 / 3, 1.0 / 3, 1.0 / 3)));
        return expect(std::abs(r1 - 1.0 / 6) <= 1e-9, "1/6 value") &&
               expect(std::abs(r2 - 4.0 / 15) <= 1e-9, "4/15 value");
      });

  criterion(4, "uniform letters: F = 1/3, h = 3/4, nu([x]) = 1/4, off-diag 1/3",
            [] {
              auto P = kernel(
                  build_prefix_graph(StepDistribution::uniform_letters()));
              auto F = solve_first_passage(P);
              for (int tgt = 0; tgt < 4; ++tgt) {
                for (int src = 0; src <= 4; ++src) {
                  if (!expect(std::abs(F.at(F.proj[tgt], src, tgt) - 1.0 / 3) <=
                                  1e-9,
                              "first-passage value")) {
                    return false;
                  }
                }
              }
              auto B = build_boundary_chain(F, P);
              for (int s = 0; s < 4; ++s) {
                if (!expect(std::abs(B.h[s] - 0.75) <= 1e-9, "h")) return false;
                if (!expect(std::abs(nu(B, ReducedWord(Word{B.proj[s]})) -
                                     0.25) <= 1e-9,
                            "single-letter cylinder")) {
                  return false;
                }
                for (int t = 0; t < 4; ++t) {
                  double want =
                      B.proj[t] == inverse(B.proj[s]) ? 0.0 : 1.0 / 3;
                  if (!expect(std::abs(B.phat_at(s, t) - want) <= 1e-9,
                              "kernel entry")) {
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(5, "exact vs Monte Carlo oracle within 4 SE (20 pairs, 1e5 trials)",
            [] {
              Rng rng(1005);
              for (int t = 0; t < 20; ++t) {
                auto mu = random_mu(rng);
                auto B = chain_for(mu);
                // A word of positive measure: prefix of a sampled ray.
                int len = 1 + static_cast<int>(rng.uniform01() * 3);
                ReducedWord w =
                    sample_boundary(B, len, child_seed(77, t)).prefix(len);
                double exact = nu(B, w);
                auto mc = mc_cylinder_oracle(mu, w, 400, 100000,
                                             child_seed(177, t));
                // The 1e-9 floor covers exact-solver tolerance when the
                // cylinder mass is 0 or 1 and the binomial SE vanishes.
                double slack = 4 * mc.stderr_ + 1e-9;
                if (!expect(std::abs(exact - mc.estimate) <= slack,
                            "word " + to_string(w) + " exact " +
                                std::to_string(exact) + " mc " +
                                std::to_string(mc.estimate))) {
                  return false;
                }
              }
              return true;
            });

  criterion(6, "cylinder additivity to 1e-9 for all |w| <= 6, 10 random mu",
            [] {
              Rng rng(1006);
              for (int t = 0; t < 10; ++t) {
                auto B = chain_for(random_mu(rng, 5, 3));
                std::vector<ReducedWord> frontier = {ReducedWord()};
                for (int len = 0; len <= 6; ++len) {
                  std::vector<ReducedWord> next;
                  for (const ReducedWord& w : frontier) {
                    double total = 0.0;
                    for (Letter x : kAlphabet) {
                      if (!w.empty() && x == inverse(w.back())) continue;
                      Word wx = w.letters();
                      wx.push_back(x);
                      ReducedWord ext(wx);
                      total += nu(B, ext);
                      next.push_back(ext);
                    }
                    if (!expect(std::abs(total - nu(B, w)) <= 1e-9,
                                "at word " + to_string(w))) {
                      return false;
                    }
                  }
                  frontier = std::move(next);
                }
              }
              return true;
            });

  criterion(7, "derivative identity |(g^-1)'(xi)| = exp(b_xi(o, g o)) to 1e-9",
            [] {
              Rng rng(1007);
              auto rep = standard_schottky(4.0);
              for (int t = 0; t < 100; ++t) {
                ReducedWord w = random_reduced(
                    rng, 1 + static_cast<int>(rng.uniform01() * 5));
                MobiusMap g = rep_of_word(rep, w);
                double xi = 2 * 3.14159265358979324 * rng.uniform01() -
                            3.14159265358979324;
                double lhs = boundary_derivative(g.inverse(), xi);
                double rhs = std::exp(
                    busemann(xi, Complex(0, 0), g.apply(Complex(0, 0))));
                if (!expect(std::abs(lhs - rhs) <=
                                1e-9 * std::max(1.0, std::abs(rhs)),
                            "identity residual")) {
                  return false;
                }
                // Finite differences along the circle.
                const double step = 1e-6;
                auto on_circle = [&](double theta) {
                  Complex z = std::polar(1.0, theta);
                  return (g.a * z + g.b) / (std::conj(g.b) * z + std::conj(g.a));
                };
                double fd = std::abs(on_circle(xi + step) - on_circle(xi)) /
                            (2.0 * std::sin(step / 2));
                if (!expect(std::abs(boundary_derivative(g, xi) - fd) <=
                                1e-4 * std::max(1.0, fd),
                            "finite differences")) {
                  return false;
                }
              }
              return true;
            });

  criterion(8, "translation length: trace vs iterate limit (50 words), "
               "ell(rho(a)) = L",
            [] {
              auto rep = standard_schottky(4.0);
              if (!expect(std::abs(translation_length(rep.gen(Letter::a)) -
                                   4.0) <= 1e-9,
                          "generator length")) {
                return false;
              }
              Rng rng(1008);
              for (int t = 0; t < 50; ++t) {
                ReducedWord w = random_reduced(
                    rng, 1 + static_cast<int>(rng.uniform01() * 5));
                ScaledMobius g = rep_of_word_scaled(rep, w);
                ScaledMobius p = g;
                for (int k = 0; k < 10; ++k) p = compose(p, p);
                double oracle =
                    (displacement(compose(p, p)) - displacement(p)) / 1024.0;
                if (!expect(std::abs(translation_length(g) - oracle) <= 1e-6,
                            "word " + to_string(w))) {
                  return false;
                }
              }
              return true;
            });

  criterion(9, "Hausdorff dimension: Cauchy at depth 7, monotone radius, "
               "box oracle 0.05, decreasing in L",
            [] {
              auto rep = standard_schottky(4.0);
              auto est = hausdorff_dimension(rep, 7, 1e-8);
              double d6 = 0.0, d7 = est.value;
              for (const auto& [depth, value] : est.convergence) {
                if (depth == 6) d6 = value;
              }
              if (!expect(std::abs(d7 - d6) < 1e-3, "depth convergence")) {
                return false;
              }
              auto sys = refine(rep, 4);
              double last = 1e9;
              for (int k = 0; k <= 10; ++k) {
                double radius = spectral_radius(sys, 0.1 * k);
                if (!expect(radius < last, "radius not decreasing")) {
                  return false;
                }
                last = radius;
              }
              if (!expect(std::abs(box_counting_oracle(rep, 7) - d7) <= 0.05,
                          "box-counting oracle")) {
                return false;
              }
              double prev = 1.0;
              for (double L : {3.0, 4.0, 5.0, 6.0}) {
                double delta =
                    hausdorff_dimension(standard_schottky(L), 6, 1e-8).value;
                if (!expect(delta < prev, "delta not decreasing in L")) {
                  return false;
                }
                prev = delta;
              }
              return true;
            });

  criterion(10, "translation-length additivity obstruction (aa, ab), "
                "L in {3,4,5,6}, sign matches the axis configuration",
            [] {
              for (double L : {3.0, 4.0, 5.0, 6.0}) {
                auto result =
                    additivity_test(standard_schottky(L), parse_reduced("aa"),
                                    parse_reduced("ab"));
                if (!expect(std::abs(result.gap) > 1e-6, "gap too small")) {
                  return false;
                }
                if (!expect(result.sign_consistent, "sign classification")) {
                  return false;
                }
              }
              return true;
            });

  criterion(11, "dimension drop: margin > 5x uncertainty, seed-reproducible "
                "(uniform mu, L = 4, 1000 rays of length 400, depth 6)",
            [] {
              ReportParams params;  // spec defaults
              auto mu = StepDistribution::uniform_letters();
              auto rep = standard_schottky(4.0);
              auto report = dimension_drop_report(mu, rep, params);
              if (!expect(report.hypothesis_holds, "hypothesis")) return false;
              if (!expect(!report.degenerate, "degenerate")) return false;
              if (!expect(report.harmonic.dim < report.delta.value,
                          "no drop in point estimates")) {
                return false;
              }
              if (!expect(report.margin > 5.0,
                          "margin " + std::to_string(report.margin))) {
                return false;
              }
              if (!expect(report.drop_detected, "verdict flag")) return false;
              // Sanity bound the other way.
              if (!expect(report.harmonic.dim <=
                              report.delta.value +
                                  3 * report.combined_uncertainty,
                          "estimate above delta")) {
                return false;
              }
              auto again = dimension_drop_report(mu, rep, params);
              return expect(report.harmonic.dim == again.harmonic.dim &&
                                report.delta.value == again.delta.value &&
                                report.margin == again.margin,
                            "not reproducible");
            });

  criterion(12, "unique-last-letter hypothesis predicate on three supports",
            [] {
              auto holds = [](const StepDistribution& mu) {
                return last_letter_multiplicity(mu, Letter::a).count == 1;
              };
              if (!expect(holds(StepDistribution::uniform_letters()),
                          "uniform should pass")) {
                return false;
              }
              if (!expect(holds(testutil::length_two_support_mu()),
                          "length-2 support should pass")) {
                return false;
              }
              StepDistribution bad({{parse_reduced("a"), 0.5},
                                    {parse_reduced("ba"), 0.5}});
              return expect(!holds(bad), "{a, ba} should fail");
            });

  criterion(13, "path-sum factorization over a-separated blocks to 1e-12 "
                "(20 random pairs)",
            [] {
              auto B = chain_for(testutil::length_two_support_mu());
              Rng rng(1013);
              int checked = 0;
              while (checked < 20) {
                ReducedWord w1 = random_reduced(
                    rng, 1 + static_cast<int>(rng.uniform01() * 4));
                ReducedWord w2 = random_reduced(
                    rng, 1 + static_cast<int>(rng.uniform01() * 4));
                if (w1.front() == Letter::A || w1.back() == Letter::A) continue;
                if (w2.front() == Letter::A || w2.back() == Letter::A) continue;
                ReducedWord a = parse_reduced("a");
                ReducedWord awa1 = product(product(a, w1), a);
                ReducedWord awa2 = product(product(a, w2), a);
                ReducedWord joined = product(awa1, product(w2, a));
                double lhs = path_sum(B, joined);
                double rhs = path_sum(B, awa1) * path_sum(B, awa2);
                if (!expect(std::abs(lhs - rhs) <=
                                1e-12 * std::max(1.0, std::abs(rhs)),
                            "pair " + to_string(w1) + ", " + to_string(w2))) {
                  return false;
                }
                ++checked;
              }
              return true;
            });

  std::printf("%d of 13 criteria passed\n", 13 - failures);
  return failures == 0 ? 0 : 1;
}
