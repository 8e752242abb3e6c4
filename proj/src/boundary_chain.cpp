#include "freewalk/boundary_chain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "freewalk/rng.hpp"

namespace freewalk {

namespace {

// Kernel vertex index of state s (states drop the empty word at vertex 0).
inline int vertex_of(int state) { return state + 1; }

}  // namespace

FirstPassageFamily solve_first_passage(const ChainKernel& P, double tol,
                                       long max_iter) {
  if (tol <= 0.0) throw ValidationError("BadTolerance", "tol must be > 0");
  FirstPassageFamily F;
  const int n = P.size();
  const int m = n - 1;
  F.states.assign(P.vertices.begin() + 1, P.vertices.end());
  for (const ReducedWord& s : F.states) F.proj.push_back(s.back());
  for (auto& fx : F.f) fx.assign(static_cast<std::size_t>(m + 1) * m, 0.0);

  // P(src, tgt) with src in {0..m} (m = empty chain state), tgt a vertex.
  auto kernel_at = [&](int src, int vertex) {
    return P.at(src == m ? 0 : vertex_of(src), vertex);
  };

  // One Gauss-Seidel sweep over all (x, src, tgt) in fixed order; the map
  // is monotone from zero, so iterates increase to the minimal fixed point.
  double update = 0.0;
  long iter = 0;
  for (iter = 0; iter < max_iter; ++iter) {
    update = 0.0;
    for (int xi = 0; xi < 4; ++xi) {
      const Letter x = static_cast<Letter>(xi);
      std::vector<double>& fx = F.f[xi];
      for (int src = 0; src <= m; ++src) {
        for (int tgt = 0; tgt < m; ++tgt) {
          if (F.proj[tgt] != x) continue;
          // Step to the empty chain state appends no letter.
          double val = kernel_at(src, 0) * fx[m * m + tgt];
          // Direct crossing in direction x.
          val += kernel_at(src, vertex_of(tgt));
          // Step in some other direction y: first return via y^{-1}, then
          // cross in direction x from the original tree vertex.
          for (int mid = 0; mid < m; ++mid) {
            const Letter y = F.proj[mid];
            if (y == x) continue;
            const double p_mid = kernel_at(src, vertex_of(mid));
            if (p_mid == 0.0) continue;
            const std::vector<double>& f_back = F.f[letter_index(inverse(y))];
            double chained = 0.0;
            for (int ret = 0; ret < m; ++ret) {
              if (F.proj[ret] != inverse(y)) continue;
              chained += f_back[mid * m + ret] * fx[ret * m + tgt];
            }
            val += p_mid * chained;
          }
          const double old = fx[src * m + tgt];
          if (val < old - 1e-12) {
            throw SolverError("NotConverged",
                              "monotone iteration decreased; kernel is not "
                              "row-stochastic");
          }
          update = std::max(update, std::abs(val - old));
          fx[src * m + tgt] = val;
        }
      }
    }
    if (update < tol) break;
  }
  F.iterations = iter + 1;
  F.residual = update;
  if (update >= tol) {
    throw SolverError("NotConverged",
                      "first-passage iteration residual " +
                          std::to_string(update) + " after " +
                          std::to_string(max_iter) + " sweeps");
  }
  return F;
}

BoundaryChain build_boundary_chain(const FirstPassageFamily& F,
                                   const ChainKernel& P) {
  (void)P;
  constexpr double kTol = 1e-9;
  BoundaryChain B;
  const int m = F.state_count();
  const int eps = F.epsilon_source();
  B.states = F.states;
  B.proj = F.proj;

  B.f.resize(m);
  for (int s = 0; s < m; ++s) B.f[s] = F.at(B.proj[s], eps, s);

  B.g.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) {
      if (B.proj[t] == inverse(B.proj[s])) continue;
      B.g[s * m + t] = F.at(B.proj[t], s, t);
    }
  }

  // h solves (I - M) h = c with
  //   c(s) = 1 - sum_{s'} F_{x^-1}(s, s'),
  //   M(s, s'') = sum_{s'} F_{x^-1}(s, s') F_x(s', s''),   x = proj(s).
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd c(m);
  for (int s = 0; s < m; ++s) {
    const Letter x = B.proj[s];
    const Letter xinv = inverse(x);
    double lost = 0.0;
    for (int t = 0; t < m; ++t) {
      if (B.proj[t] != xinv) continue;
      const double back = F.at(xinv, s, t);
      lost += back;
      for (int u = 0; u < m; ++u) {
        if (B.proj[u] != x) continue;
        M(s, u) += back * F.at(x, t, u);
      }
    }
    c(s) = 1.0 - lost;
  }

  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m) - M;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);

  // Spectral radius of M, for the diagnostic (and the singularity report).
  {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(m);
    double radius = 0.0;
    for (int it = 0; it < 10000; ++it) {
      Eigen::VectorXd w = M * v;
      double norm = w.norm();
      if (norm == 0.0) {
        radius = 0.0;
        break;
      }
      double next = norm / v.norm();
      v = w / norm;
      if (std::abs(next - radius) < 1e-13 * std::max(1.0, radius)) {
        radius = next;
        break;
      }
      radius = next;
    }
    B.h_spectral_radius = radius;
  }
  if (!lu.isInvertible()) {
    throw SolverError("SingularSystem",
                      "h system is singular; iteration operator spectral "
                      "radius estimate " +
                          std::to_string(B.h_spectral_radius));
  }
  Eigen::VectorXd h = lu.solve(c);
  B.h_residual = (system * h - c).cwiseAbs().maxCoeff();
  if (B.h_residual > 1e-12) {
    throw SolverError("SingularSystem",
                      "h system residual " + std::to_string(B.h_residual));
  }
  B.h.assign(h.data(), h.data() + m);
  // States whose vertex is almost surely abandoned have h = 0 exactly; the
  // linear solve returns noise at residual scale there.  Clamp so the
  // derived kernel does not divide two roundoff-sized numbers.
  for (double& value : B.h) {
    if (value < kTol) value = 0.0;
  }

  B.p.resize(m);
  double total = 0.0;
  for (int s = 0; s < m; ++s) {
    B.p[s] = B.f[s] * B.h[s];
    total += B.p[s];
  }
  if (std::abs(total - 1.0) > kTol) {
    throw SolverError("NormalizationFailure",
                      "initial law sums to " + std::to_string(total) +
                          "; the walk does not converge to the boundary as "
                          "constructed");
  }

  B.phat.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int s = 0; s < m; ++s) {
    if (B.h[s] <= 0.0) continue;
    double row = 0.0;
    for (int t = 0; t < m; ++t) {
      B.phat[s * m + t] = B.g[s * m + t] * B.h[t] / B.h[s];
      row += B.phat[s * m + t];
    }
    if (std::abs(row - 1.0) > kTol) {
      throw SolverError("NormalizationFailure",
                        "transition row at state '" + to_string(B.states[s]) +
                            "' sums to " + std::to_string(row));
    }
  }
  return B;
}

CylinderQuery cylinder_probability(const BoundaryChain& B,
                                   const ReducedWord& w) {
  CylinderQuery q;
  q.word = w;
  if (w.empty()) {
    q.value = 1.0;
    q.path_count = 1;
    return q;
  }
  const int m = B.state_count();
  std::vector<double> v(m, 0.0);
  std::vector<long> count(m, 0);
  for (int s = 0; s < m; ++s) {
    if (B.proj[s] == w[0]) {
      v[s] = B.f[s];
      count[s] = B.f[s] > 0.0 ? 1 : 0;
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<double> next(m, 0.0);
    std::vector<long> next_count(m, 0);
    for (int t = 0; t < m; ++t) {
      if (B.proj[t] != w[i]) continue;
      for (int s = 0; s < m; ++s) {
        next[t] += v[s] * B.g_at(s, t);
        if (count[s] > 0 && B.g_at(s, t) > 0.0) next_count[t] += count[s];
      }
    }
    v = std::move(next);
    count = std::move(next_count);
  }
  for (int s = 0; s < m; ++s) {
    q.value += v[s] * B.h[s];
    q.path_count += count[s];
  }
  return q;
}

double log_cylinder_probability(const BoundaryChain& B, const ReducedWord& w) {
  if (w.empty()) return 0.0;
  const int m = B.state_count();
  std::vector<double> v(m, 0.0);
  for (int s = 0; s < m; ++s) {
    if (B.proj[s] == w[0]) v[s] = B.f[s];
  }
  double log_scale = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<double> next(m, 0.0);
    for (int t = 0; t < m; ++t) {
      if (B.proj[t] != w[i]) continue;
      for (int s = 0; s < m; ++s) next[t] += v[s] * B.g_at(s, t);
    }
    double norm = *std::max_element(next.begin(), next.end());
    if (norm <= 0.0) return -std::numeric_limits<double>::infinity();
    for (double& x : next) x /= norm;
    log_scale += std::log(norm);
    v = std::move(next);
  }
  double tail = 0.0;
  for (int s = 0; s < m; ++s) tail += v[s] * B.h[s];
  if (tail <= 0.0) return -std::numeric_limits<double>::infinity();
  return log_scale + std::log(tail);
}

ReducedWord sample_boundary(const BoundaryChain& B, int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("BadLength", "n must be >= 1");
  Rng rng(seed);
  const int m = B.state_count();
  auto draw = [&](auto weight_at) {
    double u = rng.uniform01();
    double acc = 0.0;
    int last_positive = 0;
    for (int s = 0; s < m; ++s) {
      double w = weight_at(s);
      if (w > 0.0) last_positive = s;
      acc += w;
      if (u < acc) return s;
    }
    return last_positive;
  };
  Word letters;
  letters.reserve(n);
  int state = draw([&](int s) { return B.p[s]; });
  letters.push_back(B.proj[state]);
  for (int i = 1; i < n; ++i) {
    state = draw([&](int s) { return B.phat_at(state, s); });
    letters.push_back(B.proj[state]);
  }
  return ReducedWord(std::move(letters));
}

McEstimate mc_cylinder_oracle(const StepDistribution& mu, const ReducedWord& w,
                              int steps, long trials, std::uint64_t seed) {
  McEstimate est;
  est.trials = trials;
  est.steps = steps;
  long hits = 0;
  Word stack;
  for (long trial = 0; trial < trials; ++trial) {
    Rng rng(child_seed(seed, static_cast<std::uint64_t>(trial)));
    stack.clear();
    for (int i = 0; i < steps; ++i) {
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
      for (Letter x : chosen->word.letters()) {
        if (!stack.empty() && stack.back() == inverse(x)) {
          stack.pop_back();
        } else {
          stack.push_back(x);
        }
      }
    }
    if (stack.size() < w.size()) {
      ++est.short_walks;
      continue;
    }
    bool prefix = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (stack[i] != w[i]) {
        prefix = false;
        break;
      }
    }
    if (prefix) ++hits;
  }
  est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) /
                          static_cast<double>(trials));
  return est;
}

}  // namespace freewalk
