#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "freewalk/prefix_graph.hpp"
#include "freewalk/step_distribution.hpp"
#include "freewalk/words.hpp"

namespace freewalk {

// First-passage probabilities of the prefix-graph chain across tree edges.
// F[x](s, s') is the probability that, starting from chain state s, the
// reduced word first crosses the tree edge in direction x with the chain
// arriving in state s' (which must project to x).  Sources range over
// S union {empty}; the empty chain state is source index m = |S|.
struct FirstPassageFamily {
  std::vector<ReducedWord> states;         // S, lexicographic order
  std::vector<Letter> proj;                // last letter of each state
  std::array<std::vector<double>, 4> f;    // f[x]: (m+1) x m row-major
  long iterations = 0;
  double residual = 0.0;

  int state_count() const { return static_cast<int>(states.size()); }
  int epsilon_source() const { return state_count(); }
  double at(Letter x, int src, int tgt) const {
    return f[letter_index(x)][src * states.size() + tgt];
  }
};

// Minimal nonnegative fixed point of the one-step first-passage recursion,
// by monotone (Gauss-Seidel order) iteration from zero.  Throws
// SolverError("NotConverged") if the sup-norm update stays above tol.
FirstPassageFamily solve_first_passage(const ChainKernel& P,
                                       double tol = 1e-12,
                                       long max_iter = 1000000);

// Hidden-Markov data (f, g, h) of the boundary measure on infinite reduced
// words, with the derived initial law p = f*h and kernel
// phat(s,s') = g(s,s') h(s') / h(s).
struct BoundaryChain {
  std::vector<ReducedWord> states;
  std::vector<Letter> proj;
  std::vector<double> f;     // size m
  std::vector<double> h;     // size m
  std::vector<double> p;     // size m, initial law
  std::vector<double> g;     // m x m, zero on cancelling transitions
  std::vector<double> phat;  // m x m, rows at h>0 states are stochastic
  double h_residual = 0.0;          // residual of the linear system for h
  double h_spectral_radius = 0.0;   // of the h-system iteration operator

  int state_count() const { return static_cast<int>(states.size()); }
  double g_at(int s, int t) const { return g[s * states.size() + t]; }
  double phat_at(int s, int t) const { return phat[s * states.size() + t]; }
};

// Throws SolverError("SingularSystem") if the h system is not uniquely
// solvable and SolverError("NormalizationFailure") if p or the rows of
// phat violate their 1e-9 tolerances.
BoundaryChain build_boundary_chain(const FirstPassageFamily& F,
                                   const ChainKernel& P);

struct CylinderQuery {
  ReducedWord word;
  double value = 0.0;
  long path_count = 0;  // admissible hidden state sequences
};

// Exact nu([w]) by the forward pass over f, g-slices, and h.
CylinderQuery cylinder_probability(const BoundaryChain& B,
                                   const ReducedWord& w);

// log nu([w]) with per-step renormalization; safe for very long words.
// Returns -infinity when the cylinder has measure zero.
double log_cylinder_probability(const BoundaryChain& B, const ReducedWord& w);

// A length-n sample of the boundary word; reduced by construction.
ReducedWord sample_boundary(const BoundaryChain& B, int n, std::uint64_t seed);

struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  long trials = 0;
  int steps = 0;
  long short_walks = 0;  // trials whose reduced product was shorter than w
};

// Independent Monte Carlo oracle: frequency with which w prefixes the
// reduced product of `steps` raw mu-steps.  Never touches the prefix graph.
McEstimate mc_cylinder_oracle(const StepDistribution& mu, const ReducedWord& w,
                              int steps, long trials, std::uint64_t seed);

}  // namespace freewalk
