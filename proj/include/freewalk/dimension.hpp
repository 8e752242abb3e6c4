#pragma once

#include <array>
#include <utility>
#include <vector>

#include "freewalk/schottky.hpp"
#include "freewalk/words.hpp"

namespace freewalk {

// Depth-n discretization of the expanding boundary map on the limit set:
// one state per admissible reduced word of length n, shift-overlap
// transitions, and a one-step contraction factor per transition evaluated
// at a marked boundary point of the target cylinder.
struct RefinedSystem {
  int depth = 0;
  std::vector<ReducedWord> cylinders;            // lexicographic order
  std::vector<std::array<int, 3>> succ;          // 3-out-regular subshift
  std::vector<std::array<double, 3>> contraction;  // per edge, in (0, 1)
  std::vector<double> marked_angle;              // per cylinder
  std::vector<double> arc_length;                // angular width per cylinder
};

RefinedSystem refine(const SchottkyRep& rep, int n);

// Leading eigenvalue of the weighted transition operator with edge weights
// contraction^s, by power iteration.  Strictly decreasing in s.
// Throws SolverError("PowerIterationStalled") if the eigenvalue has not
// settled to relative 1e-12 within 10^4 iterations.
double spectral_radius(const RefinedSystem& sys, double s);

struct DimensionEstimate {
  int depth = 0;
  double value = 0.0;
  double lo = 0.0, hi = 1.0;  // bisection bracket
  std::vector<std::pair<int, double>> convergence;  // (depth, delta_depth)
};

// Bowen-equation root: bisection on s in [0,1] for spectral_radius(s) = 1
// at the given depth, with the convergence table over depths 2..n.
// The bracket is validated at runtime (radius(0) = 3 > 1 > radius(1));
// a violation throws SolverError("BisectionBracket").
DimensionEstimate hausdorff_dimension(const SchottkyRep& rep, int depth,
                                      double tol);

// Root s of sum lengths[i]^s = 1 (Moran equation); all lengths in (0, 1).
double moran_exponent(const std::vector<double>& lengths);

// Coarse independent dimension estimate from the depth-n cylinder arc
// lengths alone.
double box_counting_oracle(const SchottkyRep& rep, int depth);

}  // namespace freewalk
