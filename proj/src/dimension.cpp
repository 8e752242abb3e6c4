#include "freewalk/dimension.hpp"

#include <algorithm>
#include <cmath>

namespace freewalk {

RefinedSystem refine(const SchottkyRep& rep, int n) {
  if (n < 1 || n > 10) {
    throw ValidationError("BadDepth", "refinement depth must be in [1, 10]");
  }
  RefinedSystem sys;
  sys.depth = n;
  sys.cylinders = admissible_words(n);
  const int count = static_cast<int>(sys.cylinders.size());
  sys.succ.resize(count);
  sys.contraction.resize(count);
  sys.marked_angle.resize(count);
  sys.arc_length.resize(count);

  auto index_of = [&](const ReducedWord& w) {
    auto it = std::lower_bound(sys.cylinders.begin(), sys.cylinders.end(), w);
    return static_cast<int>(it - sys.cylinders.begin());
  };

  for (int i = 0; i < count; ++i) {
    const ReducedWord& w = sys.cylinders[i];
    // Marked point: the orbit point of the lexicographically least
    // admissible one-letter continuation, pushed to its boundary angle.
    Letter continuation = Letter::a;
    for (Letter x : kAlphabet) {
      if (x != inverse(w.back())) {
        continuation = x;
        break;
      }
    }
    Word extended = w.letters();
    extended.push_back(continuation);
    sys.marked_angle[i] = limit_point(rep, ReducedWord(extended)).angle;
    sys.arc_length[i] = 2.0 * cylinder_arc(rep, w).half_width;
  }

  for (int i = 0; i < count; ++i) {
    const ReducedWord& w = sys.cylinders[i];
    Word shifted(w.letters().begin() + 1, w.letters().end());
    int k = 0;
    for (Letter x : kAlphabet) {
      if (x == inverse(w.back())) continue;
      Word next = shifted;
      next.push_back(x);
      const int j = index_of(ReducedWord(next));
      sys.succ[i][k] = j;
      // One-step inverse-branch contraction |rho(w[1])'| at the marked
      // point of the target cylinder; refines as the depth grows.
      sys.contraction[i][k] =
          boundary_derivative(rep.gen(w.front()), sys.marked_angle[j]);
      ++k;
    }
  }
  return sys;
}

double spectral_radius(const RefinedSystem& sys, double s) {
  const int count = static_cast<int>(sys.cylinders.size());
  std::vector<std::array<double, 3>> weight(count);
  for (int i = 0; i < count; ++i) {
    for (int k = 0; k < 3; ++k) {
      weight[i][k] = std::pow(sys.contraction[i][k], s);
    }
  }
  std::vector<double> v(count, 1.0), next(count);
  double radius = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    double norm = 0.0;
    for (int i = 0; i < count; ++i) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += weight[i][k] * v[sys.succ[i][k]];
      next[i] = acc;
      norm = std::max(norm, acc);
    }
    for (int i = 0; i < count; ++i) next[i] /= norm;
    std::swap(v, next);
    if (std::abs(norm - radius) <= 1e-12 * std::max(1.0, radius)) {
      return norm;
    }
    radius = norm;
  }
  throw SolverError("PowerIterationStalled",
                    "eigenvalue still moving after 10^4 iterations at s = " +
                        std::to_string(s));
}

namespace {
double bisect_dimension(const RefinedSystem& sys, double tol, double& lo,
                        double& hi) {
  lo = 0.0;
  hi = 1.0;
  const double at_zero = spectral_radius(sys, 0.0);
  const double at_one = spectral_radius(sys, 1.0);
  if (!(at_zero > 1.0) || !(at_one < 1.0)) {
    throw SolverError("BisectionBracket",
                      "spectral radius bracket invalid: radius(0) = " +
                          std::to_string(at_zero) + ", radius(1) = " +
                          std::to_string(at_one));
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (spectral_radius(sys, mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}
}  // namespace

DimensionEstimate hausdorff_dimension(const SchottkyRep& rep, int depth,
                                      double tol) {
  if (tol < 1e-10) {
    throw ValidationError("BadTolerance", "bracket tolerance must be >= 1e-10");
  }
  DimensionEstimate est;
  est.depth = depth;
  for (int d = std::min(2, depth); d <= depth; ++d) {
    RefinedSystem sys = refine(rep, d);
    double lo = 0.0, hi = 1.0;
    double value = bisect_dimension(sys, tol, lo, hi);
    est.convergence.emplace_back(d, value);
    if (d == depth) {
      est.value = value;
      est.lo = lo;
      est.hi = hi;
    }
  }
  return est;
}

double moran_exponent(const std::vector<double>& lengths) {
  if (lengths.empty()) {
    throw ValidationError("EmptyInput", "no lengths given");
  }
  for (double len : lengths) {
    if (!(len > 0.0) || len >= 1.0) {
      throw ValidationError("BadLength",
                            "Moran equation needs lengths in (0, 1)");
    }
  }
  auto total = [&](double s) {
    double sum = 0.0;
    for (double len : lengths) sum += std::pow(len, s);
    return sum;
  };
  double lo = 0.0, hi = 1.0;
  while (total(hi) > 1.0) hi *= 2.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (total(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double box_counting_oracle(const SchottkyRep& rep, int depth) {
  if (depth < 2 || depth > 8) {
    throw ValidationError("BadDepth", "oracle depth must be in [2, 8]");
  }
  // Two-scale covering estimate: the exponent s at which the depth-n arc
  // cover has the same s-dimensional size as the depth-(n-1) cover.  Using
  // consecutive depths cancels the multiplicative distortion constants
  // that bias the single-level Moran root.
  std::vector<double> fine, coarse;
  for (const ReducedWord& w : admissible_words(depth)) {
    fine.push_back(2.0 * cylinder_arc(rep, w).half_width);
  }
  for (const ReducedWord& w : admissible_words(depth - 1)) {
    coarse.push_back(2.0 * cylinder_arc(rep, w).half_width);
  }
  auto gap = [&](double s) {
    double total = 0.0;
    for (double len : fine) total += std::pow(len, s);
    for (double len : coarse) total -= std::pow(len, s);
    return total;  // positive below the crossing exponent
  };
  double lo = 0.0, hi = 1.0;
  if (!(gap(lo) > 0.0) || !(gap(hi) < 0.0)) {
    throw SolverError("BisectionBracket",
                      "two-scale covering sums do not cross on [0, 1]");
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (gap(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace freewalk
