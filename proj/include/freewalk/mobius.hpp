#pragma once

#include <complex>

#include "freewalk/errors.hpp"

namespace freewalk {

using Complex = std::complex<double>;

// Orientation-preserving isometry of the Poincare disk,
//   z -> (a z + b) / (conj(b) z + conj(a)),   |a|^2 - |b|^2 = 1.
// Composition preserves the unit determinant exactly in the algebra, so it
// does not renormalize: recomputing |a|^2 - |b|^2 is catastrophically
// ill-conditioned once the entries are large, while the true determinant
// drifts only at machine scale.  Use ScaledMobius for very long products.
struct MobiusMap {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  static MobiusMap identity() { return {}; }

  Complex apply(Complex z) const {
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
  }

  // Image of the boundary point exp(i theta), as an angle in (-pi, pi].
  double apply_angle(double theta) const;

  MobiusMap inverse() const { return {std::conj(a), -b}; }

  double determinant_residual() const;
  void normalize();
};

MobiusMap compose(const MobiusMap& g, const MobiusMap& h);  // g after h

// Hyperbolic distance in the Poincare disk.  Throws
// ValidationError("PointOnBoundary") if either argument has |z| >= 1.
double disk_distance(Complex z, Complex w);

// Busemann function b_xi(x, y) at the boundary point exp(i xi_angle).
double busemann(double xi_angle, Complex x, Complex y);

// |g'(exp(i xi_angle))| in the circle (arc length) parametrization.
double boundary_derivative(const MobiusMap& g, double xi_angle);

// Translation length via the trace: 2 arccosh(|Re a|) when |Re a| > 1,
// else 0.
double translation_length(const MobiusMap& g);

struct AxisEndpoints {
  double attracting = 0.0;  // boundary angles
  double repelling = 0.0;
};

// Fixed points on the circle of a hyperbolic map, labelled by |g'|.
// Throws ValidationError("NotHyperbolic") when translation_length(g) == 0.
AxisEndpoints axis_endpoints(const MobiusMap& g);

// The same maps with an explicit scale factor exp(log_scale) split off,
// for long compositions whose entries overflow a double.  The stored pair
// is kept at unit magnitude max(|a|, |b|) = 1.
struct ScaledMobius {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  double log_scale = 0.0;

  static ScaledMobius from(const MobiusMap& g);
  double apply_angle(double theta) const;  // scale cancels on the boundary
};

ScaledMobius compose(const ScaledMobius& g, const ScaledMobius& h);

// dist(o, g o) = 2 log(|A| + |B|) for the true entries A, B; computed in
// log scale so it is exact for displacements far beyond overflow.
double displacement(const ScaledMobius& g);

double translation_length(const ScaledMobius& g);

// log |g'(exp(i xi_angle))|.
double log_boundary_derivative(const ScaledMobius& g, double xi_angle);

}  // namespace freewalk
