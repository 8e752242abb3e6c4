#include "freewalk/mobius.hpp"

#include <algorithm>
#include <cmath>

namespace freewalk {

namespace {
Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
}  // namespace

double MobiusMap::apply_angle(double theta) const {
  return std::arg(apply(unit(theta)));
}

double MobiusMap::determinant_residual() const {
  return std::abs(std::norm(a) - std::norm(b) - 1.0);
}

void MobiusMap::normalize() {
  double det = std::norm(a) - std::norm(b);
  if (det <= 0.0) {
    throw ValidationError("NotDiskPreserving",
                          "entries have |a|^2 - |b|^2 <= 0");
  }
  double scale = std::sqrt(det);
  a /= scale;
  b /= scale;
}

MobiusMap compose(const MobiusMap& g, const MobiusMap& h) {
  // The product of unit-determinant maps has unit determinant; computing
  // |a|^2 - |b|^2 to renormalize would subtract two huge nearly equal
  // numbers for long products, so the product is left as is.  Entry
  // roundoff drifts the true determinant only at relative machine scale.
  MobiusMap out;
  out.a = g.a * h.a + g.b * std::conj(h.b);
  out.b = g.a * h.b + g.b * std::conj(h.a);
  return out;
}

double disk_distance(Complex z, Complex w) {
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0) {
    throw ValidationError("PointOnBoundary",
                          "disk_distance needs points with |z| < 1");
  }
  double d = std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
  return std::log1p(d) - std::log1p(-d);  // 2 atanh(d)
}

double busemann(double xi_angle, Complex x, Complex y) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) {
    throw ValidationError("PointOnBoundary",
                          "busemann needs interior points");
  }
  const Complex xi = unit(xi_angle);
  double at_x = std::norm(xi - x) / (1.0 - std::norm(x));
  double at_y = std::norm(xi - y) / (1.0 - std::norm(y));
  return std::log(at_x / at_y);
}

double boundary_derivative(const MobiusMap& g, double xi_angle) {
  // g'(z) = (|a|^2 - |b|^2) / (conj(b) z + conj(a))^2 = 1 / (...)^2.
  const Complex xi = unit(xi_angle);
  return 1.0 / std::norm(std::conj(g.b) * xi + std::conj(g.a));
}

double translation_length(const MobiusMap& g) {
  double t = std::abs(g.a.real());
  if (t <= 1.0) return 0.0;
  return 2.0 * std::acosh(t);
}

AxisEndpoints axis_endpoints(const MobiusMap& g) {
  if (translation_length(g) <= 0.0) {
    throw ValidationError("NotHyperbolic",
                          "map has zero translation length");
  }
  // Fixed points: conj(b) z^2 - 2i Im(a) z - b = 0.  For a hyperbolic map
  // the discriminant reduces to 4 (Re(a)^2 - 1) > 0 and both roots lie on
  // the unit circle.
  const double root = std::sqrt(g.a.real() * g.a.real() - 1.0);
  const Complex im_part(0.0, g.a.imag());
  const Complex z1 = (im_part + root) / std::conj(g.b);
  const Complex z2 = (im_part - root) / std::conj(g.b);
  AxisEndpoints axis;
  if (boundary_derivative(g, std::arg(z1)) < 1.0) {
    axis.attracting = std::arg(z1);
    axis.repelling = std::arg(z2);
  } else {
    axis.attracting = std::arg(z2);
    axis.repelling = std::arg(z1);
  }
  return axis;
}

ScaledMobius ScaledMobius::from(const MobiusMap& g) {
  ScaledMobius out;
  double mag = std::max(std::abs(g.a), std::abs(g.b));
  out.a = g.a / mag;
  out.b = g.b / mag;
  out.log_scale = std::log(mag);
  return out;
}

double ScaledMobius::apply_angle(double theta) const {
  const Complex xi = unit(theta);
  return std::arg((a * xi + b) / (std::conj(b) * xi + std::conj(a)));
}

ScaledMobius compose(const ScaledMobius& g, const ScaledMobius& h) {
  ScaledMobius out;
  out.a = g.a * h.a + g.b * std::conj(h.b);
  out.b = g.a * h.b + g.b * std::conj(h.a);
  out.log_scale = g.log_scale + h.log_scale;
  double mag = std::max(std::abs(out.a), std::abs(out.b));
  out.a /= mag;
  out.b /= mag;
  out.log_scale += std::log(mag);
  return out;
}

double displacement(const ScaledMobius& g) {
  // With |A|^2 - |B|^2 = 1 one has dist(o, g o) = 2 log(|A| + |B|),
  // which survives the split into unit part and log scale.
  return 2.0 * (g.log_scale + std::log(std::abs(g.a) + std::abs(g.b)));
}

double translation_length(const ScaledMobius& g) {
  double re = std::abs(g.a.real());
  if (re == 0.0) return 0.0;
  double log_trace_half = g.log_scale + std::log(re);
  if (log_trace_half > 30.0) {
    // acosh(t) = log(2t) up to O(t^-2), far below double precision here.
    return 2.0 * (log_trace_half + std::log(2.0));
  }
  double t = std::exp(log_trace_half);
  if (t <= 1.0) return 0.0;
  return 2.0 * std::acosh(t);
}

double log_boundary_derivative(const ScaledMobius& g, double xi_angle) {
  const Complex xi = unit(xi_angle);
  return -2.0 * (g.log_scale +
                 std::log(std::abs(std::conj(g.b) * xi + std::conj(g.a))));
}

}  // namespace freewalk
