#pragma once

#include <array>
#include <string>
#include <vector>

#include "freewalk/mobius.hpp"
#include "freewalk/words.hpp"

namespace freewalk {

// Closed arc on the unit circle, stored as (center angle, half-width).
struct ArcInterval {
  double center = 0.0;      // normalized to (-pi, pi]
  double half_width = 0.0;  // in (0, pi)

  double lo() const { return center - half_width; }
  double hi() const { return center + half_width; }
  bool contains_angle(double theta) const;

  // Signed distance of theta from the arc: negative inside, measured to
  // the nearer endpoint.
  double distance_to(double theta) const;
};

double wrap_angle(double theta);  // into (-pi, pi]

// Image of an arc under a disk Mobius map (orientation preserving, so the
// counterclockwise endpoint order is kept).
ArcInterval map_arc(const MobiusMap& g, const ArcInterval& arc);

// Hyperbolic half-plane cut off by the geodesic joining the arc endpoints,
// on the arc's side.
struct HalfPlane {
  ArcInterval arc;
  bool contains_point(Complex z) const;
};

struct SchottkyReport {
  bool ok = false;
  double disjointness_margin = 0.0;  // min angular gap between arc pairs
  double pingpong_margin = 0.0;      // worst containment margin
  std::string witness;               // first violated condition, if any
};

// Four disk Mobius maps with rho(x^{-1}) = rho(x)^{-1}, four half-planes
// with pairwise disjoint closures satisfying rho(x) H_y subset H_x, and
// basepoint o = 0.  The checked constructor throws
// ValidationError("NotSchottky") with the violated condition.
class SchottkyRep {
 public:
  SchottkyRep(std::array<MobiusMap, 4> generators,
              std::array<HalfPlane, 4> half_planes);

  // Skips verification; for fault-injection fixtures.
  static SchottkyRep unchecked(std::array<MobiusMap, 4> generators,
                               std::array<HalfPlane, 4> half_planes);

  const MobiusMap& gen(Letter x) const { return generators_[letter_index(x)]; }
  const HalfPlane& half_plane(Letter x) const {
    return half_planes_[letter_index(x)];
  }

 private:
  SchottkyRep() = default;
  std::array<MobiusMap, 4> generators_;
  std::array<HalfPlane, 4> half_planes_;
};

// rho(a) = hyperbolic translation of length L along the real diameter,
// rho(b) = its conjugate along the imaginary diameter; half-planes are the
// isometric-circle half-planes of the generators.
SchottkyRep standard_schottky(double L);

SchottkyReport verify_schottky(const SchottkyRep& rep, int samples);

MobiusMap rep_of_word(const SchottkyRep& rep, const ReducedWord& w);
ScaledMobius rep_of_word_scaled(const SchottkyRep& rep, const ReducedWord& w);

// Boundary arc containing the whole cylinder [w]:
// rho(w[1:n-1]) applied to the arc of H_{w[n]}.
ArcInterval cylinder_arc(const SchottkyRep& rep, const ReducedWord& w);

struct LimitPointResult {
  Complex point;                     // rho(w) o
  double angle = 0.0;                // arg of the point
  ArcInterval arc;                   // cylinder arc of the full word
  std::vector<double> arc_diameters; // angular widths along the prefixes
};

// Approximation of pi_Lambda on the cylinder [w], with the nested-arc
// certificate (diameters strictly decrease along prefixes).
LimitPointResult limit_point(const SchottkyRep& rep, const ReducedWord& w);

// All reduced words of length n, lexicographic order (4 * 3^{n-1} words).
std::vector<ReducedWord> admissible_words(int n);

// Static figure: unit circle, the four half-plane geodesics, and the
// depth-n cylinder arcs of the limit set.  Deterministic output.
std::string limit_set_svg(const SchottkyRep& rep, int depth);

}  // namespace freewalk
