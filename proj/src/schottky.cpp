#include "freewalk/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace freewalk {

namespace {
constexpr double kPi = std::numbers::pi;
Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
}  // namespace

double wrap_angle(double theta) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta <= -kPi) theta += 2.0 * kPi;
  if (theta > kPi) theta -= 2.0 * kPi;
  return theta;
}

bool ArcInterval::contains_angle(double theta) const {
  return std::abs(wrap_angle(theta - center)) <= half_width;
}

double ArcInterval::distance_to(double theta) const {
  return std::abs(wrap_angle(theta - center)) - half_width;
}

ArcInterval map_arc(const MobiusMap& g, const ArcInterval& arc) {
  double lo = g.apply_angle(arc.lo());
  double hi = g.apply_angle(arc.hi());
  double width = hi - lo;
  while (width <= 0.0) width += 2.0 * kPi;
  ArcInterval out;
  out.half_width = width / 2.0;
  out.center = wrap_angle(lo + out.half_width);
  return out;
}

bool HalfPlane::contains_point(Complex z) const {
  // The geodesic over the arc is the circle orthogonal to the unit circle
  // with center exp(i c) / cos(hw) and radius tan(hw).
  const double hw = arc.half_width;
  const Complex center = unit(arc.center) / std::cos(hw);
  return std::abs(z - center) < std::tan(hw);
}

SchottkyRep::SchottkyRep(std::array<MobiusMap, 4> generators,
                         std::array<HalfPlane, 4> half_planes)
    : generators_(generators), half_planes_(half_planes) {
  SchottkyReport report = verify_schottky(*this, 16);
  if (!report.ok) {
    throw ValidationError("NotSchottky", report.witness);
  }
}

SchottkyRep SchottkyRep::unchecked(std::array<MobiusMap, 4> generators,
                                   std::array<HalfPlane, 4> half_planes) {
  SchottkyRep rep;
  rep.generators_ = generators;
  rep.half_planes_ = half_planes;
  return rep;
}

SchottkyRep standard_schottky(double L) {
  if (!(L > 0.0)) {
    throw ValidationError("NotSchottky", "translation length must be > 0");
  }
  const double c = std::cosh(L / 2.0);
  const double s = std::sinh(L / 2.0);
  MobiusMap along_real{Complex(c, 0.0), Complex(s, 0.0)};
  MobiusMap along_imag{Complex(c, 0.0), Complex(0.0, s)};
  std::array<MobiusMap, 4> gens;
  gens[letter_index(Letter::a)] = along_real;
  gens[letter_index(Letter::A)] = along_real.inverse();
  gens[letter_index(Letter::b)] = along_imag;
  gens[letter_index(Letter::B)] = along_imag.inverse();

  // Isometric-circle half-planes.  H_x contains the attracting fixed point
  // of rho(x); the arc half-width is arccos(tanh(L/2)).
  const double hw = std::acos(std::tanh(L / 2.0));
  std::array<HalfPlane, 4> planes;
  planes[letter_index(Letter::a)] = {{0.0, hw}};
  planes[letter_index(Letter::A)] = {{kPi, hw}};
  planes[letter_index(Letter::b)] = {{kPi / 2.0, hw}};
  planes[letter_index(Letter::B)] = {{-kPi / 2.0, hw}};
  return SchottkyRep(gens, planes);
}

SchottkyReport verify_schottky(const SchottkyRep& rep, int samples) {
  if (samples < 2) {
    throw ValidationError("BadSampleCount", "samples must be >= 2");
  }
  SchottkyReport report;
  char buf[160];

  // Pairwise disjointness of the closed arcs, by interval arithmetic on
  // angles.
  report.disjointness_margin = 2.0 * kPi;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const ArcInterval& u = rep.half_plane(static_cast<Letter>(i)).arc;
      const ArcInterval& v = rep.half_plane(static_cast<Letter>(j)).arc;
      double gap = std::abs(wrap_angle(u.center - v.center)) -
                   (u.half_width + v.half_width);
      report.disjointness_margin = std::min(report.disjointness_margin, gap);
      if (gap <= 0.0 && report.witness.empty()) {
        std::snprintf(buf, sizeof(buf),
                      "arcs of H_%c and H_%c intersect (overlap %.3g rad)",
                      to_char(static_cast<Letter>(i)),
                      to_char(static_cast<Letter>(j)), -gap);
        report.witness = buf;
      }
    }
  }

  // Basepoint o = 0 outside every half-plane.
  for (Letter x : kAlphabet) {
    if (rep.half_plane(x).contains_point(Complex(0.0, 0.0)) &&
        report.witness.empty()) {
      report.witness = std::string("basepoint lies inside H_") + to_char(x);
    }
  }

  // Ping-pong: rho(x) maps the arc of H_y into the arc of H_x, checked at
  // the endpoints and at `samples` interior points.
  report.pingpong_margin = kPi;
  for (Letter x : kAlphabet) {
    const ArcInterval& target = rep.half_plane(x).arc;
    for (Letter y : kAlphabet) {
      if (y == inverse(x)) continue;
      const ArcInterval& source = rep.half_plane(y).arc;
      for (int k = 0; k <= samples; ++k) {
        double theta = source.lo() + 2.0 * source.half_width * k / samples;
        double image = rep.gen(x).apply_angle(theta);
        double margin = -target.distance_to(image);
        report.pingpong_margin = std::min(report.pingpong_margin, margin);
        if (margin <= 0.0 && report.witness.empty()) {
          std::snprintf(buf, sizeof(buf),
                        "rho(%c) maps a point of H_%c outside H_%c "
                        "(margin %.3g rad)",
                        to_char(x), to_char(y), to_char(x), margin);
          report.witness = buf;
        }
      }
    }
  }

  report.ok = report.witness.empty();
  return report;
}

MobiusMap rep_of_word(const SchottkyRep& rep, const ReducedWord& w) {
  MobiusMap out = MobiusMap::identity();
  for (Letter x : w.letters()) out = compose(out, rep.gen(x));
  return out;
}

ScaledMobius rep_of_word_scaled(const SchottkyRep& rep, const ReducedWord& w) {
  ScaledMobius out;
  for (Letter x : w.letters()) {
    out = compose(out, ScaledMobius::from(rep.gen(x)));
  }
  return out;
}

ArcInterval cylinder_arc(const SchottkyRep& rep, const ReducedWord& w) {
  if (w.empty()) {
    throw ValidationError("EmptyWord", "cylinder arcs need a nonempty word");
  }
  ArcInterval arc = rep.half_plane(w.back()).arc;
  MobiusMap g = rep_of_word(rep, w.prefix(w.size() - 1));
  return map_arc(g, arc);
}

LimitPointResult limit_point(const SchottkyRep& rep, const ReducedWord& w) {
  if (w.empty()) {
    throw ValidationError("EmptyWord", "limit_point needs a nonempty word");
  }
  LimitPointResult out;
  out.point = rep_of_word(rep, w).apply(Complex(0.0, 0.0));
  out.angle = std::arg(out.point);
  out.arc = cylinder_arc(rep, w);
  out.arc_diameters.reserve(w.size());
  for (std::size_t n = 1; n <= w.size(); ++n) {
    out.arc_diameters.push_back(2.0 * cylinder_arc(rep, w.prefix(n)).half_width);
  }
  return out;
}

std::vector<ReducedWord> admissible_words(int n) {
  std::vector<ReducedWord> out;
  if (n < 1) return out;
  Word current;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.emplace_back(current);
      return;
    }
    for (Letter x : kAlphabet) {
      if (!current.empty() && x == inverse(current.back())) continue;
      current.push_back(x);
      self(self, depth + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {
void append_circle_arc(std::string& svg, const ArcInterval& arc,
                       const char* style) {
  char buf[256];
  Complex from = unit(arc.lo());
  Complex to = unit(arc.hi());
  int large = arc.half_width > kPi / 2.0 ? 1 : 0;
  std::snprintf(buf, sizeof(buf),
                "  <path d=\"M %.6f %.6f A 1 1 0 %d 1 %.6f %.6f\" %s/>\n",
                from.real(), from.imag(), large, to.real(), to.imag(), style);
  svg += buf;
}
}  // namespace

std::string limit_set_svg(const SchottkyRep& rep, int depth) {
  if (depth < 1 || depth > 8) {
    throw ValidationError("BadDepth", "figure depth must be in [1, 8]");
  }
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 "
      "2.2\" width=\"600\" height=\"600\">\n"
      "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888\" "
      "stroke-width=\"0.004\"/>\n";
  // Half-plane geodesics.
  char buf[256];
  for (Letter x : kAlphabet) {
    const ArcInterval& arc = rep.half_plane(x).arc;
    const Complex center = unit(arc.center) / std::cos(arc.half_width);
    const double radius = std::tan(arc.half_width);
    Complex from = unit(arc.lo());
    Complex to = unit(arc.hi());
    std::snprintf(buf, sizeof(buf),
                  "  <path d=\"M %.6f %.6f A %.6f %.6f 0 0 0 %.6f %.6f\" "
                  "fill=\"none\" stroke=\"#4477cc\" stroke-width=\"0.006\"/>\n",
                  from.real(), from.imag(), radius, radius, to.real(),
                  to.imag());
    svg += buf;
    (void)center;
  }
  // Depth-n cylinder arcs of the limit set.
  for (const ReducedWord& w : admissible_words(depth)) {
    append_circle_arc(
        svg, cylinder_arc(rep, w),
        "fill=\"none\" stroke=\"#cc3333\" stroke-width=\"0.02\"");
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace freewalk
