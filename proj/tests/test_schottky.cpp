#include <doctest.h>

#include <cmath>
#include <numbers>

#include "freewalk/schottky.hpp"
#include "test_util.hpp"

using namespace freewalk;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("arc intervals: membership, wrap-around, and distance sign") {
  ArcInterval arc{0.0, 0.5};
  CHECK(arc.contains_angle(0.2));
  CHECK(arc.contains_angle(-0.49));
  CHECK_FALSE(arc.contains_angle(1.0));
  CHECK(arc.distance_to(0.2) < 0.0);
  CHECK(arc.distance_to(1.0) == doctest::Approx(0.5));

  ArcInterval around_pi{kPi, 0.3};
  CHECK(around_pi.contains_angle(kPi - 0.1));
  CHECK(around_pi.contains_angle(-kPi + 0.1));
  CHECK_FALSE(around_pi.contains_angle(0.0));

  CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-0.1) == doctest::Approx(-0.1));
}

TEST_CASE("standard representation: generator structure") {
  double L = 4.0;
  auto rep = standard_schottky(L);
  // rho(a) translates along the real axis by L.
  CHECK(translation_length(rep.gen(Letter::a)) == doctest::Approx(L));
  CHECK(translation_length(rep.gen(Letter::b)) == doctest::Approx(L));
  // Inverse pairing.
  Complex z(0.3, 0.2);
  CHECK(std::abs(rep.gen(Letter::A).apply(rep.gen(Letter::a).apply(z)) - z) <=
        1e-12);
  CHECK(std::abs(rep.gen(Letter::B).apply(rep.gen(Letter::b).apply(z)) - z) <=
        1e-12);
  // rho(a) 0 = tanh(L/2) on the real axis; rho(b) 0 on the imaginary axis.
  CHECK(rep.gen(Letter::a).apply(Complex(0, 0)).real() ==
        doctest::Approx(std::tanh(L / 2)));
  CHECK(std::abs(rep.gen(Letter::b).apply(Complex(0, 0)).imag()) ==
        doctest::Approx(std::tanh(L / 2)));
}

TEST_CASE("standard representation verifies at L = 4, fails at L = 0.1") {
  auto report = verify_schottky(standard_schottky(4.0), 16);
  CHECK(report.ok);
  CHECK(report.disjointness_margin > 0.0);
  CHECK(report.pingpong_margin > 0.0);
  CHECK_THROWS_AS(standard_schottky(0.1), ValidationError);
}

TEST_CASE("arc disjointness margin shrinks as L decreases") {
  // The ping-pong containment margin is not monotone (the target arcs
  // widen as L shrinks), but the gap between the four arcs is.
  double last_gap = 1e9;
  for (double L : {6.0, 5.0, 4.0, 3.0}) {
    auto report = verify_schottky(standard_schottky(L), 16);
    CHECK(report.ok);
    CHECK(report.disjointness_margin < last_gap);
    CHECK(report.pingpong_margin > 0.0);
    last_gap = report.disjointness_margin;
  }
}

TEST_CASE("a widened half-plane breaks disjointness and is reported") {
  auto good = standard_schottky(4.0);
  std::array<MobiusMap, 4> gens;
  std::array<HalfPlane, 4> planes;
  for (Letter x : kAlphabet) {
    gens[letter_index(x)] = good.gen(x);
    planes[letter_index(x)] = good.half_plane(x);
  }
  planes[letter_index(Letter::a)].arc.half_width = kPi / 2;
  auto broken = SchottkyRep::unchecked(gens, planes);
  auto report = verify_schottky(broken, 16);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.witness.empty());
  CHECK_THROWS_AS(SchottkyRep(gens, planes), ValidationError);
}

TEST_CASE("word representation is a homomorphism") {
  auto rep = standard_schottky(4.0);
  CHECK(std::abs(rep_of_word(rep, ReducedWord()).a - Complex(1, 0)) <= 1e-15);
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    ReducedWord u =
        testutil::random_reduced(rng, static_cast<int>(rng.uniform01() * 6));
    ReducedWord v =
        testutil::random_reduced(rng, static_cast<int>(rng.uniform01() * 6));
    MobiusMap lhs = rep_of_word(rep, product(u, v));
    MobiusMap rhs = compose(rep_of_word(rep, u), rep_of_word(rep, v));
    double scale = std::max(1.0, std::abs(rhs.a));
    CHECK(std::abs(lhs.a - rhs.a) <= 1e-9 * scale);
    CHECK(std::abs(lhs.b - rhs.b) <= 1e-9 * scale);
  }
}

TEST_CASE("cylinder arcs are nested along prefixes") {
  auto rep = standard_schottky(4.0);
  Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    ReducedWord w = testutil::random_reduced(rng, 6);
    ArcInterval inner = cylinder_arc(rep, w);
    for (std::size_t k = 1; k < w.size(); ++k) {
      ArcInterval outer = cylinder_arc(rep, w.prefix(k));
      CHECK(outer.contains_angle(inner.center));
      CHECK(outer.half_width > inner.half_width);
    }
  }
}

TEST_CASE("limit points land in their cylinder arcs with shrinking diameters") {
  auto rep = standard_schottky(4.0);
  auto result = limit_point(rep, parse_reduced("abAB"));
  CHECK(std::abs(result.point) < 1.0);
  CHECK(result.arc.contains_angle(result.angle));
  REQUIRE(result.arc_diameters.size() == 4);
  for (std::size_t i = 1; i < result.arc_diameters.size(); ++i) {
    CHECK(result.arc_diameters[i] < result.arc_diameters[i - 1]);
  }
  // a^n converges to the attracting fixed point of rho(a), which is the
  // angle-0 boundary point.
  auto deep = limit_point(rep, parse_reduced(std::string(20, 'a')));
  CHECK(std::abs(deep.angle) <= 1e-6);
}

TEST_CASE("admissible word enumeration") {
  CHECK(admissible_words(1).size() == 4);
  CHECK(admissible_words(2).size() == 12);
  CHECK(admissible_words(3).size() == 36);
  auto words = admissible_words(3);
  CHECK(std::is_sorted(words.begin(), words.end()));
  for (const auto& w : words) CHECK(w.size() == 3);
}

TEST_CASE("limit set figure is deterministic with one arc per cylinder") {
  auto rep = standard_schottky(4.0);
  std::string svg = limit_set_svg(rep, 2);
  CHECK(svg == limit_set_svg(rep, 2));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  // Count limit-set arc elements: one per depth-2 cylinder.
  std::size_t count = 0;
  for (std::size_t at = svg.find("#cc3333"); at != std::string::npos;
       at = svg.find("#cc3333", at + 1)) {
    ++count;
  }
  CHECK(count == 12);
}
