#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "freewalk/config.hpp"
#include "test_util.hpp"

using namespace freewalk;

TEST_CASE("minimal config with the uniform shorthand") {
  auto config = parse_config(R"({"mu": "uniform4"})");
  auto mu = make_mu(config);
  CHECK(mu.support_size() == 4);
  CHECK(mu.mass(parse_reduced("a")) == doctest::Approx(0.25));
  // Defaults survive.
  CHECK(config.seed == 1);
  CHECK(config.dimension_depth == 6);
  CHECK(config.rep.type == "standard");
}

TEST_CASE("explicit atom list with rational probabilities") {
  auto config = parse_config(R"({
    "mu": [
      {"word": "a", "prob": "1/3"},
      {"word": "aa", "prob": "1/3"},
      {"word": "b", "prob": "1/3"}
    ]
  })");
  auto mu = make_mu(config);
  CHECK(mu.support_size() == 3);
  CHECK(mu.mass(parse_reduced("aa")) == doctest::Approx(1.0 / 3));
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(parse_config("not json"), ValidationError);
  CHECK_THROWS_AS(parse_config("[1,2]"), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"mew": "uniform4"})"), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"mu": "uniform5"})"), ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"mu": [{"word": "a"}]})"), ValidationError);
  CHECK_THROWS_AS(
      parse_config(R"({"mu": [{"word": "a", "prob": 1, "x": 2}]})"),
      ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"mu": [{"word": "a", "prob": "1/0"}]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_config(R"({"rep": {"type": "other"}})"),
                  ValidationError);
}

TEST_CASE("invalid words and non-normalized masses fail downstream") {
  auto bad_word = R"({"mu": [{"word": "ac", "prob": 1}]})";
  CHECK_THROWS_AS(parse_config(bad_word), ValidationError);
  auto config = parse_config(R"({"mu": [{"word": "a", "prob": 0.999}]})");
  CHECK_THROWS_AS(make_mu(config), ValidationError);
  CHECK_THROWS_AS(make_mu(parse_config(R"({"words": ["a"]})")),
                  ValidationError);
}

TEST_CASE("standard and explicit representations build") {
  auto std_rep = make_rep(parse_config(R"({"rep": {"type": "standard", "L": 5}})"));
  CHECK(translation_length(std_rep.gen(Letter::a)) == doctest::Approx(5.0));

  // The same representation written out explicitly.
  double L = 4.0;
  char text[512];
  std::snprintf(text, sizeof(text), R"({
    "rep": {
      "type": "explicit",
      "a": [%.17g, 0, %.17g, 0],
      "b": [%.17g, 0, 0, %.17g],
      "arcs": [
        {"center": 0.0, "half_width": %.17g},
        {"center": 3.14159265358979312, "half_width": %.17g},
        {"center": 1.57079632679489656, "half_width": %.17g},
        {"center": -1.57079632679489656, "half_width": %.17g}
      ]
    }
  })",
                std::cosh(L / 2), std::sinh(L / 2), std::cosh(L / 2),
                std::sinh(L / 2), std::acos(std::tanh(L / 2)),
                std::acos(std::tanh(L / 2)), std::acos(std::tanh(L / 2)),
                std::acos(std::tanh(L / 2)));
  auto rep = make_rep(parse_config(text));
  auto reference = standard_schottky(L);
  CHECK(std::abs(rep.gen(Letter::a).a - reference.gen(Letter::a).a) <= 1e-12);
  CHECK(std::abs(rep.gen(Letter::b).b - reference.gen(Letter::b).b) <= 1e-12);
}

TEST_CASE("sampling, solver, and dimension sections are honored") {
  auto config = parse_config(R"({
    "mu": "uniform4",
    "solver": {"tol": 1e-10, "max_iter": 5000},
    "sampling": {"seed": 9, "trials": 17, "ray_length": 33},
    "dimension": {"depth": 3, "tol": 1e-6},
    "words": ["a", "ab"],
    "validate": {"radius": 2}
  })");
  CHECK(config.solver_tol == 1e-10);
  CHECK(config.solver_max_iter == 5000);
  CHECK(config.seed == 9);
  CHECK(config.trials == 17);
  CHECK(config.ray_length == 33);
  CHECK(config.dimension_depth == 3);
  CHECK(config.dimension_tol == 1e-6);
  REQUIRE(config.words.size() == 2);
  CHECK(config.words[1] == "ab");
  REQUIRE(config.validate_radius.has_value());
  CHECK(*config.validate_radius == 2);
}
