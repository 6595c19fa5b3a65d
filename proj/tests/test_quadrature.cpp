#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hermitex/error.hpp"
#include "hermitex/quadrature.hpp"
#include "support/oracles.hpp"

using namespace hermitex;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

TEST_CASE("one- and two-point rules") {
  const auto one = build_rule(1);
  REQUIRE(one.order() == 1);
  CHECK(one.nodes()[0] == 0.0);
  CHECK(one.weights()[0] == doctest::Approx(kSqrtPi).epsilon(1e-15));

  const auto two = build_rule(2);
  REQUIRE(two.order() == 2);
  CHECK(two.nodes()[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(two.nodes()[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(two.weights()[0] == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
  CHECK(two.weights()[1] == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));
}

TEST_CASE("rule invariants across orders") {
  for (std::size_t m = 1; m <= 120; ++m) {
    const auto rule = build_rule(m);
    const auto t = rule.nodes();
    const auto w = rule.weights();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      total += w[i];
      CHECK(w[i] > 0.0);
      CHECK(std::abs(t[i] + t[m - 1 - i]) <= 1e-12);
      if (i > 0) CHECK(t[i] > t[i - 1]);
    }
    CHECK(std::abs(total - kSqrtPi) <= 1e-12 * kSqrtPi);
  }
}

TEST_CASE("polynomial exactness sweep") {
  for (const std::size_t m : {2, 5, 10, 20, 40}) {
    const auto rule = build_rule(m);
    for (unsigned j = 0; j <= 2 * m - 1; ++j) {
      const double got = integrate([j](double t) { return std::pow(t, j); }, rule);
      const double closed = testing::gaussian_moment(j);
      CHECK_MESSAGE(std::abs(got - closed) <= 1e-11 * std::max(1.0, closed), "m = " << m << ", j = " << j);
    }
  }
}

TEST_CASE("weights stay positive up to m = 380") {
  for (std::size_t m = 150; m <= 380; m += 23) {
    const auto rule = build_rule(m);
    for (const double w : rule.weights()) CHECK(w > 0.0);
  }
}

TEST_CASE("integrate examples") {
  const auto rule = build_rule(6);
  CHECK(integrate([](double) { return 1.0; }, rule) == doctest::Approx(kSqrtPi).epsilon(1e-14));
  CHECK(integrate([](double t) { return t * t; }, rule) == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
  for (const std::size_t m : {1, 2, 7}) {
    CHECK(std::abs(integrate([](double t) { return std::pow(t, 7); }, build_rule(m))) < 1e-12);
  }
  const Complex c = integrate([](double t) { return Complex(t * t, 1.0); }, rule);
  CHECK(c.real() == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
  CHECK(c.imag() == doctest::Approx(kSqrtPi).epsilon(1e-14));
}

TEST_CASE("determinism") {
  for (const std::size_t m : {3, 17, 64, 200}) CHECK(build_rule(m) == build_rule(m));
}

TEST_CASE("out-of-range orders and underflowing weights are rejected") {
  CHECK_THROWS_AS(build_rule(0), DomainError);
  CHECK_THROWS_AS(build_rule(501), DomainError);
  // the outermost weights of very large rules are below the double range
  CHECK_THROWS_AS(build_rule(500), NumericalError);
}

TEST_CASE("default node policy") {
  CHECK(default_rule_order(0) == 3);
  CHECK(default_rule_order(1) == 3);
  CHECK(default_rule_order(2) == 4);
  CHECK(default_rule_order(30) == 18);
  for (std::size_t d = 0; d < 60; ++d) CHECK(2 * default_rule_order(d) - 1 >= d);
}
