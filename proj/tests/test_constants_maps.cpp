#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holderdeg/constants.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/maps.hpp"

using namespace holderdeg;

TEST_SUITE("constants") {
  TEST_CASE("closed forms, n = 1") {
    // c_1 = sqrt(2) Gamma(3/2) / pi^{3/2},  c'_1 = 2 / sqrt(4 pi)
    CHECK(constants::analytic_c_n(1) == doctest::Approx(0.22507907903927654).epsilon(1e-15));
    CHECK(constants::analytic_c_prime(1) == doctest::Approx(0.5641895835477563).epsilon(1e-15));
  }

  TEST_CASE("calibration by quadrature reproduces the closed forms") {
    for (int n = 1; n <= 3; ++n) {
      const auto cal = constants::calibrate_constants(n);
      CHECK(cal.c_n_relative_error < 1e-10);
      CHECK(cal.c_prime_relative_error < 1e-10);
      CHECK(cal.constants.n == n);
      CHECK(!cal.constants.provenance.empty());
    }
  }
}

TEST_SUITE("maps") {
  TEST_CASE("registry builds every listed fixture") {
    for (const auto& name : maps::fixture_names()) {
      const auto fx = maps::make_fixture(name);
      CHECK(fx.map.label() == name);
      CHECK(fx.map.holder_exponent() > 0.0);
      CHECK(fx.map.holder_exponent() <= 1.0);
    }
    CHECK_THROWS_AS(maps::make_fixture("nonsense"), ConfigurationError);
    CHECK_THROWS_AS(maps::make_fixture("zpow:x"), ConfigurationError);
  }

  TEST_CASE("fixture values") {
    Eigen::VectorXd x(2);
    x << 0.5, -1.0;
    const geometry::ChartPoint p(x);
    const projections::Complex z(0.5, -1.0);
    CHECK(std::abs(maps::make_fixture("zpow:3").map(p)[0].value() - z * z * z) < 1e-14);
    CHECK(std::abs(maps::make_fixture("zpow:-2").map(p)[0].value() - std::conj(z * z)) < 1e-14);
    CHECK(std::abs(maps::make_fixture("antipodal").map(p)[0].value() + 1.0 / std::conj(z)) < 1e-14);
    CHECK(maps::make_fixture("antipodal").map(geometry::ChartPoint(Eigen::VectorXd::Zero(2)))[0].is_infinite());
    const auto snow = maps::make_fixture("snowflake:0.6:2");
    CHECK(snow.map.holder_exponent() == 0.6);
    CHECK(snow.degree == 2);
    CHECK(snow.smoothness == maps::Smoothness::holder);
    const double r = std::abs(z);
    CHECK(std::abs(snow.map(p)[0].value() - std::pow(z * std::pow(r, -0.4), 2)) < 1e-14);
  }

  TEST_CASE("declared charges are real symmetries") {
    const double phi = 0.7;
    for (const auto& name : maps::fixture_names()) {
      const auto fx = maps::make_fixture(name);
      if (!fx.charge || fx.map.n() != 1) continue;
      Eigen::VectorXd x(2);
      x << 0.4, 0.3;
      const projections::Complex z(0.4, 0.3), rot = std::polar(1.0, phi);
      const projections::Complex zr = z * rot;
      Eigen::VectorXd y(2);
      y << zr.real(), zr.imag();
      const auto a = fx.map(geometry::ChartPoint(x))[0], b = fx.map(geometry::ChartPoint(y))[0];
      if (a.is_infinite() || b.is_infinite()) continue;
      CHECK(std::abs(b.value() - std::polar(1.0, *fx.charge * phi) * a.value()) < 1e-12 * (1.0 + std::abs(a.value())));
    }
  }

  TEST_CASE("ball_identity is constant at infinity outside the chart") {
    const auto fx = maps::make_fixture("ball_identity:2");
    Eigen::VectorXd x(4);
    x << 0.9, 0.2, 0.5, 0.1;
    const auto t = fx.map(geometry::ChartPoint(x));
    CHECK(t.size() == 2);
    CHECK(t[0].is_infinite());
    CHECK(t[1].is_infinite());
  }
}
