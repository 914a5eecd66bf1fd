#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/random.hpp"

using namespace holderdeg;
using namespace holderdeg::geometry;

namespace {
Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double a : v) x(i++) = a;
  return x;
}
}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("stereographic chart at special points") {
    CHECK(stereo_to_sphere(ChartPoint(vec({0, 0})), 1).ambient().isApprox(vec({-1, 0, 0})));
    CHECK(stereo_to_sphere(ChartPoint::infinity(2), 1).ambient() == vec({1, 0, 0}));
    const auto p = stereo_to_sphere(ChartPoint(vec({1, 0})), 1).ambient();
    CHECK((p - vec({0, 1, 0})).norm() < 1e-15);
    CHECK(sphere_to_stereo(SpherePoint::north_pole(1)).is_infinite());
  }

  TEST_CASE("chart round trip and injectivity") {
    StreamRng rng(11, 0);
    for (int n = 1; n <= 3; ++n)
      for (int i = 0; i < 200; ++i) {
        const ChartPoint x = sample_sphere(rng, n);
        if (x.is_infinite()) continue;
        const ChartPoint back = sphere_to_stereo(stereo_to_sphere(x, n));
        CHECK((back.coords() - x.coords()).norm() <= 1e-12 * (1.0 + x.coords().squaredNorm()));
      }
  }

  TEST_CASE("conformal factor: values, error at infinity") {
    CHECK(conformal_volume_factor(ChartPoint(vec({0, 0})), 1) == doctest::Approx(4.0));
    CHECK(conformal_volume_factor(ChartPoint(vec({0.6, 0.8})), 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(conformal_volume_factor(ChartPoint::infinity(2), 1), PreconditionError);
  }

  TEST_CASE("conformal factor integrates to Vol(S^2) by radial quadrature") {
    // 2 pi \int_0^inf (2/(1+r^2))^2 r dr with r = t/(1-t)
    const auto rule = quadrature::gauss_legendre(80);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = 0.5 * (rule.nodes[i] + 1.0);
      const double r = t / (1.0 - t);
      const double dr = 1.0 / ((1.0 - t) * (1.0 - t));
      s += 0.5 * rule.weights[i] * 2.0 * std::numbers::pi * conformal_volume_factor(ChartPoint(vec({r, 0})), 1) * r * dr;
    }
    CHECK(s == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-10));
    CHECK(sphere_volume(2) == doctest::Approx(4.0 * std::numbers::pi));
    CHECK(sphere_volume(4) == doctest::Approx(8.0 * std::numbers::pi * std::numbers::pi / 3.0));
  }

  TEST_CASE("conformal factor matches the finite-difference Jacobian of the chart") {
    StreamRng rng(5, 0);
    for (int n = 1; n <= 2; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd x(2 * n);
        for (int i = 0; i < 2 * n; ++i) x(i) = rng.normal();
        const double h = 1e-6;
        Eigen::MatrixXd J(2 * n + 1, 2 * n);
        for (int i = 0; i < 2 * n; ++i) {
          Eigen::VectorXd a = x, b = x;
          a(i) += h;
          b(i) -= h;
          J.col(i) = (stereo_to_sphere(ChartPoint(a), n).ambient() - stereo_to_sphere(ChartPoint(b), n).ambient()) / (2 * h);
        }
        const double vol = std::sqrt((J.transpose() * J).determinant());
        CHECK(vol == doctest::Approx(conformal_volume_factor(ChartPoint(x), n)).epsilon(1e-6));
      }
  }

  TEST_CASE("chordal distance agrees with ambient distance") {
    StreamRng rng(3, 0);
    for (int i = 0; i < 100; ++i) {
      const ChartPoint a = sample_sphere(rng, 1), b = sample_sphere(rng, 1);
      const double direct = (stereo_to_sphere(a, 1).ambient() - stereo_to_sphere(b, 1).ambient()).norm();
      CHECK(chordal_distance(a, b) == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK(chordal_distance(ChartPoint(vec({0, 0})), ChartPoint::infinity(2)) == doctest::Approx(2.0));
  }

  TEST_CASE("uniform sampling: mean, volume, determinism") {
    StreamRng rng(2024, 0);
    const int N = 1'000'000;
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    double in_disc = 0.0;
    for (int i = 0; i < N; ++i) {
      const Eigen::VectorXd p = sample_sphere_ambient(rng, 1);
      mean += p;
      if (p(0) < 0.0) in_disc += 1.0;  // chart point inside the unit disc
    }
    mean /= N;
    // each coordinate has variance 1/3
    CHECK(mean.cwiseAbs().maxCoeff() < 3.0 * std::sqrt(1.0 / 3.0 / N) * 1.5);
    // \int_{|x|<1} Omega dx = 2 pi, so Vol = 2 pi / P(|x| < 1)
    const double vol = 2.0 * std::numbers::pi / (in_disc / N);
    CHECK(vol == doctest::Approx(4.0 * std::numbers::pi).epsilon(0.01));

    StreamRng a(9, 4), b(9, 4);
    for (int i = 0; i < 10; ++i) CHECK(sample_sphere_ambient(a, 2) == sample_sphere_ambient(b, 2));
  }
}
