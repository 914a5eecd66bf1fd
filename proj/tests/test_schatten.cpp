#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/random.hpp"
#include "holderdeg/schatten.hpp"

using namespace holderdeg;
using namespace holderdeg::schatten;

namespace {
struct Grid {
  Eigen::VectorXd x, w;
};
Grid unit_grid(int N) {
  const auto r = quadrature::gauss_legendre(N);
  Grid g{Eigen::VectorXd(N), Eigen::VectorXd(N)};
  for (int i = 0; i < N; ++i) {
    g.x(i) = 0.5 * (r.nodes[i] + 1.0);
    g.w(i) = 0.5 * r.weights[i];
  }
  return g;
}
}  // namespace

TEST_SUITE("schatten") {
  TEST_CASE("mixed norm: constant, separable, brute force") {
    const Grid g = unit_grid(20);
    const auto one = DiscretizedKernel::sample([](double, double) { return Complex(1.0, 0.0); }, g.x, g.w, g.x, g.w);
    CHECK(mixed_norm(one, 1.5, 3.0) == doctest::Approx(1.0).epsilon(1e-14));

    auto gx = [](double x) { return 1.0 + x * x; };
    auto hy = [](double y) { return std::exp(-y); };
    const auto sep = DiscretizedKernel::sample([&](double x, double y) { return Complex(gx(x) * hy(y), 0.0); }, g.x, g.w,
                                               g.x, g.w);
    const double p = 1.5, q = 3.0;
    double gp = 0.0, hq = 0.0;
    for (int i = 0; i < 20; ++i) {
      gp += g.w(i) * std::pow(gx(g.x(i)), p);
      hq += g.w(i) * std::pow(hy(g.x(i)), q);
    }
    CHECK(mixed_norm(sep, p, q) == doctest::Approx(std::pow(gp, 1 / p) * std::pow(hq, 1 / q)).epsilon(1e-13));

    StreamRng rng(3, 0);
    DiscretizedKernel k{Eigen::MatrixXcd(7, 5), Eigen::VectorXd(7), Eigen::VectorXd(5)};
    for (int i = 0; i < 7; ++i) k.x_weights(i) = rng.uniform() + 0.1;
    for (int j = 0; j < 5; ++j) k.y_weights(j) = rng.uniform() + 0.1;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 5; ++j) k.values(i, j) = {rng.normal(), rng.normal()};
    double outer = 0.0;
    for (int j = 0; j < 5; ++j) {
      double inner = 0.0;
      for (int i = 0; i < 7; ++i) inner += k.x_weights(i) * std::pow(std::abs(k.values(i, j)), p);
      outer += k.y_weights(j) * std::pow(inner, q / p);
    }
    CHECK(mixed_norm(k, p, q) == doctest::Approx(std::pow(outer, 1 / q)).epsilon(1e-12));
  }

  TEST_CASE("Schatten norms") {
    const int N = 9;
    CHECK(schatten_norm(Eigen::MatrixXcd::Identity(N, N), 3.0) == doctest::Approx(std::pow(N, 1.0 / 3.0)));
    Eigen::VectorXcd u(3), v(4);
    u << 1.0, Complex(0, 2), -1.0;
    v << 0.5, 0.5, Complex(1, 1), 0.0;
    const Eigen::MatrixXcd r1 = u * v.adjoint();
    CHECK(schatten_norm(r1, 4.0) == doctest::Approx(u.norm() * v.norm()).epsilon(1e-13));

    StreamRng rng(1, 0);
    Eigen::MatrixXcd m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = {rng.normal(), rng.normal()};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.adjoint() * m);
    const double q = 3.0;
    const double oracle = std::pow(es.eigenvalues().array().max(0.0).pow(q / 2).sum(), 1 / q);
    CHECK(schatten_norm(m, q) == doctest::Approx(oracle).epsilon(1e-10));
    // monotone in q
    CHECK(schatten_norm(m, 4.0) <= schatten_norm(m, 3.0));
    CHECK(schatten_norm(m, 3.0) <= schatten_norm(m, 2.0));
  }

  TEST_CASE("Russo bound") {
    const Grid g = unit_grid(16);
    const auto one = DiscretizedKernel::sample([](double, double) { return Complex(1.0, 0.0); }, g.x, g.w, g.x, g.w);
    for (double q : {3.0, 4.0}) {
      const auto r = russo_check(one, q);
      CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.holds);
    }
    Eigen::VectorXd mid(24), mw = Eigen::VectorXd::Constant(24, 1.0 / 24);
    for (int i = 0; i < 24; ++i) mid(i) = (i + 0.5) / 24;
    const Grid gg = unit_grid(24);
    const auto sing = DiscretizedKernel::sample(
        [](double x, double y) { return Complex(std::pow(std::abs(x - y), -0.4), 0.0); }, gg.x, gg.w, mid, mw);
    CHECK(russo_check(sing, 3.0).holds);
    CHECK_THROWS_AS(russo_check(one, 2.0), PreconditionError);
  }

  TEST_CASE("trace formula") {
    const Grid g = unit_grid(10);
    std::vector<DiscretizedKernel> ks;
    for (int j = 0; j < 4; ++j)
      ks.push_back(DiscretizedKernel::sample(
          [j](double x, double y) { return std::exp(Complex(0.0, (j + 1) * x * y)) * (1.0 + x - y); }, g.x, g.w, g.x,
          g.w));
    const auto r = trace_product_check(ks, 3.0);
    CHECK(r.difference < 1e-12);
    CHECK_THROWS_AS(trace_product_check(std::span(ks).first(2), 3.0), PreconditionError);
  }

  TEST_CASE("chordal power coefficients against adaptive quadrature") {
    // (1/2pi) \int_0^{2pi} |2 sin(x/2)|^alpha cos(jx) dx, frozen from an arbitrary-precision quadrature
    const auto a = chordal_power_coefficients(0.5, 5);
    CHECK(a[0] == doctest::Approx(1.0787052023767587).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(-0.21574104047535175).epsilon(1e-12));
    CHECK(a[2] == doctest::Approx(-0.07191368015845058).epsilon(1e-12));
    CHECK(a[5] == doctest::Approx(-0.017897069722691322).epsilon(1e-12));
    const auto b = chordal_power_coefficients(1.0, 5);
    CHECK(b[0] == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-12));
    CHECK(b[1] == doctest::Approx(-0.42441318157838753).epsilon(1e-12));
    CHECK(b[5] == doctest::Approx(-0.012861005502375381).epsilon(1e-12));
  }

  TEST_CASE("commutator summability: circle plateau above the threshold") {
    const std::vector<int> sizes{16, 32, 64};
    const auto t = commutator_summability(CommutatorDomain::circle, 1.0, sizes, 3.0);
    CHECK(t.admissible);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.max_relative_deviation < 0.1);
    const auto sub = commutator_summability(CommutatorDomain::circle, 0.5, sizes, 1.5);
    CHECK(!sub.admissible);
  }
}
