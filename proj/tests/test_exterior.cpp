#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holderdeg/clifford_words.hpp"
#include "holderdeg/constants.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/exterior.hpp"
#include "holderdeg/projections.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/random.hpp"

using namespace holderdeg;
using namespace holderdeg::exterior;
using geometry::ChartPoint;

namespace {
double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

ChartPoint pt(double a, double b) {
  Eigen::VectorXd x(2);
  x << a, b;
  return ChartPoint(x);
}
}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("generator relations") {
    for (int n = 1; n <= 3; ++n) {
      const auto I = ExteriorOperator::identity(n).matrix();
      for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
          const auto w = wedge(i, n).matrix(), c = contraction(j, n).matrix();
          const Eigen::MatrixXcd target = i == j ? Eigen::MatrixXcd(I) : Eigen::MatrixXcd::Zero(I.rows(), I.cols());
          CHECK(max_abs(w * c + c * w - target) == 0.0);
          CHECK(max_abs(w * w) == 0.0);
          CHECK(max_abs(wedge(i, n).matrix().adjoint() - contraction(i, n).matrix()) == 0.0);
        }
    }
  }

  TEST_CASE("wedge_minus_contract by hand, n = 1") {
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(2);
    e1(0) = 1.0;
    const auto g = wedge_minus_contract(e1).matrix();
    // basis 0 = 1, 1 = e1, 2 = e2, 3 = e1^e2
    Eigen::Matrix4cd expect = Eigen::Matrix4cd::Zero();
    expect(1, 0) = 1.0;   // 1 -> e1
    expect(0, 1) = -1.0;  // e1 -> -1
    expect(3, 2) = 1.0;   // e2 -> e1^e2
    expect(2, 3) = -1.0;  // e1^e2 -> -e2
    CHECK(max_abs(g - expect) == 0.0);
    CHECK(max_abs(wedge_minus_contract(Eigen::VectorXd::Zero(2)).matrix()) == 0.0);
  }

  TEST_CASE("Clifford squares and anticommutation") {
    StreamRng rng(4, 0);
    for (int n = 1; n <= 3; ++n) {
      Eigen::VectorXd v(2 * n), u(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        v(i) = rng.normal();
        u(i) = rng.normal();
      }
      const auto I = ExteriorOperator::identity(n).matrix();
      const auto gv = wedge_minus_contract(v).matrix(), hu = wedge_plus_contract(u).matrix();
      CHECK(max_abs(gv * gv + v.squaredNorm() * I) < 1e-12);
      CHECK(max_abs(hu * hu - u.squaredNorm() * I) < 1e-12);
      CHECK(max_abs(gv * hu + hu * gv) < 1e-12);
    }
  }

  TEST_CASE("tau: involution, traceless, swaps degrees") {
    for (int n = 1; n <= 3; ++n) {
      const auto t = tau(n).matrix();
      CHECK(max_abs(t * t - ExteriorOperator::identity(n).matrix()) < 1e-14);
      CHECK(std::abs(t.trace()) < 1e-14);
      for (int p = 0; p <= 2 * n; ++p) {
        const Eigen::MatrixXcd moved = t * degree_projector(n, p).matrix();
        CHECK(max_abs(moved - degree_projector(n, 2 * n - p).matrix() * moved) < 1e-14);
      }
    }
    CHECK(std::abs(supertrace(ExteriorOperator::identity(1))) < 1e-14);
  }

  TEST_CASE("harmonic projector is P_0 + P_top") {
    for (int n = 1; n <= 3; ++n) {
      const auto h = harmonic_projector(n).matrix();
      CHECK(max_abs(h - degree_projector(n, 0).matrix() - degree_projector(n, 2 * n).matrix()) < 1e-15);
      CHECK(std::abs(h.trace() - 2.0) < 1e-15);
    }
  }

  TEST_CASE("supertrace is graded with respect to tau") {
    StreamRng rng(8, 0);
    const int n = 2;
    const auto t = tau(n).matrix();
    const int d = exterior_dim(n);
    for (int trial = 0; trial < 10; ++trial) {
      Eigen::MatrixXcd A(d, d), B(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          A(i, j) = {rng.normal(), rng.normal()};
          B(i, j) = {rng.normal(), rng.normal()};
        }
      const Eigen::MatrixXcd Ao = 0.5 * (A - t * A * t), Bo = 0.5 * (B - t * B * t);
      const Eigen::MatrixXcd Ae = 0.5 * (A + t * A * t);
      const Complex oo = supertrace(ExteriorOperator(n, Ao * Bo)) + supertrace(ExteriorOperator(n, Bo * Ao));
      const Complex eo = supertrace(ExteriorOperator(n, Ae * Bo)) - supertrace(ExteriorOperator(n, Bo * Ae));
      CHECK(std::abs(oo) < 1e-10);
      CHECK(std::abs(eo) < 1e-10);
    }
  }

  TEST_CASE("K1: antisymmetry, square, homogeneity, errors") {
    const auto c = constants::analytic_constants(1);
    const ChartPoint x = pt(0.3, -0.2), y = pt(-1.1, 0.5);
    const auto a = K1(x, y, 1, c.c_n).matrix();
    CHECK(max_abs(a + K1(y, x, 1, c.c_n).matrix()) == 0.0);
    const double r = (x.coords() - y.coords()).norm();
    CHECK(max_abs(a * a + c.c_n * c.c_n / (2.0 * std::pow(r, 4)) * ExteriorOperator::identity(1).matrix()) < 1e-13);
    const double lambda = 3.0;
    const auto scaled = K1(ChartPoint(lambda * x.coords()), ChartPoint(lambda * y.coords()), 1, c.c_n).matrix();
    CHECK(max_abs(scaled * std::pow(lambda, 2) - a) < 1e-14);
    CHECK_THROWS_AS(K1(x, x, 1, c.c_n), SingularityError);
    CHECK_THROWS_AS(K1(x, ChartPoint::infinity(2), 1, c.c_n), PreconditionError);
  }

  TEST_CASE("K3: value at the origin, symmetry, decay") {
    const auto c = constants::analytic_constants(1);
    const auto k00 = K3(pt(0, 0), pt(0, 0), 1, c.c_prime).matrix();
    CHECK(std::abs(k00(0, 0) - c.c_prime * c.c_prime) < 1e-15);
    CHECK(std::abs(k00(3, 3) - c.c_prime * c.c_prime) < 1e-15);
    CHECK(std::abs(k00(1, 1)) == 0.0);
    const ChartPoint x = pt(1.0, 2.0), y = pt(-0.5, 0.1);
    CHECK(max_abs(K3(x, y, 1, c.c_prime).matrix() - K3(y, x, 1, c.c_prime).matrix()) == 0.0);
    CHECK(std::abs(K3(x, y, 1, c.c_prime).matrix()(0, 0) - c.c_prime * c.c_prime / (6.0 * 1.26)) < 1e-15);
  }

  TEST_CASE("K3 composes to itself against Lebesgue measure") {
    // \int g(z)^2 dz over R^{2n} by radial quadrature, n = 1, 2
    for (int n = 1; n <= 2; ++n) {
      const double cp = constants::analytic_c_prime(n);
      const auto rule = quadrature::gauss_legendre(120);
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = 0.5 * (rule.nodes[i] + 1.0);
        const double r = t / (1.0 - t);
        const double g = cp * std::pow(1.0 + r * r, -n);
        s += 0.5 * rule.weights[i] * geometry::sphere_volume(2 * n - 1) * std::pow(r, 2 * n - 1) * g * g /
             ((1.0 - t) * (1.0 - t));
      }
      CHECK(s == doctest::Approx(1.0).epsilon(1e-8));
    }
  }

  TEST_CASE("Clifford words reproduce the matrix algebra") {
    StreamRng rng(12, 0);
    for (int n = 1; n <= 2; ++n) {
      const int d = 2 * n;
      std::vector<Eigen::MatrixXcd> g(d), h(d);
      for (int j = 0; j < d; ++j) {
        g[j] = (wedge(j, n) - contraction(j, n)).matrix();
        h[j] = (wedge(j, n) + contraction(j, n)).matrix();
      }
      auto to_matrix = [&](const CliffordPolynomial& p) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(exterior_dim(n), exterior_dim(n));
        for (const auto& [key, coef] : p.terms()) {
          Eigen::MatrixXcd w = Eigen::MatrixXcd::Identity(exterior_dim(n), exterior_dim(n));
          for (int j = 0; j < d; ++j)
            if (key.first >> j & 1u) w = w * g[j];
          for (int j = 0; j < d; ++j)
            if (key.second >> j & 1u) w = w * h[j];
          m += coef * w;
        }
        return m;
      };
      for (int trial = 0; trial < 20; ++trial) {
        const auto a = CliffordPolynomial::word(n, static_cast<std::uint32_t>(rng.below(1u << d)),
                                                static_cast<std::uint32_t>(rng.below(1u << d)), Complex(rng.normal(), 0));
        const auto b = CliffordPolynomial::word(n, static_cast<std::uint32_t>(rng.below(1u << d)),
                                                static_cast<std::uint32_t>(rng.below(1u << d)), Complex(0, rng.normal()));
        CHECK(max_abs(to_matrix(a * b) - to_matrix(a) * to_matrix(b)) < 1e-12);
        CHECK(std::abs((a * b).trace() - (to_matrix(a) * to_matrix(b)).trace()) < 1e-12);
      }
      CHECK(max_abs(to_matrix(tau_words(n)) - tau(n).matrix()) < 1e-14);
      CHECK(max_abs(to_matrix(harmonic_projector_words(n)) - harmonic_projector(n).matrix()) < 1e-14);
    }
  }
}
