#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/specmod.hpp"
#include "holderdeg/sph_harmonics.hpp"

using namespace holderdeg;
using namespace holderdeg::specmod;

namespace {
double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_SUITE("sph_harmonics") {
  TEST_CASE("normalized Legendre functions against an independent library") {
    // (-1)^m Re Y_l^m(theta, 0) from a reference implementation (with Condon-Shortley phase)
    struct Row {
      int l, m;
      double theta, value;
    };
    const Row rows[] = {{0, 0, 0.3, 0.28209479177387814}, {1, 0, 0.3, 0.46677980829928756},
                        {1, 1, 0.7, 0.22257344192657688}, {3, 2, 1.1, 0.3681896578454867},
                        {5, 3, 2.0, 0.14528713144968125}, {10, 4, 0.05, 0.00022854704793983678}};
    for (const auto& r : rows) {
      const auto t = sph::normalized_legendre(r.m, 10, {r.theta});
      CHECK(t.value(0, r.l - r.m) == doctest::Approx(r.value).epsilon(1e-12));
    }
  }

  TEST_CASE("derivatives match finite differences") {
    const double th = 0.9, h = 1e-6;
    const auto a = sph::normalized_legendre(2, 12, {th}), p = sph::normalized_legendre(2, 12, {th + h}),
               m = sph::normalized_legendre(2, 12, {th - h});
    for (int j = 0; j <= 10; ++j)
      CHECK(a.dtheta(0, j) == doctest::Approx((p.value(0, j) - m.value(0, j)) / (2 * h)).epsilon(1e-7));
  }

  TEST_CASE("theta rule integrates the area and orthonormality") {
    auto gram_error = [](const sph::ThetaRule& rule) {
      const auto t = sph::normalized_legendre(1, 20, rule.theta);
      double worst = 0.0;
      for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b) {
          double s = 0.0;
          for (std::size_t i = 0; i < rule.theta.size(); ++i)
            s += 2.0 * std::numbers::pi * rule.weight[i] * t.value(i, a) * t.value(i, b);
          worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
        }
      return worst;
    };
    for (double grading : {1.0, 3.0}) {
      const auto rule = sph::theta_rule(4 * 20 + 96, grading);
      double area = 0.0;
      for (double w : rule.weight) area += 2.0 * std::numbers::pi * w;
      CHECK(area == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
    }
    CHECK(gram_error(sph::theta_rule(120, 1.0)) < 1e-12);
    // graded rules trade accuracy on smooth integrands for pole resolution
    CHECK(gram_error(sph::theta_rule(4 * 20 + 96, 3.0)) < 1e-6);
    CHECK(gram_error(sph::theta_rule(240, 3.0)) < gram_error(sph::theta_rule(120, 3.0)));
  }
}

TEST_SUITE("specmod") {
  TEST_CASE("signature module: involution, grading, kernel, spectrum") {
    const auto m = build_signature_module(6, 1.3);
    const int N = static_cast<int>(m.F_tilde.rows());
    CHECK(max_abs((m.F_tilde * m.F_tilde - Eigen::MatrixXd::Identity(N, N)).cast<Complex>()) < 1e-10);
    const Eigen::MatrixXcd F = m.F_tilde.cast<Complex>();
    CHECK(max_abs(m.grading_tilde * F + F * m.grading_tilde) < 1e-10);
    CHECK(max_abs(m.grading * m.grading - Eigen::MatrixXcd::Identity(m.grading.rows(), m.grading.cols())) < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.A);
    int zeros = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (std::abs(es.eigenvalues()(i)) < 1e-12) ++zeros;
    CHECK(zeros == 2);
    // D^2 on functions: l(l+1)
    const FormBasis b = m.basis;
    const Eigen::MatrixXd D2 = m.A * m.A;
    for (int i = 0; i < b.size(); ++i)
      if (b[i].type == FormType::function) CHECK(D2(i, i) == doctest::Approx(b[i].l * (b[i].l + 1.0)));
    CHECK(max_abs((kernel_projection(b) * m.A).cast<Complex>()) < 1e-14);
  }

  TEST_CASE("multiplication operators") {
    const int L = 8;
    const auto rule = sph::theta_rule(4 * L + 96);
    const auto one = multiplication_operator([](double, double) { return Complex(1.0, 0.0); }, L, rule);
    CHECK(max_abs(one - Eigen::MatrixXcd::Identity(one.rows(), one.cols())) < 1e-10);
    const auto real = multiplication_operator(
        [](double th, double ph) { return Complex(std::cos(th) + 0.3 * std::sin(th) * std::cos(ph), 0.0); }, L, rule);
    CHECK(max_abs(real - real.adjoint()) < 1e-10);
    // grading commutes with multiplication
    const auto g = grading(FormBasis::full(L));
    CHECK(max_abs(g * real - real * g) < 1e-10);
  }

  TEST_CASE("pseudo-locality: the commutator with a smooth function decays in L") {
    double previous = 1e300;
    for (int L : {8, 16, 32}) {
      const auto b = FormBasis::for_mode(0, L);
      const auto rule = sph::theta_rule(4 * L + 96);
      std::vector<Complex> prof;
      for (double th : rule.theta) prof.push_back(std::cos(th));
      // multiplication by cos(theta) couples only m = 0 to itself
      const Eigen::MatrixXcd M = multiplication_block(prof, b, b, rule);
      const Eigen::MatrixXcd S = sign_operator(b).cast<Complex>();
      const double norm = (S * M - M * S).cwiseAbs().maxCoeff();
      CHECK(norm <= previous * 1.0001);
      previous = norm;
    }
  }

  TEST_CASE("pairing of trivial projections vanishes") {
    const auto id = constant_projection(Eigen::Matrix2cd::Identity(), "identity");
    CHECK(std::abs(connes_pairing(id, 2, 8).value) < 1e-8);
    Eigen::Matrix2cd e;
    e << 1, 0, 0, 0;
    CHECK(std::abs(connes_pairing(constant_projection(e, "e11"), 2, 8).value) < 1e-8);
    Eigen::Matrix2cd bad = Eigen::Matrix2cd::Identity() * 0.5;
    CHECK_THROWS_AS(connes_pairing(constant_projection(bad, "half"), 2, 8), PreconditionError);
  }

  TEST_CASE("pairing recovers degrees of equivariant fixtures") {
    struct Case {
      const char* name;
      int degree;
    };
    for (const Case c : {Case{"identity", 1}, Case{"zpow:2", 2}, Case{"antipodal", -1}, Case{"zpow:0", 0}}) {
      const auto fx = maps::make_fixture(c.name);
      const auto r = connes_pairing(projection_field(fx.map, fx.charge), 2, 16);
      CHECK(std::abs(r.normalized_degree - c.degree) < 0.05);
      CHECK(std::abs(r.imaginary) < 1e-8);
    }
  }

  TEST_CASE("block and dense paths agree") {
    const auto fx = maps::make_fixture("identity");
    const auto f = projection_field(fx.map, fx.charge);
    PairingOptions dense;
    dense.force_dense = true;
    const auto a = connes_pairing(f, 2, 4), b = connes_pairing(f, 2, 4, dense);
    CHECK(a.path != b.path);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
  }

  TEST_CASE("pairing is stable in t and k") {
    const auto fx = maps::make_fixture("identity");
    const auto f = projection_field(fx.map, fx.charge);
    PairingOptions t2;
    t2.t = 2.0;
    const double base = connes_pairing(f, 2, 16).value;
    CHECK(std::abs(connes_pairing(f, 2, 16, t2).value - base) < 0.1);
    CHECK(std::abs(connes_pairing(f, 3, 16).value - base) < 0.1);
  }

  TEST_CASE("t-decay of the bounded transform") {
    std::vector<double> ts;
    for (int i = 0; i <= 6; ++i) ts.push_back(std::pow(10.0, 1.0 + i / 3.0));
    const auto with = homlem_decay(ts, 16, 4.0, true);
    CHECK(with.slope > -1.3);
    CHECK(with.slope < -0.7);
    CHECK(homlem_decay(ts, 16, 4.0, false).slope > -0.2);
    CHECK(homlem_decay(std::vector<double>{1.0, 100.0}, 6, 4.0).distance[0] ==
          doctest::Approx(homlem_distance_dense(6, 1.0, 4.0)).epsilon(1e-10));
    CHECK_THROWS_AS(homlem_decay(std::vector<double>{1.0, 10.0}, 6, 4.0), PreconditionError);
  }
}
