#include "doctest.h"

#include <cmath>
#include <numbers>

#include "holderdeg/constants.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/exterior.hpp"
#include "holderdeg/kernels.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/random.hpp"

using namespace holderdeg;
using namespace holderdeg::exterior;
using geometry::ChartPoint;
using projections::Tuple;

namespace {
std::vector<ChartPoint> random_points(StreamRng& rng, int n, int count) {
  std::vector<ChartPoint> pts;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(2 * n);
    for (int j = 0; j < 2 * n; ++j) x(j) = 1.3 * rng.normal();
    pts.emplace_back(x);
  }
  return pts;
}

// K1 and K3 written out from wedge and contraction matrices.
Eigen::MatrixXcd dense_K1(const ChartPoint& x, const ChartPoint& y, int n, double c) {
  const Eigen::VectorXd d = x.coords() - y.coords();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(exterior_dim(n), exterior_dim(n));
  for (int j = 0; j < 2 * n; ++j) m += d(j) * (wedge(j, n).matrix() - contraction(j, n).matrix());
  return m * (c / (std::sqrt(2.0) * std::pow(d.norm(), 2 * n + 1)));
}

Eigen::MatrixXcd dense_K3(const ChartPoint& x, const ChartPoint& y, int n, double cp) {
  const Eigen::MatrixXcd p = degree_projector(n, 0).matrix() + degree_projector(n, 2 * n).matrix();
  return p * (cp * cp * std::pow(1.0 + x.norm_squared(), -n) * std::pow(1.0 + y.norm_squared(), -n));
}

Complex dense_H(const gamma::GammaSequence& I, const std::vector<ChartPoint>& pts, const constants::KernelConstants& c) {
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(exterior_dim(c.n), exterior_dim(c.n));
  const std::size_t m = pts.size();
  for (std::size_t l = 0; l < m; ++l)
    prod = prod * (I[l] <= 2 ? dense_K1(pts[l], pts[(l + 1) % m], c.n, c.c_n)
                             : dense_K3(pts[l], pts[(l + 1) % m], c.n, c.c_prime));
  return (tau(c.n).matrix() * prod).trace();
}

Complex dense_Q(const gamma::GammaSequence& I, const std::vector<Tuple>& f) {
  Eigen::MatrixXcd prod = projections::pT(f[0]).matrix();
  for (int i : I.index_map()) prod = prod * projections::pT(f[i]).matrix();
  return prod.trace();
}
}  // namespace

TEST_SUITE("kernels") {
  const auto c1 = constants::analytic_constants(1);

  TEST_CASE("H vanishes on (1,1) and (3,4), n = 1, k = 1") {
    StreamRng rng(1, 0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto pts = random_points(rng, 1, 2);
      CHECK(std::abs(H_kernel(gamma::GammaSequence(1, {1, 1}), pts, c1)) < 1e-14);
      CHECK(std::abs(H_kernel(gamma::GammaSequence(1, {3, 4}), pts, c1)) < 1e-14);
    }
  }

  TEST_CASE("H against dense products and the word expansion") {
    StreamRng rng(2, 0);
    for (int n = 1; n <= 2; ++n) {
      const auto c = constants::analytic_constants(n);
      for (int k = 1; k <= 2; ++k)
        for (const auto& I : gamma::enumerate_gamma(k)) {
          const auto pts = random_points(rng, n, 2 * k);
          const Complex h = H_kernel(I, pts, c);
          const Complex d = dense_H(I, pts, c);
          const Complex e = expanded_supertrace(I, pts, c);
          const double scale = std::max(std::abs(d), 1e-12);
          CHECK(std::abs(h - d) / scale < 1e-9);
          CHECK(std::abs(e - d) / scale < 1e-9);
        }
    }
  }

  TEST_CASE("all-singular words are homogeneous of degree -4nk") {
    StreamRng rng(3, 0);
    const auto pts = random_points(rng, 1, 4);
    std::vector<ChartPoint> scaled;
    const double lambda = 2.5;
    for (const auto& p : pts) scaled.emplace_back(lambda * p.coords());
    for (const auto& I : gamma::enumerate_gamma(2, 0)) {
      const Complex a = H_kernel(I, pts, c1), b = H_kernel(I, scaled, c1);
      CHECK(std::abs(b * std::pow(lambda, 8.0) - a) <= 1e-10 * std::max(1.0, std::abs(a)));
    }
  }

  TEST_CASE("H rejects coincident neighbours on singular slots") {
    std::vector<ChartPoint> pts(2, ChartPoint(Eigen::VectorXd::Zero(2)));
    CHECK_THROWS_AS(H_kernel(gamma::GammaSequence(1, {1, 2}), pts, c1), SingularityError);
    CHECK_NOTHROW(H_kernel(gamma::GammaSequence(1, {3, 4}), pts, c1));
  }

  TEST_CASE("Q against the dense trace; depends on I only through Lambda") {
    StreamRng rng(4, 0);
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k)
        for (const auto& I : gamma::enumerate_gamma(k)) {
          if (rng.uniform() > 0.2) continue;
          std::vector<Tuple> f;
          for (int a = 0; a < 2 * k; ++a) {
            Tuple t(n);
            for (auto& z : t) z = Complex(rng.normal(), rng.normal());
            f.push_back(t);
          }
          CHECK(std::abs(Q_factor(I, f) - dense_Q(I, f)) < 1e-10);
        }
    const std::vector<Tuple> same(4, Tuple{Complex(2.0, -1.0)});
    for (const auto& I : gamma::enumerate_gamma(2)) CHECK(std::abs(Q_factor(I, same) - 1.0) < 1e-14);
    // (1,1,2,1) and (1,3,4,1) share Lambda = (1,2,4,4)
    const gamma::GammaSequence a(2, {1, 1, 2, 1}), b(2, {1, 3, 4, 1});
    REQUIRE(a.index_map() == b.index_map());
    StreamRng r2(5, 0);
    std::vector<Tuple> f;
    for (int i = 0; i < 4; ++i) f.push_back(Tuple{Complex(r2.normal(), r2.normal())});
    CHECK(Q_factor(a, f) == Q_factor(b, f));
  }

  TEST_CASE("ftilde: term-by-term sum over Gamma_2 for the identity") {
    const auto fx = maps::make_fixture("identity");
    StreamRng rng(6, 0);
    const auto pts = random_points(rng, 1, 4);
    std::vector<Tuple> f;
    for (const auto& p : pts) f.push_back(fx.map(p));
    Complex expect(0.0, 0.0);
    std::vector<Complex> by_weight(3, 0.0);
    for (const auto& I : gamma::enumerate_gamma(2)) {
      const Complex term = I.iota() * dense_Q(I, f) * dense_H(I, pts, c1);
      expect += term;
      by_weight[I.weight()] += term;
    }
    const auto v = ftilde(fx.map, 2, pts, c1);
    CHECK(std::abs(v.total - expect) < 1e-9 * std::abs(expect));
    for (int w = 0; w <= 2; ++w) CHECK(std::abs(v.by_weight[w] - by_weight[w]) < 1e-9 * std::abs(expect));

    // The evaluator works against the round measure: ftilde / prod Omega.
    const FtildeEvaluator ev(fx.map, 2, c1);
    std::vector<Eigen::VectorXd> amb;
    double omega = 1.0;
    for (const auto& p : pts) {
      amb.push_back(geometry::stereo_to_sphere(p, 1).ambient());
      omega *= geometry::conformal_volume_factor(p, 1);
    }
    const auto e = ev(amb);
    CHECK(std::abs(e.total * omega - expect) < 1e-9 * std::abs(expect));
  }

  TEST_CASE("ftilde of a constant map has no weight-zero part") {
    const auto fx = maps::make_fixture("const");
    StreamRng rng(7, 0);
    const auto pts = random_points(rng, 1, 4);
    const auto v = ftilde(fx.map, 2, pts, c1);
    CHECK(std::abs(v.by_weight[0]) < 1e-12 * std::max(1.0, std::abs(v.total)));
  }

  TEST_CASE("ftilde preconditions") {
    const auto snow = maps::make_fixture("snowflake:0.6:2");
    StreamRng rng(8, 0);
    const auto pts2 = random_points(rng, 1, 2);
    CHECK_THROWS_AS(ftilde(snow.map, 1, pts2, c1), PreconditionError);  // k = 1 < n/alpha
    auto pts = random_points(rng, 1, 4);
    pts[2] = pts[0];
    CHECK_THROWS_AS(ftilde(maps::make_fixture("identity").map, 2, pts, c1), SingularityError);
  }

  TEST_CASE("evaluator is finite near the point at infinity") {
    const auto fx = maps::make_fixture("identity");
    const FtildeEvaluator ev(fx.map, 2, c1);
    std::vector<Eigen::VectorXd> amb;
    StreamRng rng(9, 0);
    for (int i = 0; i < 4; ++i) amb.push_back(geometry::sample_sphere_ambient(rng, 1));
    for (double eps : {1e-4, 1e-7, 1e-10}) {
      amb[0] = Eigen::Vector3d(1.0 - eps, std::sqrt(eps * (2.0 - eps)), 0.0);
      const auto e = ev(amb);
      CHECK(std::isfinite(e.total.real()));
      CHECK(std::isfinite(e.total.imag()));
    }
    // the pole itself sits on a direction-dependent edge and is rejected
    amb[0] = Eigen::Vector3d(1.0, 0.0, 0.0);
    CHECK_THROWS_AS(ev(amb), SingularityError);
  }
}
