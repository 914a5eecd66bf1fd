#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "holderdeg/geometry.hpp"

/// The rank-one projection tower p0 -> pT -> pY and its Chern data.
namespace holderdeg::projections {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a complex number or infinity.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(Complex z) : value_(z) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : value_(x, 0.0) {}  // NOLINT(google-explicit-constructor)
  static ExtendedComplex infinity();

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws PreconditionError at infinity.
  Complex value() const;

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

using Tuple = std::vector<ExtendedComplex>;

/// v(z) = (z, 1)/sqrt(1 + |z|^2); v(inf) = (1, 0).
Eigen::Vector2cd unit_vector(const ExtendedComplex& z);

/// <v(a), v(b)> = conj(v(a)) . v(b); equals (1 + conj(a) b)/sqrt((1+|a|^2)(1+|b|^2)).
Complex unit_inner(const ExtendedComplex& a, const ExtendedComplex& b);

/// Complex square matrix with p^2 = p = p^*.
class HermitianProjection {
 public:
  /// Validates idempotence and self-adjointness to `tolerance` (max-entry norm).
  explicit HermitianProjection(Eigen::MatrixXcd entries, double tolerance = 1e-12);

  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  double rank() const;

  double idempotence_defect() const;
  double hermiticity_defect() const;

 private:
  Eigen::MatrixXcd entries_;
};

double max_entry(const Eigen::MatrixXcd& m);

HermitianProjection p0(const ExtendedComplex& z);

/// p0(z1) (x) p0(z2) (x) ... (x) p0(zn), z1 outermost.
HermitianProjection pT(std::span<const ExtendedComplex> z);

/// tau(x) = x / (1 - |x|^2): the unit ball B_{2n} onto C^n, read as n complex pairs.
Tuple ball_to_complex(const Eigen::VectorXd& x);

/// A coordinate ball U in the target. Target points are given in the target's
/// stereographic chart; nu(y) = y / radius, so U = {|y| < radius}.
class BallChart {
 public:
  BallChart(int n, double radius = 1.0);

  int n() const noexcept { return n_; }
  double radius() const noexcept { return radius_; }
  Eigen::VectorXd center() const { return Eigen::VectorXd::Zero(2 * n_); }

  bool contains(const geometry::ChartPoint& y) const;
  /// The Lipschitz extension nu~: tau(nu(y)) inside U, infinity outside.
  Tuple nu_tilde(const geometry::ChartPoint& y) const;

 private:
  int n_;
  double radius_;
};

HermitianProjection pY(const geometry::ChartPoint& y, const BallChart& chart);

/// Density of the top Chern form of pT against Lebesgue measure on C^n = R^{2n}:
/// pi^{-n} prod_j (1 + |z_j|^2)^{-2}.
double chern_top_density(std::span<const Complex> z);

enum class ChernQuadrature { adaptive_radial, monte_carlo };

struct ChernQuadratureConfig {
  ChernQuadrature method = ChernQuadrature::adaptive_radial;
  double tolerance = 1e-10;
  long long samples = 1'000'000;
  std::uint64_t seed = 1;
  /// Restrict every complex coordinate to |z_j| < radius (infinite = whole space).
  double radius = std::numeric_limits<double>::infinity();
};

struct ChernIntegral {
  double value = 0.0;
  double error = 0.0;  // quadrature error estimate, or Monte Carlo standard error
  long long evaluations = 0;
};

/// Integral of chern_top_density over C^n (exact answer 1 when radius is infinite).
ChernIntegral integrate_chern_top(int n, const ChernQuadratureConfig& config = {});

/// (k!)^{-1} tr(pT(z_0) pT(z_1) ... pT(z_{2k})) via the product of unit-vector inner products.
Complex cyclic_chern_product(std::span<const Tuple> points, int k);

}  // namespace holderdeg::projections
