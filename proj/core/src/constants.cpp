#include "holderdeg/constants.hpp"

#include <cmath>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/quadrature.hpp"

namespace holderdeg::constants {

double analytic_c_n(int n) {
  require(n >= 1, "analytic_c_n: n must be positive");
  const double h = (2.0 * n + 1.0) / 2.0;
  return std::sqrt(2.0) * std::tgamma(h) / std::pow(std::numbers::pi, h);
}

double analytic_c_prime(int n) {
  require(n >= 1, "analytic_c_prime: n must be positive");
  return std::pow(2.0, n) / std::sqrt(geometry::sphere_volume(2 * n));
}

KernelConstants analytic_constants(int n) {
  return {n, analytic_c_n(n), analytic_c_prime(n), "closed form"};
}

Calibration calibrate_constants(int n, int nodes) {
  require(n >= 1, "calibrate_constants: n must be positive");
  require(nodes >= 8, "calibrate_constants: need at least 8 nodes");
  const int d = 2 * n;
  const quadrature::GaussRule rule = quadrature::gauss_legendre(nodes);

  // \int_{S^{d-1}} |w_1| dw = Vol(S^{d-2}) * 2 \int_0^{pi/2} sin(t) cos(t)^{d-2} dt
  double polar = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = 0.25 * std::numbers::pi * (rule.nodes[i] + 1.0);
    polar += 0.25 * std::numbers::pi * rule.weights[i] * std::sin(t) * std::pow(std::cos(t), d - 2);
  }
  const double abs_moment = geometry::sphere_volume(d - 2) * 2.0 * polar;
  const double riesz = 1.0 / (0.5 * std::numbers::pi * abs_moment);

  // \int_{R^d} (1+|x|^2)^{-d} dx = Vol(S^{d-1}) \int_0^{pi/2} tan(t)^{d-1} cos(t)^{2d-2} dt, r = tan t
  double radial = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = 0.25 * std::numbers::pi * (rule.nodes[i] + 1.0);
    radial += 0.25 * std::numbers::pi * rule.weights[i] * std::pow(std::sin(t), d - 1) * std::pow(std::cos(t), d - 1);
  }
  const double mass = geometry::sphere_volume(d - 1) * radial;

  Calibration cal;
  cal.constants.n = n;
  cal.constants.c_n = std::sqrt(2.0) * riesz;
  cal.constants.c_prime = 1.0 / std::sqrt(mass);
  cal.constants.provenance = "calibrated: Riesz symbol normalization and L2 normalization of g, Gauss-Legendre " +
                             std::to_string(nodes) + " nodes";
  cal.c_n_analytic = analytic_c_n(n);
  cal.c_prime_analytic = analytic_c_prime(n);
  cal.c_n_relative_error = std::abs(cal.constants.c_n / cal.c_n_analytic - 1.0);
  cal.c_prime_relative_error = std::abs(cal.constants.c_prime / cal.c_prime_analytic - 1.0);
  cal.quadrature_nodes = nodes;
  return cal;
}

}  // namespace holderdeg::constants
