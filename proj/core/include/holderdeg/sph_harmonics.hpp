#pragma once

#include <vector>

#include <Eigen/Dense>

/// Fully normalized associated Legendre functions on S^2 and a colatitude rule.
///
/// Y_lm(theta, phi) = Pbar_l^{|m|}(theta) e^{i m phi} with
/// 2 pi \int_0^pi Pbar_l^m(theta)^2 sin(theta) d(theta) = 1 (no Condon-Shortley phase).
namespace holderdeg::sph {

/// Nodes in (0, pi) with weights that already include sin(theta), so
/// \int_{S^2} a dA ~= 2 pi sum_i weight_i a(theta_i) for axisymmetric a.
struct ThetaRule {
  std::vector<double> theta;
  std::vector<double> weight;
};

/// Gauss-Legendre in t on [0, 1] pulled back through theta = pi g(t), with
/// g(t) = t^p / (t^p + (1-t)^p). Grading p > 1 clusters nodes at both poles,
/// where the Holder fixtures are singular; p = 1 is plain Gauss in theta.
ThetaRule theta_rule(int nodes, double grading = 3.0);

struct LegendreTable {
  int m = 0;
  int L = 0;
  Eigen::MatrixXd value;   // nodes x (L - |m| + 1), column j holds l = |m| + j
  Eigen::MatrixXd dtheta;  // derivative in theta
};

LegendreTable normalized_legendre(int m, int L, const std::vector<double>& theta);

}  // namespace holderdeg::sph
