#include "holderdeg/sph_harmonics.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/quadrature.hpp"

namespace holderdeg::sph {

ThetaRule theta_rule(int nodes, double grading) {
  require(nodes >= 2, "theta_rule: need at least two nodes");
  require(grading >= 1.0, "theta_rule: grading must be at least 1");
  const quadrature::GaussRule g = quadrature::gauss_legendre(nodes);
  ThetaRule rule;
  rule.theta.reserve(nodes);
  rule.weight.reserve(nodes);
  const double p = grading;
  for (int i = 0; i < nodes; ++i) {
    const double t = 0.5 * (g.nodes[i] + 1.0);
    const double a = std::pow(t, p), b = std::pow(1.0 - t, p);
    const double s = a / (a + b);
    // g'(t) = p t^{p-1} (1-t)^{p-1} / (t^p + (1-t)^p)^2
    const double ds = p * std::pow(t, p - 1.0) * std::pow(1.0 - t, p - 1.0) / ((a + b) * (a + b));
    const double theta = std::numbers::pi * s;
    rule.theta.push_back(theta);
    rule.weight.push_back(0.5 * g.weights[i] * std::numbers::pi * ds * std::sin(theta));
  }
  return rule;
}

LegendreTable normalized_legendre(int m, int L, const std::vector<double>& theta) {
  const int am = std::abs(m);
  require(am <= L, "normalized_legendre: |m| must not exceed L");
  const int nodes = static_cast<int>(theta.size());
  LegendreTable t;
  t.m = m;
  t.L = L;
  t.value.resize(nodes, L - am + 1);
  t.dtheta.resize(nodes, L - am + 1);
  for (int i = 0; i < nodes; ++i) {
    const double c = std::cos(theta[i]), s = std::sin(theta[i]);
    // Sectoral start Pbar_m^m = k_m sin^m, carried with its theta-derivative.
    double p = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    double dp = 0.0;
    for (int k = 1; k <= am; ++k) {
      const double f = std::sqrt((2.0 * k + 1.0) / (2.0 * k));
      dp = f * (c * p + s * dp);
      p = f * s * p;
    }
    t.value(i, 0) = p;
    t.dtheta(i, 0) = dp;
    if (am == L) continue;
    const double f1 = std::sqrt(2.0 * am + 3.0);
    double q = f1 * c * p;
    double dq = f1 * (-s * p + c * dp);
    t.value(i, 1) = q;
    t.dtheta(i, 1) = dq;
    for (int l = am + 2; l <= L; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(am) * am));
      const double b = std::sqrt((static_cast<double>(l - 1) * (l - 1) - static_cast<double>(am) * am) /
                                 (4.0 * (l - 1) * (l - 1) - 1.0));
      const double r = a * (c * q - b * p);
      const double dr = a * (-s * q + c * dq - b * dp);
      p = q;
      dp = dq;
      q = r;
      dq = dr;
      t.value(i, l - am) = q;
      t.dtheta(i, l - am) = dq;
    }
  }
  return t;
}

}  // namespace holderdeg::sph
