#include "holderdeg/schatten.hpp"

#include <cmath>
#include <cstdlib>

#include "holderdeg/errors.hpp"
#include "holderdeg/specmod.hpp"
#include "holderdeg/sph_harmonics.hpp"

namespace holderdeg::schatten {

DiscretizedKernel DiscretizedKernel::sample(const std::function<Complex(double, double)>& k,
                                            const Eigen::VectorXd& x_nodes, const Eigen::VectorXd& x_weights,
                                            const Eigen::VectorXd& y_nodes, const Eigen::VectorXd& y_weights) {
  require(x_nodes.size() == x_weights.size() && y_nodes.size() == y_weights.size(),
          "DiscretizedKernel: nodes and weights differ in length");
  require((x_weights.array() > 0.0).all() && (y_weights.array() > 0.0).all(),
          "DiscretizedKernel: weights must be positive");
  DiscretizedKernel d;
  d.values.resize(x_nodes.size(), y_nodes.size());
  for (Eigen::Index i = 0; i < x_nodes.size(); ++i)
    for (Eigen::Index j = 0; j < y_nodes.size(); ++j) d.values(i, j) = k(x_nodes(i), y_nodes(j));
  d.x_weights = x_weights;
  d.y_weights = y_weights;
  return d;
}

DiscretizedKernel DiscretizedKernel::adjoint() const {
  DiscretizedKernel d;
  d.values = values.adjoint();
  d.x_weights = y_weights;
  d.y_weights = x_weights;
  return d;
}

Eigen::MatrixXcd DiscretizedKernel::operator_matrix() const {
  return x_weights.cwiseSqrt().asDiagonal() * values * y_weights.cwiseSqrt().asDiagonal();
}

double mixed_norm(const DiscretizedKernel& k, double p, double q) {
  require(p >= 1.0 && q >= 1.0, "mixed_norm: exponents must be at least 1");
  require(k.values.rows() == k.x_weights.size() && k.values.cols() == k.y_weights.size(),
          "mixed_norm: weights do not match the grid");
  const Eigen::ArrayXXd a = k.values.cwiseAbs().array().pow(p);
  const Eigen::ArrayXd inner = (a.colwise() * k.x_weights.array()).colwise().sum().transpose();
  const double outer = (inner.pow(q / p) * k.y_weights.array()).sum();
  return std::pow(outer, 1.0 / q);
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return {};
  return Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues();
}

double schatten_norm_from_singular_values(const Eigen::VectorXd& sigma, double q) {
  require(q >= 1.0, "schatten_norm: q must be at least 1");
  if (sigma.size() == 0) return 0.0;
  const double top = sigma.maxCoeff();
  if (top == 0.0) return 0.0;
  // Scale by the largest singular value to keep sigma^q in range.
  return top * std::pow((sigma.array() / top).pow(q).sum(), 1.0 / q);
}

double schatten_norm(const Eigen::MatrixXcd& m, double q) {
  return schatten_norm_from_singular_values(singular_values(m), q);
}

RussoCheck russo_check(const DiscretizedKernel& k, double q) {
  require(q > 2.0, "russo_check: q must exceed 2");
  const double qp = q / (q - 1.0);
  RussoCheck r;
  r.lhs = schatten_norm(k.operator_matrix(), q);
  r.rhs = std::sqrt(mixed_norm(k, qp, q) * mixed_norm(k.adjoint(), qp, q));
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-8);
  return r;
}

TraceCheck trace_product_check(std::span<const DiscretizedKernel> kernels, double q) {
  const int m = static_cast<int>(kernels.size());
  require(q > 2.0 && m >= q, "trace_product_check: need m >= q > 2");
  const Eigen::Index N = kernels.front().values.rows();
  const Eigen::VectorXd& w = kernels.front().x_weights;
  for (const auto& k : kernels) {
    require(k.values.rows() == N && k.values.cols() == N, "trace_product_check: kernels must share a square grid");
    require(k.x_weights == w && k.y_weights == w, "trace_product_check: kernels must share weights");
  }
  TraceCheck r;
  Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(N, N);
  for (const auto& k : kernels) prod = prod * k.operator_matrix();
  r.matrix_trace = prod.trace();

  // Brute-force multi-sum over (i_1, ..., i_m).
  std::vector<Eigen::Index> idx(m, 0);
  Complex total(0.0, 0.0);
  while (true) {
    Complex term(1.0, 0.0);
    for (int j = 0; j < m; ++j) term *= kernels[j].values(idx[j], idx[(j + 1) % m]) * w(idx[j]);
    total += term;
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == N - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  r.integral_value = total;
  r.difference = std::abs(r.matrix_trace - r.integral_value);
  return r;
}

std::string to_string(CommutatorDomain d) { return d == CommutatorDomain::circle ? "circle" : "sphere"; }

std::vector<double> chordal_power_coefficients(double alpha, int jmax) {
  require(alpha > 0.0, "chordal_power_coefficients: alpha must be positive");
  std::vector<double> c(jmax + 1);
  c[0] = std::exp(std::lgamma(alpha + 1.0) - 2.0 * std::lgamma(0.5 * alpha + 1.0));
  for (int j = 0; j < jmax; ++j) c[j + 1] = c[j] * (j - 0.5 * alpha) / (j + 1.0 + 0.5 * alpha);
  return c;
}

namespace {

SummabilityRow circle_row(double alpha, int size, double q) {
  const int half = size / 2;
  const int dim = 2 * half + 1;
  const std::vector<double> c = chordal_power_coefficients(alpha, 2 * half);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(dim, dim);
  auto sgn = [](int j) { return j >= 0 ? 1.0 : -1.0; };
  for (int a = -half; a <= half; ++a)
    for (int b = -half; b <= half; ++b) T(a + half, b + half) = (sgn(a) - sgn(b)) * c[std::abs(a - b)];
  return {size, dim, schatten_norm(T, q)};
}

SummabilityRow sphere_row(double alpha, int L, double q) {
  const sph::ThetaRule rule = sph::theta_rule(4 * L + 96, 3.0);
  std::vector<Complex> profile(rule.theta.size());
  for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = std::pow(rule.theta[i], alpha);
  double sum = 0.0;
  double top = 0.0;
  std::vector<Eigen::VectorXd> all;
  int dim = 0;
  for (int m = -L; m <= L; ++m) {
    const specmod::FormBasis b = specmod::FormBasis::for_mode(m, L);
    const Eigen::MatrixXcd M = specmod::multiplication_block(profile, b, b, rule);
    const Eigen::MatrixXcd F = specmod::sign_operator(b).cast<Complex>();
    all.push_back(singular_values(F * M - M * F));
    if (all.back().size() > 0) top = std::max(top, all.back().maxCoeff());
    dim += b.size();
  }
  if (top > 0.0)
    for (const auto& s : all) sum += (s.array() / top).pow(q).sum();
  return {L, dim, top * std::pow(sum, 1.0 / q)};
}

}  // namespace

SummabilityTable commutator_summability(CommutatorDomain domain, double alpha, std::span<const int> sizes, double q) {
  require(alpha > 0.0 && alpha <= 1.0, "commutator_summability: alpha must lie in (0, 1]");
  require(q >= 1.0, "commutator_summability: q must be at least 1");
  require(!sizes.empty(), "commutator_summability: need at least one size");
  SummabilityTable t;
  t.domain = domain;
  t.alpha = alpha;
  t.q = q;
  const double dim = domain == CommutatorDomain::circle ? 1.0 : 2.0;
  t.admissible = q > std::max(dim / alpha, 2.0);
  for (int s : sizes) {
    require(s >= 2, "commutator_summability: sizes must be at least 2");
    t.rows.push_back(domain == CommutatorDomain::circle ? circle_row(alpha, s, q) : sphere_row(alpha, s, q));
  }
  const double finest = t.rows.back().norm;
  for (const auto& r : t.rows) t.max_relative_deviation = std::max(t.max_relative_deviation, std::abs(r.norm / finest - 1.0));
  for (std::size_t i = 1; i < t.rows.size(); ++i) t.growth.push_back(t.rows[i].norm / t.rows[i - 1].norm);
  return t;
}

}  // namespace holderdeg::schatten
