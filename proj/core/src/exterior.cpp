#include "holderdeg/exterior.hpp"

#include <bit>
#include <cmath>

#include "holderdeg/errors.hpp"

namespace holderdeg::exterior {

int exterior_dim(int n) {
  require(n >= 1 && n <= 6, "exterior_dim: n must lie in [1, 6]");
  return 1 << (2 * n);
}

int form_degree(int basis_index) { return std::popcount(static_cast<unsigned>(basis_index)); }

ExteriorOperator::ExteriorOperator(int n)
    : n_(n), matrix_(Eigen::MatrixXcd::Zero(exterior_dim(n), exterior_dim(n))) {}

ExteriorOperator::ExteriorOperator(int n, Eigen::MatrixXcd matrix) : n_(n), matrix_(std::move(matrix)) {
  require(matrix_.rows() == exterior_dim(n) && matrix_.cols() == exterior_dim(n),
          "ExteriorOperator: matrix size must be 2^{2n}");
}

ExteriorOperator ExteriorOperator::identity(int n) {
  const int d = exterior_dim(n);
  return ExteriorOperator(n, Eigen::MatrixXcd::Identity(d, d));
}

ExteriorOperator& ExteriorOperator::operator+=(const ExteriorOperator& other) {
  require(n_ == other.n_, "ExteriorOperator: dimension mismatch");
  matrix_ += other.matrix_;
  return *this;
}

ExteriorOperator& ExteriorOperator::operator-=(const ExteriorOperator& other) {
  require(n_ == other.n_, "ExteriorOperator: dimension mismatch");
  matrix_ -= other.matrix_;
  return *this;
}

ExteriorOperator& ExteriorOperator::operator*=(Complex scalar) {
  matrix_ *= scalar;
  return *this;
}

ExteriorOperator operator*(const ExteriorOperator& a, const ExteriorOperator& b) {
  require(a.n() == b.n(), "ExteriorOperator: dimension mismatch");
  return ExteriorOperator(a.n(), a.matrix() * b.matrix());
}

namespace {

// Sign of moving e_j past the basis vectors of `mask` with index below j.
double koszul_sign(int mask, int j) {
  const unsigned below = static_cast<unsigned>(mask) & ((1u << j) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

ExteriorOperator wedge(int j, int n) {
  require(j >= 0 && j < 2 * n, "wedge: index out of range");
  ExteriorOperator op(n);
  const int d = exterior_dim(n);
  for (int s = 0; s < d; ++s) {
    if (s & (1 << j)) continue;
    op.matrix()(s | (1 << j), s) = koszul_sign(s, j);
  }
  return op;
}

ExteriorOperator contraction(int j, int n) {
  ExteriorOperator w = wedge(j, n);
  return ExteriorOperator(n, w.matrix().adjoint());
}

namespace {

ExteriorOperator clifford_combination(const Eigen::VectorXd& v, double contraction_sign) {
  require(v.size() % 2 == 0 && v.size() > 0, "clifford generator: vector length must be 2n");
  const int n = static_cast<int>(v.size() / 2);
  ExteriorOperator op(n);
  const int d = exterior_dim(n);
  for (int j = 0; j < 2 * n; ++j) {
    if (v(j) == 0.0) continue;
    for (int s = 0; s < d; ++s) {
      const double sign = koszul_sign(s, j);
      if (s & (1 << j))
        op.matrix()(s & ~(1 << j), s) += contraction_sign * sign * v(j);
      else
        op.matrix()(s | (1 << j), s) += sign * v(j);
    }
  }
  return op;
}

}  // namespace

ExteriorOperator wedge_minus_contract(const Eigen::VectorXd& v) { return clifford_combination(v, -1.0); }

ExteriorOperator wedge_plus_contract(const Eigen::VectorXd& v) { return clifford_combination(v, 1.0); }

ExteriorOperator tau(int n) {
  ExteriorOperator t = ExteriorOperator::identity(n);
  for (int j = 0; j < 2 * n; ++j) t = t * wedge_minus_contract(Eigen::VectorXd::Unit(2 * n, j));
  Complex phase(1.0, 0.0);
  for (int j = 0; j < n; ++j) phase *= Complex(0.0, 1.0);
  return t * phase;
}

ExteriorOperator degree_projector(int n, int p) {
  ExteriorOperator op(n);
  const int d = exterior_dim(n);
  for (int s = 0; s < d; ++s)
    if (form_degree(s) == p) op.matrix()(s, s) = 1.0;
  return op;
}

ExteriorOperator harmonic_projector(int n) { return degree_projector(n, 0) + degree_projector(n, 2 * n); }

Complex supertrace(const ExteriorOperator& a) {
  // tau is a signed permutation times a phase; build it once per n.
  thread_local int cached_n = 0;
  thread_local Eigen::MatrixXcd cached;
  if (cached_n != a.n()) {
    cached = tau(a.n()).matrix();
    cached_n = a.n();
  }
  return (cached.transpose().cwiseProduct(a.matrix())).sum();
}

ExteriorOperator parity_operator(int n) {
  ExteriorOperator op(n);
  const int d = exterior_dim(n);
  for (int s = 0; s < d; ++s) op.matrix()(s, s) = (form_degree(s) % 2 == 0) ? 1.0 : -1.0;
  return op;
}

ExteriorOperator K1(const geometry::ChartPoint& x, const geometry::ChartPoint& y, int n, double c_n) {
  require(!x.is_infinite() && !y.is_infinite(), "K1: points must be finite");
  require(x.dim() == 2 * n && y.dim() == 2 * n, "K1: points must lie in R^{2n}");
  const Eigen::VectorXd diff = x.coords() - y.coords();
  const double r = diff.norm();
  if (r == 0.0) throw SingularityError("K1: evaluated on the diagonal x = y");
  const double scale = c_n / (std::sqrt(2.0) * std::pow(r, 2 * n + 1));
  return wedge_minus_contract(diff) * Complex(scale, 0.0);
}

ExteriorOperator K3(const geometry::ChartPoint& x, const geometry::ChartPoint& y, int n, double c_prime) {
  require(!x.is_infinite() && !y.is_infinite(), "K3: points must be finite");
  require(x.dim() == 2 * n && y.dim() == 2 * n, "K3: points must lie in R^{2n}");
  const double gx = c_prime * std::pow(1.0 + x.norm_squared(), -n);
  const double gy = c_prime * std::pow(1.0 + y.norm_squared(), -n);
  return harmonic_projector(n) * Complex(gx * gy, 0.0);
}

}  // namespace holderdeg::exterior
