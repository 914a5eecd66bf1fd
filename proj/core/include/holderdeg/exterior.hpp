#pragma once

#include <complex>

#include <Eigen/Dense>

#include "holderdeg/geometry.hpp"

/// Operators on the exterior algebra of R^{2n}.
///
/// Basis vectors are indexed by subsets of {0, ..., 2n-1} stored as bitmasks, so the
/// basis element e_{j1} ^ ... ^ e_{jp} with j1 < ... < jp has index sum 2^{j}.
namespace holderdeg::exterior {

using Complex = std::complex<double>;

class ExteriorOperator {
 public:
  explicit ExteriorOperator(int n);  // zero operator
  ExteriorOperator(int n, Eigen::MatrixXcd matrix);

  static ExteriorOperator identity(int n);

  int n() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  Eigen::MatrixXcd& matrix() noexcept { return matrix_; }

  ExteriorOperator& operator+=(const ExteriorOperator& other);
  ExteriorOperator& operator-=(const ExteriorOperator& other);
  ExteriorOperator& operator*=(Complex scalar);

  friend ExteriorOperator operator+(ExteriorOperator a, const ExteriorOperator& b) { return a += b; }
  friend ExteriorOperator operator-(ExteriorOperator a, const ExteriorOperator& b) { return a -= b; }
  friend ExteriorOperator operator*(ExteriorOperator a, Complex s) { return a *= s; }
  friend ExteriorOperator operator*(Complex s, ExteriorOperator a) { return a *= s; }
  friend ExteriorOperator operator*(const ExteriorOperator& a, const ExteriorOperator& b);

 private:
  int n_;
  Eigen::MatrixXcd matrix_;
};

/// 2^{2n}.
int exterior_dim(int n);

/// Form degree of a basis index.
int form_degree(int basis_index);

/// e_j ^ (j is 0-based, j < 2n).
ExteriorOperator wedge(int j, int n);
/// Interior product with e_j; the adjoint of wedge(j, n).
ExteriorOperator contraction(int j, int n);

/// v ^ - v -|, for v in R^{2n}. Squares to -|v|^2.
ExteriorOperator wedge_minus_contract(const Eigen::VectorXd& v);

/// v ^ + v -|. Squares to +|v|^2 and anticommutes with every wedge_minus_contract.
ExteriorOperator wedge_plus_contract(const Eigen::VectorXd& v);

/// Hodge-type involution i^n (e_1^ - e_1-|) ... (e_2n^ - e_2n-|).
ExteriorOperator tau(int n);

/// Orthogonal projection onto forms of degree p.
ExteriorOperator degree_projector(int n, int p);

/// Projection onto degree-0 plus degree-2n forms (the harmonic forms on S^{2n}).
ExteriorOperator harmonic_projector(int n);

/// str(A) = tr(tau A).
Complex supertrace(const ExteriorOperator& a);

/// +1 on even forms, -1 on odd forms.
ExteriorOperator parity_operator(int n);

/// Singular kernel c_n ((x-y)^ - (x-y)-|) / (sqrt(2) |x-y|^{2n+1}).
/// Throws SingularityError when x = y and PreconditionError at infinity.
ExteriorOperator K1(const geometry::ChartPoint& x, const geometry::ChartPoint& y, int n, double c_n);

/// Harmonic kernel g(x) g(y) (P_0 + P_top) with g(x) = c'_n (1 + |x|^2)^{-n}.
ExteriorOperator K3(const geometry::ChartPoint& x, const geometry::ChartPoint& y, int n, double c_prime);

}  // namespace holderdeg::exterior
