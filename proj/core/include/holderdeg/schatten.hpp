#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Mixed norms of discretized kernels, Schatten norms, Russo's bound, the trace
/// formula, and commutator summability experiments.
namespace holderdeg::schatten {

using Complex = std::complex<double>;

/// values(i, j) = k(x_i, y_j) on a product quadrature grid.
struct DiscretizedKernel {
  Eigen::MatrixXcd values;
  Eigen::VectorXd x_weights;
  Eigen::VectorXd y_weights;

  static DiscretizedKernel sample(const std::function<Complex(double, double)>& k, const Eigen::VectorXd& x_nodes,
                                  const Eigen::VectorXd& x_weights, const Eigen::VectorXd& y_nodes,
                                  const Eigen::VectorXd& y_weights);

  /// k*(y, x) = conj(k(x, y)).
  DiscretizedKernel adjoint() const;

  /// W_x^{1/2} K W_y^{1/2}: the matrix whose singular values approximate the operator's.
  Eigen::MatrixXcd operator_matrix() const;
};

/// (\int (\int |k(x,y)|^p dx)^{q/p} dy)^{1/q}.
double mixed_norm(const DiscretizedKernel& k, double p, double q);

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

/// (sum sigma_i^q)^{1/q}.
double schatten_norm(const Eigen::MatrixXcd& m, double q);
double schatten_norm_from_singular_values(const Eigen::VectorXd& sigma, double q);

struct RussoCheck {
  double lhs = 0.0;  // ||K||_q
  double rhs = 0.0;  // (||k||_{q',q} ||k*||_{q',q})^{1/2}
  bool holds = false;
};

/// Requires q > 2.
RussoCheck russo_check(const DiscretizedKernel& k, double q);

struct TraceCheck {
  Complex matrix_trace{0.0, 0.0};
  Complex integral_value{0.0, 0.0};
  double difference = 0.0;
};

/// tr(K_1 ... K_m) against sum_{i_1..i_m} prod_j k_j(x_{i_j}, x_{i_{j+1}}) w_{i_j}.
/// All kernels share one square grid. Requires m >= q > 2.
TraceCheck trace_product_check(std::span<const DiscretizedKernel> kernels, double q);

enum class CommutatorDomain { circle, sphere };

std::string to_string(CommutatorDomain d);

struct SummabilityRow {
  int size = 0;       // Fourier cutoff on the circle, harmonic degree L on S^2
  int dimension = 0;  // size of the discretized space
  double norm = 0.0;  // ||[F, a]||_q
};

struct SummabilityTable {
  CommutatorDomain domain = CommutatorDomain::circle;
  double alpha = 1.0;
  double q = 0.0;
  bool admissible = false;  // q > max(dim/alpha, 2)
  std::vector<SummabilityRow> rows;
  /// max over rows of |norm / finest - 1|
  double max_relative_deviation = 0.0;
  /// norm ratios between consecutive refinements
  std::vector<double> growth;
};

/// ||[F, a]||_q for a = dist(x, x0)^alpha:
///  - circle: a(x) = |2 sin(x/2)|^alpha, F = sign of the Fourier multiplier (sign 0 = +1),
///    truncated to modes |j| <= size/2;
///  - sphere: a = theta^alpha (geodesic distance to a pole), F = sign(D) for the
///    signature operator, truncated to harmonic degree <= size.
SummabilityTable commutator_summability(CommutatorDomain domain, double alpha, std::span<const int> sizes, double q);

/// Fourier coefficients of |2 sin(x/2)|^alpha, indices 0..jmax.
std::vector<double> chordal_power_coefficients(double alpha, int jmax);

}  // namespace holderdeg::schatten
