#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holderdeg/maps.hpp"
#include "holderdeg/sph_harmonics.hpp"

/// The signature operator of S^2 discretized in a spectral form basis, its
/// bounded transform, and the operator-level index pairing.
///
/// Coordinates: theta is measured from lambda(0), so the chart coordinate is
/// z = tan(theta/2) e^{i phi} and (theta, phi) is positively oriented. For each
/// (l, m) the basis holds
///   Y = Y_lm,  E = dY/sqrt(l(l+1)),  C = *dY/sqrt(l(l+1)),  F = Y vol,
/// (E and C only for l >= 1). In the frame (d theta, sin(theta) d phi) one has
/// *(a, b) = (-b, a). On each (Y, E, C, F) quadruple
///   D = d + d* = sqrt(l(l+1)) [[0,1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,-1,0]]
/// and tau: Y -> iF, F -> -iY, E -> iC, C -> -iE.
namespace holderdeg::specmod {

using Complex = std::complex<double>;

enum class FormType { function, exact, coexact, area };

struct BasisElement {
  FormType type;
  int l;
  int m;
};

/// Ordered truncated basis: by mode m (in the order given), then l, then type.
class FormBasis {
 public:
  static FormBasis for_modes(std::span<const int> modes, int L);
  static FormBasis for_mode(int m, int L);
  static FormBasis full(int L);

  int L() const noexcept { return L_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const BasisElement& operator[](int i) const { return elements_[i]; }
  const std::vector<BasisElement>& elements() const noexcept { return elements_; }

 private:
  int L_ = 0;
  std::vector<BasisElement> elements_;
};

/// D on the basis (real, symmetric).
Eigen::MatrixXd signature_operator(const FormBasis& b);
/// The grading tau.
Eigen::MatrixXcd grading(const FormBasis& b);
/// phi(tD) = tD (1 + t^2 D^2)^{-1/2}.
Eigen::MatrixXd bounded_transform(const FormBasis& b, double t);
/// (1 + t^2 D^2)^{-1/2}.
Eigen::MatrixXd resolvent_root(const FormBasis& b, double t);
/// Orthogonal projection W0 onto ker D (constants and multiples of vol).
Eigen::MatrixXd kernel_projection(const FormBasis& b);
/// sign(D) with sign(0) = +1.
Eigen::MatrixXd sign_operator(const FormBasis& b);

/// Operators of the doubled module on H (+) H, graded by tau (+) -tau.
struct SignatureModule {
  int L = 0;
  double t = 1.0;
  FormBasis basis;
  Eigen::MatrixXd A;                 // D on H
  Eigen::MatrixXcd grading;          // tau on H
  Eigen::MatrixXd F_tilde;           // [[phi(tD), S], [S, -phi(tD)]]
  Eigen::MatrixXd W;                 // [[0, W0], [W0, 0]]
  Eigen::MatrixXcd grading_tilde;    // tau (+) -tau
};

/// Dense construction; intended for L up to about 12.
SignatureModule build_signature_module(int L, double t);

/// Compression of multiplication by a(theta) e^{i (m_out - m_in) phi} from the
/// single-mode basis `in` to the single-mode basis `out`. `profile` holds a at the
/// nodes of `rule`.
Eigen::MatrixXcd multiplication_block(std::span<const Complex> profile, const FormBasis& out, const FormBasis& in,
                                      const sph::ThetaRule& rule);

/// Compression of multiplication by a(theta, phi) to the full basis; phi is
/// sampled on `phi_nodes` equispaced points (0 = automatic).
Eigen::MatrixXcd multiplication_operator(const std::function<Complex(double, double)>& a, int L,
                                         const sph::ThetaRule& rule, int phi_nodes = 0);

/// A 2x2 projection-valued function on S^2, optionally equivariant:
/// p(theta, phi)_{12} = p(theta, 0)_{12} e^{i charge phi} and the diagonal is axisymmetric.
struct ProjectionField {
  std::function<Eigen::Matrix2cd(double theta, double phi)> p;
  std::optional<int> charge;
  std::string label;
};

/// p0(f(x)) for a map with n = 1.
ProjectionField projection_field(const maps::SampledMap& f, std::optional<int> charge);
ProjectionField constant_projection(const Eigen::Matrix2cd& p, std::string label);

struct PairingOptions {
  double t = 1.0;
  int theta_nodes = 0;     // 0: 4L + 96
  double grading = 3.0;
  bool estimate_drift = false;
  bool force_dense = false;
};

struct PairingResult {
  double value = 0.0;            // (-1)^k str(p~ [F~, p~]^{2k})
  double imaginary = 0.0;
  double normalized_degree = 0.0;  // value / (-2): the twisted signature index is 2 deg
  double projection_defect = 0.0;  // ||P^2 - P||_F / sqrt(dim) for the compressed projection
  double drift = std::numeric_limits<double>::quiet_NaN();  // value(L) - value(L/2)
  int L = 0;
  int k = 0;
  double t = 0.0;
  std::string path;
};

/// Requires k >= 1, L >= 2. Rejects fields with |p^2 - p| > 0.1 at some sample point.
PairingResult connes_pairing(const ProjectionField& p, int k, int L, const PairingOptions& options = {});

struct HomlemResult {
  std::vector<double> t;
  std::vector<double> distance;  // || F~(t) - F~_inf - W ||_q (or without W)
  double slope = 0.0;
};

/// Schatten-q distance of F~(t) from its t -> infinity limit, from the exact spectrum
/// of the truncated D, and the least-squares log-log slope.
HomlemResult homlem_decay(std::span<const double> t_grid, int L, double q, bool include_W = true);

/// The same distance by dense singular values (small L only).
double homlem_distance_dense(int L, double t, double q, bool include_W = true);

}  // namespace holderdeg::specmod
