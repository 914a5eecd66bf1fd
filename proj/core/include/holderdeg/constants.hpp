#pragma once

#include <string>

/// Normalizing constants of the explicit kernels on S^{2n}.
namespace holderdeg::constants {

struct KernelConstants {
  int n = 1;
  double c_n = 0.0;       // singular (Riesz-matrix) kernel
  double c_prime = 0.0;   // harmonic kernel g(x) = c' (1 + |x|^2)^{-n}
  std::string provenance;
};

/// c_n = sqrt(2) Gamma((2n+1)/2) / pi^{(2n+1)/2}, which makes the symbol of the
/// singular kernel i(xi^ - xi-|)/|xi| up to sign, so that it squares to one.
double analytic_c_n(int n);

/// c'_n = 2^n / sqrt(Vol(S^{2n})): g is then a unit vector in L^2(R^{2n}, dx).
double analytic_c_prime(int n);

KernelConstants analytic_constants(int n);

struct Calibration {
  KernelConstants constants;
  double c_n_analytic = 0.0;
  double c_prime_analytic = 0.0;
  double c_n_relative_error = 0.0;
  double c_prime_relative_error = 0.0;
  int quadrature_nodes = 0;
};

/// Recomputes both constants by quadrature, without closed forms:
///  - c_n from the Fourier symbol of the odd kernel x_1/|x|^{2n+1}, which at
///    xi = e_1 equals -i (pi/2) \int_{S^{2n-1}} |w_1| dw;
///  - c'_n from \int_{R^{2n}} (1 + |x|^2)^{-2n} dx by radial quadrature.
Calibration calibrate_constants(int n, int nodes = 200);

}  // namespace holderdeg::constants
