#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "holderdeg/constants.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/projections.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/specmod.hpp"

/// Degree of maps S^{2n} -> S^{2n} (or into (S^2)^n through p_T) by several routes.
namespace holderdeg::degree {

enum class Method { de_rham, holder_kernel, connes_pairing, preimage_oracle };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

enum class Status { ok, inconclusive };
std::string to_string(Status s);

/// Signature of the source manifold; 0 for every even sphere.
constexpr int sphere_signature(int /*n*/) { return 0; }

struct DegreeReport {
  Method method = Method::de_rham;
  std::string map;
  int n = 1;
  double estimate = 0.0;
  double stderr_ = 0.0;
  long long rounded = 0;
  double distance_to_integer = 0.0;
  double ci_half_width = 0.0;  // 1.96 stderr
  Status status = Status::ok;
  int k = 0;
  double alpha = 1.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  double beta = 0.0;
  double wall_time = 0.0;
  /// Method-specific numbers (raw pairing value, imaginary part, per-weight parts, ...).
  std::map<std::string, double> diagnostics;
  /// Cross-checks performed while building the report: name -> agreed.
  std::map<std::string, bool> oracle_agreement;
};

/// deg f = \int_X f^* ch[p], estimated by Monte Carlo over the source sphere with
/// finite-difference Jacobians. Coordinates with |z_j| > 1 are differentiated in the
/// chart 1/z_j. Throws ConfigurationError when more than 1% of Jacobians fail.
DegreeReport smooth_degree(const maps::SampledMap& f, const quadrature::MCConfig& config);

struct PreimageOptions {
  int starts = 256;
  std::uint64_t seed = 7;
  double tolerance = 1e-11;
  int max_iterations = 200;
  /// |det| of the chart Jacobian below this marks a suspected critical point.
  /// Both charts live in the unit ball, so an absolute cutoff is meaningful.
  double singular_threshold = 1e-7;
};

struct PreimageResult {
  int degree = 0;
  std::vector<Eigen::VectorXd> preimages;  // ambient coordinates on S^{2n}
  std::vector<int> signs;
};

/// Signed count of solutions of f(x) = value found by multi-start Newton in the
/// source chart and in the inverted chart x/|x|^2. Throws SingularityError when a
/// preimage has a near-singular Jacobian.
PreimageResult preimage_oracle(const maps::SampledMap& f, const projections::Tuple& value,
                               const PreimageOptions& options = {});

/// deg f = -(sign(X) + (-1)^k Re \int f~_k) / 2^n. The raw pairing
/// (-1)^k \int f~_k equals the twisted signature index -2^n deg f, so it is
/// rescaled here; the raw value is kept in the diagnostics. Requires k > n/alpha.
/// The report is inconclusive when the 95% half-width is not below 0.5.
DegreeReport holder_degree(const maps::SampledMap& f, int k, const constants::KernelConstants& c,
                           const quadrature::MCConfig& config);

/// Operator-level pairing on the spectral S^2 module, reported as a degree.
DegreeReport pairing_degree(const maps::Fixture& fixture, int k, int L, const specmod::PairingOptions& options = {});

struct ConsistencyOptions {
  quadrature::MCConfig mc;
  int k = 2;
  int L = 24;
  projections::Tuple value{projections::Complex(0.37, 0.21)};
};

struct ConsistencyReport {
  std::vector<DegreeReport> reports;
  bool consistent = false;
  std::string summary;
};

ConsistencyReport degree_consistency(const maps::Fixture& fixture, std::span<const Method> methods,
                                     const ConsistencyOptions& options);

}  // namespace holderdeg::degree
