#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "holderdeg/random.hpp"

/// Gauss rules and the Monte Carlo engine for integrals over (S^{2n})^m.
namespace holderdeg::quadrature {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `order` nodes (Newton iteration on P_order).
GaussRule gauss_legendre(int order);

struct MCConfig {
  long long samples = 100'000;
  std::uint64_t seed = 1;
  int workers = 1;
  /// Exponent beta of the near-diagonal proposal d^{-beta}; 0 gives the uniform product sampler.
  double importance_exponent = 0.0;
  /// Number of equal-area height bands for the start point of each tuple (n = 1 only); 0 or 1 = off.
  int strata = 0;
  long long chunk_size = 4096;
  /// Neighbouring points closer than this (chordally) are rejected.
  double singular_guard = 1e-9;
  double max_rejection_fraction = 0.01;
};

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long long n_effective = 0;     // accepted samples
  long long rejected = 0;
  double rejection_rate = 0.0;
  double max_abs_sample = 0.0;   // largest |integrand / proposal| seen
};

/// Integrand on a tuple of m points of S^{2n} (ambient coordinates), writing
/// `components` real values. It may throw SingularityError, which counts as a rejection.
using TupleIntegrand = std::function<void(std::span<const Eigen::VectorXd>, std::span<double>)>;

/// Proposal on (S^{2n})^m for cyclic tuples.
///
/// With beta > 0 it is the equal mixture of the uniform product density and m
/// chain densities; chain c starts uniformly at point c and walks c -> c+1 -> ...
/// drawing each step at chordal distance d with density h(d) = d^{-beta}/Z_beta.
/// The mixture density therefore has a d^{-beta} factor on every cyclic edge.
class DiagonalSampler {
 public:
  DiagonalSampler(int n, int points, double beta);

  int n() const noexcept { return n_; }
  int points() const noexcept { return m_; }
  double beta() const noexcept { return beta_; }

  /// Fills `out` with m ambient points and returns the proposal density against
  /// the product of round measures. `band` in [0, bands) restricts the start point.
  double draw(StreamRng& rng, std::vector<Eigen::VectorXd>& out, int band = 0, int bands = 1) const;

  /// Proposal density of a given tuple.
  double density(std::span<const Eigen::VectorXd> pts) const;

  /// h(d) on S^{2n}.
  double step_density(double chord) const;

 private:
  Eigen::VectorXd near(StreamRng& rng, const Eigen::VectorXd& x) const;
  Eigen::VectorXd uniform_point(StreamRng& rng, int band, int bands) const;

  int n_;
  int m_;
  double beta_;
  double volume_;
  double log_normalizer_;
};

/// Vector-valued estimate; component 0 drives the rejection diagnostics.
struct MultiEstimate {
  std::vector<Estimate> components;
};

MultiEstimate mc_integrate(const TupleIntegrand& integrand, int components, int n, int points,
                           const MCConfig& config);

/// Scalar convenience wrapper.
Estimate mc_integrate(const std::function<double(std::span<const Eigen::VectorXd>)>& integrand, int n, int points,
                      const MCConfig& config);

/// Running mean/variance with Chan's pairwise merge.
struct Moments {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Moments& other);
  double variance() const;
};

}  // namespace holderdeg::quadrature
