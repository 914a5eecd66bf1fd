#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "holderdeg/constants.hpp"
#include "holderdeg/gamma.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/projections.hpp"

/// Supertrace kernels H_I, projection factors Q_I and the degree integrand f~_k.
namespace holderdeg::exterior {

using Complex = std::complex<double>;

/// str(prod_l K_{s_l}(x_l, x_{l+1})) with x_{2k+1} = x_1; slots 1, 2 use K1 and 3, 4 use K3.
/// Direct matrix products on the exterior algebra.
Complex H_kernel(const gamma::GammaSequence& I, std::span<const geometry::ChartPoint> points,
                 const constants::KernelConstants& c);

/// The same supertrace expanded over basis covectors: every K1 factor is a sum of
/// single generators, K3 a sum of words, and only the top word of tau survives the trace.
Complex expanded_supertrace(const gamma::GammaSequence& I, std::span<const geometry::ChartPoint> points,
                            const constants::KernelConstants& c);

/// tr(p(x_1) p(x_{i_1}) ... p(x_{i_2k})) for p = p_T, as a cyclic chain of inner products.
Complex Q_factor(const gamma::GammaSequence& I, std::span<const projections::Tuple> mapped);

/// sum_I iota(I) Q_I(f(x)) H_I(x), split by the weight w(I).
struct FtildeValue {
  std::vector<Complex> by_weight;
  Complex total{0.0, 0.0};
};

/// Requires k > n/alpha and pairwise distinct finite points.
FtildeValue ftilde(const maps::SampledMap& f, int k, std::span<const geometry::ChartPoint> points,
                   const constants::KernelConstants& c);

/// f~_k multiplied by prod_l Omega(x_l)^{-1}, i.e. the integrand against the round
/// measure of (S^{2n})^{2k}. Points are given on the sphere.
///
/// The conformal factors are absorbed into the kernels, which become
///   K1 -> c_n (u^ - u-|)/(sqrt(2) chord^{2n}),  K3 -> (P_0 + P_top) c'^2 4^{-n},
/// with u the unit chart direction of x - y and chord the chordal distance; this stays
/// finite near the point at infinity. Terms sharing a (3,4)-block pattern share H.
class FtildeEvaluator {
 public:
  FtildeEvaluator(const maps::SampledMap& f, int k, const constants::KernelConstants& c);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::size_t pattern_count() const noexcept { return groups_.size(); }

  /// `ambient` holds 2k unit vectors in R^{2n+1}. Throws SingularityError on coincident neighbours.
  FtildeValue operator()(std::span<const Eigen::VectorXd> ambient) const;

 private:
  struct Term {
    std::vector<int> chain;  // 0, i_1, ..., i_2k (0-based)
    Complex iota;
    int weight;
  };
  struct Group {
    std::uint32_t pattern;
    std::vector<Term> terms;
  };

  const maps::SampledMap* f_;
  int k_;
  int n_;
  constants::KernelConstants c_;
  std::vector<Group> groups_;
  Eigen::MatrixXd tau_real_;    // tau = i^n tau_real_
  Eigen::MatrixXd harmonic_;    // sphere-weighted K3
  std::vector<Eigen::MatrixXd> generators_;
};

}  // namespace holderdeg::exterior
