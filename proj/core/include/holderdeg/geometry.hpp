#pragma once

#include <Eigen/Dense>

#include "holderdeg/random.hpp"

/// Charts, stereographic coordinates and uniform sampling on S^{2n}.
///
/// The chart used throughout is inverse stereographic projection
///   x  |->  ((|x|^2 - 1)/(|x|^2 + 1), 2x/(|x|^2 + 1))  in R^{2n+1},
/// which sends 0 to (-1, 0, ..., 0) and the point at infinity to (1, 0, ..., 0).
namespace holderdeg::geometry {

/// Unit vector in R^{2n+1}.
class SpherePoint {
 public:
  /// Normalizes nothing; throws PreconditionError unless |ambient| = 1 within 1e-12.
  explicit SpherePoint(Eigen::VectorXd ambient);

  static SpherePoint north_pole(int n);

  const Eigen::VectorXd& ambient() const noexcept { return ambient_; }
  int n() const noexcept { return static_cast<int>(ambient_.size() - 1) / 2; }

 private:
  Eigen::VectorXd ambient_;
};

/// A point of R^{2n} or the distinguished point at infinity; never both.
class ChartPoint {
 public:
  explicit ChartPoint(Eigen::VectorXd coords);
  static ChartPoint infinity(int dim);

  bool is_infinite() const noexcept { return infinite_; }
  int dim() const noexcept { return dim_; }

  /// Throws PreconditionError for the point at infinity.
  const Eigen::VectorXd& coords() const;

  double norm_squared() const;

 private:
  ChartPoint(int dim, bool infinite);

  Eigen::VectorXd coords_;
  int dim_ = 0;
  bool infinite_ = false;
};

SpherePoint stereo_to_sphere(const ChartPoint& x, int n);
ChartPoint sphere_to_stereo(const SpherePoint& p);

/// (2 / (1 + |x|^2))^{2n}: density of the round volume in chart coordinates.
double conformal_volume_factor(const ChartPoint& x, int n);

/// Volume of the unit sphere S^d.
double sphere_volume(int d);

/// Chordal distance |lambda(x) - lambda(y)| computed stably from chart data.
double chordal_distance(const ChartPoint& x, const ChartPoint& y);

/// Uniform point on S^{2n}: normalized Gaussian vector.
Eigen::VectorXd sample_sphere_ambient(StreamRng& rng, int n);
ChartPoint sample_sphere(StreamRng& rng, int n);

}  // namespace holderdeg::geometry
