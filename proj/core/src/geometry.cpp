#include "holderdeg/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "holderdeg/errors.hpp"

namespace holderdeg::geometry {

SpherePoint::SpherePoint(Eigen::VectorXd ambient) : ambient_(std::move(ambient)) {
  require(ambient_.size() >= 3 && ambient_.size() % 2 == 1, "SpherePoint: ambient dimension must be 2n+1");
  require(std::abs(ambient_.norm() - 1.0) <= 1e-12, "SpherePoint: ambient vector is not a unit vector");
}

SpherePoint SpherePoint::north_pole(int n) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * n + 1);
  v(0) = 1.0;
  return SpherePoint(std::move(v));
}

ChartPoint::ChartPoint(Eigen::VectorXd coords)
    : coords_(std::move(coords)), dim_(static_cast<int>(coords_.size())), infinite_(false) {
  require(coords_.allFinite(), "ChartPoint: coordinates must be finite; use ChartPoint::infinity()");
}

ChartPoint::ChartPoint(int dim, bool infinite) : dim_(dim), infinite_(infinite) {}

ChartPoint ChartPoint::infinity(int dim) { return ChartPoint(dim, true); }

const Eigen::VectorXd& ChartPoint::coords() const {
  if (infinite_) throw PreconditionError("ChartPoint: the point at infinity has no coordinates");
  return coords_;
}

double ChartPoint::norm_squared() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : coords_.squaredNorm();
}

SpherePoint stereo_to_sphere(const ChartPoint& x, int n) {
  require(n >= 1, "stereo_to_sphere: n must be positive");
  require(x.dim() == 2 * n, "stereo_to_sphere: chart dimension must be 2n");
  if (x.is_infinite()) return SpherePoint::north_pole(n);
  const Eigen::VectorXd& c = x.coords();
  const double r2 = c.squaredNorm();
  Eigen::VectorXd v(2 * n + 1);
  v(0) = (r2 - 1.0) / (r2 + 1.0);
  v.tail(2 * n) = (2.0 / (r2 + 1.0)) * c;
  // Renormalize the last ulp so the SpherePoint invariant holds for huge |x|.
  v /= v.norm();
  return SpherePoint(std::move(v));
}

ChartPoint sphere_to_stereo(const SpherePoint& p) {
  const Eigen::VectorXd& a = p.ambient();
  const int dim = static_cast<int>(a.size()) - 1;
  const double denom = 1.0 - a(0);
  if (denom <= 0.0) return ChartPoint::infinity(dim);
  // 1 - a0 loses precision near the pole; |tail|^2 = (1 - a0)(1 + a0) is exact-ish.
  const double tail2 = a.tail(dim).squaredNorm();
  const double stable = a(0) > 0.0 ? tail2 / (1.0 + a(0)) : denom;
  if (stable <= 0.0) return ChartPoint::infinity(dim);
  return ChartPoint(a.tail(dim) / stable);
}

double conformal_volume_factor(const ChartPoint& x, int n) {
  if (x.is_infinite()) throw PreconditionError("conformal_volume_factor: undefined at infinity");
  return std::pow(2.0 / (1.0 + x.norm_squared()), 2 * n);
}

double sphere_volume(int d) {
  const double h = 0.5 * (d + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

double chordal_distance(const ChartPoint& x, const ChartPoint& y) {
  if (x.is_infinite() && y.is_infinite()) return 0.0;
  if (x.is_infinite()) return 2.0 / std::sqrt(1.0 + y.norm_squared());
  if (y.is_infinite()) return 2.0 / std::sqrt(1.0 + x.norm_squared());
  const double d = (x.coords() - y.coords()).norm();
  return 2.0 * d / std::sqrt((1.0 + x.norm_squared()) * (1.0 + y.norm_squared()));
}

Eigen::VectorXd sample_sphere_ambient(StreamRng& rng, int n) {
  Eigen::VectorXd v(2 * n + 1);
  double norm2 = 0.0;
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-300);
  return v / std::sqrt(norm2);
}

ChartPoint sample_sphere(StreamRng& rng, int n) {
  return sphere_to_stereo(SpherePoint(sample_sphere_ambient(rng, n)));
}

}  // namespace holderdeg::geometry
