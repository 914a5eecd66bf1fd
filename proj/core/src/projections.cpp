#include "holderdeg/projections.hpp"

#include <cmath>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/random.hpp"

namespace holderdeg::projections {

ExtendedComplex ExtendedComplex::infinity() {
  ExtendedComplex z;
  z.infinite_ = true;
  return z;
}

Complex ExtendedComplex::value() const {
  if (infinite_) throw PreconditionError("ExtendedComplex: value() at infinity");
  return value_;
}

Eigen::Vector2cd unit_vector(const ExtendedComplex& z) {
  if (z.is_infinite()) return {Complex(1.0, 0.0), Complex(0.0, 0.0)};
  const Complex w = z.value();
  const double a = std::abs(w);
  // Scale by the larger component so huge |z| stays finite.
  if (a > 1.0) {
    const double s = 1.0 / std::sqrt(1.0 + 1.0 / (a * a));
    return {w / a * s, Complex(s / a, 0.0)};
  }
  const double s = 1.0 / std::sqrt(1.0 + a * a);
  return {w * s, Complex(s, 0.0)};
}

Complex unit_inner(const ExtendedComplex& a, const ExtendedComplex& b) {
  return unit_vector(a).dot(unit_vector(b));  // Eigen's dot conjugates the left operand
}

double max_entry(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

HermitianProjection::HermitianProjection(Eigen::MatrixXcd entries, double tolerance)
    : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols(), "HermitianProjection: matrix must be square");
  require(idempotence_defect() <= tolerance, "HermitianProjection: p^2 != p");
  require(hermiticity_defect() <= tolerance, "HermitianProjection: p != p^*");
}

double HermitianProjection::rank() const { return entries_.trace().real(); }

double HermitianProjection::idempotence_defect() const {
  return max_entry(entries_ * entries_ - entries_);
}

double HermitianProjection::hermiticity_defect() const {
  return max_entry(entries_ - entries_.adjoint());
}

HermitianProjection p0(const ExtendedComplex& z) {
  const Eigen::Vector2cd v = unit_vector(z);
  return HermitianProjection(v * v.adjoint());
}

HermitianProjection pT(std::span<const ExtendedComplex> z) {
  require(!z.empty(), "pT: need at least one coordinate");
  Eigen::VectorXcd v = unit_vector(z[0]);
  for (std::size_t j = 1; j < z.size(); ++j) {
    const Eigen::Vector2cd w = unit_vector(z[j]);
    Eigen::VectorXcd next(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(2 * i, 2) = v(i) * w;
    v = std::move(next);
  }
  return HermitianProjection(v * v.adjoint());
}

Tuple ball_to_complex(const Eigen::VectorXd& x) {
  require(x.size() % 2 == 0 && x.size() > 0, "ball_to_complex: dimension must be 2n");
  const double r2 = x.squaredNorm();
  Tuple out;
  out.reserve(x.size() / 2);
  if (r2 >= 1.0) {
    out.assign(x.size() / 2, ExtendedComplex::infinity());
    return out;
  }
  const double s = 1.0 / (1.0 - r2);
  for (Eigen::Index j = 0; j < x.size() / 2; ++j) out.emplace_back(Complex(s * x(2 * j), s * x(2 * j + 1)));
  return out;
}

BallChart::BallChart(int n, double radius) : n_(n), radius_(radius) {
  require(n >= 1, "BallChart: n must be positive");
  require(radius > 0.0 && std::isfinite(radius), "BallChart: radius must be positive and finite");
}

bool BallChart::contains(const geometry::ChartPoint& y) const {
  return !y.is_infinite() && y.norm_squared() < radius_ * radius_;
}

Tuple BallChart::nu_tilde(const geometry::ChartPoint& y) const {
  require(y.dim() == 2 * n_, "BallChart: target point has the wrong dimension");
  if (!contains(y)) return Tuple(n_, ExtendedComplex::infinity());
  return ball_to_complex(y.coords() / radius_);
}

HermitianProjection pY(const geometry::ChartPoint& y, const BallChart& chart) {
  const Tuple z = chart.nu_tilde(y);
  return pT(z);
}

double chern_top_density(std::span<const Complex> z) {
  double d = std::pow(std::numbers::pi, -static_cast<double>(z.size()));
  for (const Complex& w : z) {
    const double t = 1.0 + std::norm(w);
    d /= t * t;
  }
  return d;
}

namespace {

// Radial profile 2r/(1+r^2)^2 on [0, R], after r = t/(1-t) when R is infinite.
double radial_integrand(double t, bool compactified) {
  if (!compactified) return 2.0 * t / ((1.0 + t * t) * (1.0 + t * t));
  if (t >= 1.0) return 0.0;
  const double r = t / (1.0 - t);
  const double dr = 1.0 / ((1.0 - t) * (1.0 - t));
  return 2.0 * r / ((1.0 + r * r) * (1.0 + r * r)) * dr;
}

struct Segment {
  double a, b, whole, fa, fm, fb;
};

double adaptive_simpson(double a, double b, double tol, bool compact, long long& evals, double& err, int& depth_hit) {
  const auto f = [&](double x) {
    ++evals;
    return radial_integrand(x, compact);
  };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Explicit stack to avoid deep recursion.
  struct Item {
    Segment s;
    double tol;
    int depth;
  };
  std::vector<Item> stack{{{a, b, whole, fa, fm, fb}, tol, 0}};
  double total = 0.0;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const Segment& s = it.s;
    const double m = 0.5 * (s.a + s.b);
    const double lm = f(0.5 * (s.a + m)), rm = f(0.5 * (m + s.b));
    const double left = (m - s.a) / 6.0 * (s.fa + 4.0 * lm + s.fm);
    const double right = (s.b - m) / 6.0 * (s.fm + 4.0 * rm + s.fb);
    const double delta = left + right - s.whole;
    if (it.depth >= 48) {
      depth_hit = 1;
      total += left + right + delta / 15.0;
      err += std::abs(delta) / 15.0;
      continue;
    }
    if (std::abs(delta) <= 15.0 * it.tol) {
      total += left + right + delta / 15.0;
      err += std::abs(delta) / 15.0;
      continue;
    }
    stack.push_back({{s.a, m, left, s.fa, lm, s.fm}, 0.5 * it.tol, it.depth + 1});
    stack.push_back({{m, s.b, right, s.fm, rm, s.fb}, 0.5 * it.tol, it.depth + 1});
  }
  return total;
}

}  // namespace

ChernIntegral integrate_chern_top(int n, const ChernQuadratureConfig& config) {
  require(n >= 1, "integrate_chern_top: n must be positive");
  require(config.radius > 0.0, "integrate_chern_top: radius must be positive");
  ChernIntegral out;
  const bool whole_plane = std::isinf(config.radius);

  if (config.method == ChernQuadrature::adaptive_radial) {
    // The density factorizes over the n complex coordinates, and each factor is radial.
    double err = 0.0;
    int depth_hit = 0;
    const double b = whole_plane ? 1.0 : config.radius;
    const double one = adaptive_simpson(0.0, b, config.tolerance, whole_plane, out.evaluations, err, depth_hit);
    if (depth_hit != 0 && err > config.tolerance)
      throw ConvergenceError("integrate_chern_top: adaptive quadrature hit its depth limit", err, 48);
    out.value = std::pow(one, n);
    out.error = n * std::pow(one, n - 1) * err;
    return out;
  }

  // Monte Carlo with a heavier-tailed product proposal q(z) = (2 pi)^{-1} (1 + |z|^2)^{-3/2}
  // per complex coordinate; density / proposal is bounded, so the variance is finite.
  require(config.samples >= 2, "integrate_chern_top: need at least two samples");
  StreamRng rng(config.seed, 0);
  double mean = 0.0, m2 = 0.0;
  for (long long s = 0; s < config.samples; ++s) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) {
      const double u = rng.uniform();
      const double r = std::sqrt(1.0 / ((1.0 - u) * (1.0 - u)) - 1.0);
      const double t = 1.0 + r * r;
      const double density = 1.0 / (std::numbers::pi * t * t);
      const double proposal = 1.0 / (2.0 * std::numbers::pi * t * std::sqrt(t));
      weight *= (r < config.radius) ? density / proposal : 0.0;
    }
    const double delta = weight - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (weight - mean);
  }
  out.value = mean;
  out.error = std::sqrt(m2 / static_cast<double>(config.samples - 1) / static_cast<double>(config.samples));
  out.evaluations = config.samples;
  return out;
}

Complex cyclic_chern_product(std::span<const Tuple> points, int k) {
  require(k >= 0, "cyclic_chern_product: k must be non-negative");
  require(points.size() == static_cast<std::size_t>(2 * k + 1), "cyclic_chern_product: need 2k+1 points");
  const std::size_t n = points.front().size();
  for (const Tuple& t : points) require(t.size() == n && n > 0, "cyclic_chern_product: inconsistent tuple sizes");
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  Complex product(1.0 / factorial, 0.0);
  const std::size_t m = points.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < m; ++l) product *= unit_inner(points[l][j], points[(l + 1) % m][j]);
  return product;
}

}  // namespace holderdeg::projections
