#include "holderdeg/degree.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "holderdeg/errors.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/kernels.hpp"
#include "holderdeg/random.hpp"

namespace holderdeg::degree {

using geometry::ChartPoint;
using projections::Complex;
using projections::Tuple;

std::string to_string(Method m) {
  switch (m) {
    case Method::de_rham:
      return "de_rham";
    case Method::holder_kernel:
      return "holder_kernel";
    case Method::connes_pairing:
      return "connes_pairing";
    case Method::preimage_oracle:
      return "preimage_oracle";
  }
  return "unknown";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::de_rham, Method::holder_kernel, Method::connes_pairing, Method::preimage_oracle})
    if (to_string(m) == s) return m;
  throw ConfigurationError("unknown degree method '" + s + "'");
}

std::string to_string(Status s) { return s == Status::ok ? "ok" : "inconclusive"; }

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void finish(DegreeReport& r) {
  r.rounded = std::llround(r.estimate);
  r.distance_to_integer = std::abs(r.estimate - static_cast<double>(r.rounded));
  r.ci_half_width = 1.96 * r.stderr_;
}

// Real coordinates of a target tuple: z_j, or 1/z_j where inverted[j].
std::optional<Eigen::VectorXd> target_coords(const Tuple& t, const std::vector<bool>& inverted) {
  Eigen::VectorXd out(2 * t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    Complex u;
    if (inverted[j]) {
      if (t[j].is_infinite()) {
        u = 0.0;
      } else {
        const Complex z = t[j].value();
        if (z == Complex(0.0, 0.0)) return std::nullopt;
        u = 1.0 / z;
      }
    } else {
      if (t[j].is_infinite()) return std::nullopt;
      u = t[j].value();
    }
    if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) return std::nullopt;
    out(2 * j) = u.real();
    out(2 * j + 1) = u.imag();
  }
  return out;
}

std::vector<bool> inversion_flags(const Tuple& t) {
  std::vector<bool> inv(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) inv[j] = t[j].is_infinite() || std::abs(t[j].value()) > 1.0;
  return inv;
}

// Central-difference Jacobian of y |-> target_coords(f(chart(y))).
template <class Fn>
std::optional<Eigen::MatrixXd> fd_jacobian(Fn&& g, const Eigen::VectorXd& y, double h) {
  const Eigen::Index d = y.size();
  Eigen::MatrixXd J(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::VectorXd yp = y, ym = y;
    yp(i) += h;
    ym(i) -= h;
    const auto gp = g(yp), gm = g(ym);
    if (!gp || !gm) return std::nullopt;
    J.col(i) = (*gp - *gm) / (2.0 * h);
  }
  if (!J.allFinite()) return std::nullopt;
  return J;
}

}  // namespace

DegreeReport smooth_degree(const maps::SampledMap& f, const quadrature::MCConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = f.n();
  quadrature::MCConfig cfg = config;
  cfg.importance_exponent = 0.0;

  auto integrand = [&](std::span<const Eigen::VectorXd> pts) -> double {
    const ChartPoint x = geometry::sphere_to_stereo(geometry::SpherePoint(pts[0]));
    if (x.is_infinite()) throw SingularityError("smooth_degree: sample at the point at infinity");
    const Tuple base = f(x);
    const std::vector<bool> inv = inversion_flags(base);
    const auto u = target_coords(base, inv);
    if (!u) throw SingularityError("smooth_degree: target chart failure");
    auto g = [&](const Eigen::VectorXd& y) { return target_coords(f(ChartPoint(y)), inv); };
    const double h = 1e-6 * (1.0 + x.coords().norm());
    const auto J = fd_jacobian(g, x.coords(), h);
    if (!J) throw SingularityError("smooth_degree: Jacobian evaluation failed");
    std::vector<Complex> w(n);
    for (int j = 0; j < n; ++j) w[j] = {(*u)(2 * j), (*u)(2 * j + 1)};
    return J->determinant() * projections::chern_top_density(w) / geometry::conformal_volume_factor(x, n);
  };
  const quadrature::Estimate e = quadrature::mc_integrate(integrand, n, 1, cfg);

  DegreeReport r;
  r.method = Method::de_rham;
  r.map = f.label();
  r.n = n;
  r.estimate = e.value;
  r.stderr_ = e.stderr_;
  r.alpha = f.holder_exponent();
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.diagnostics["rejection_rate"] = e.rejection_rate;
  r.diagnostics["max_abs_sample"] = e.max_abs_sample;
  finish(r);
  r.wall_time = seconds_since(t0);
  return r;
}

PreimageResult preimage_oracle(const maps::SampledMap& f, const Tuple& value, const PreimageOptions& options) {
  const int n = f.n();
  require(value.size() == static_cast<std::size_t>(n), "preimage_oracle: value has the wrong size");
  for (const auto& v : value) require(!v.is_infinite(), "preimage_oracle: value must be finite");
  require(options.starts >= 1, "preimage_oracle: need at least one start");
  const std::vector<bool> inv = inversion_flags(value);
  const Eigen::VectorXd target = *target_coords(value, inv);
  const double scale = 1.0 + target.norm();

  auto to_source = [](const Eigen::VectorXd& y, bool inverted) -> ChartPoint {
    if (!inverted) return ChartPoint(y);
    const double r2 = y.squaredNorm();
    if (r2 == 0.0) return ChartPoint::infinity(static_cast<int>(y.size()));
    return ChartPoint(y / r2);
  };

  PreimageResult result;
  StreamRng rng(options.seed, 0);
  for (int s = 0; s < options.starts; ++s) {
    const ChartPoint start = geometry::sample_sphere(rng, n);
    const bool inverted = start.is_infinite() || start.norm_squared() > 1.0;
    Eigen::VectorXd y = start.is_infinite() ? Eigen::VectorXd::Zero(2 * n)
                        : inverted           ? Eigen::VectorXd(start.coords() / start.norm_squared())
                                             : start.coords();
    auto residual = [&](const Eigen::VectorXd& yy) -> std::optional<Eigen::VectorXd> {
      const auto c = target_coords(f(to_source(yy, inverted)), inv);
      if (!c) return std::nullopt;
      return Eigen::VectorXd(*c - target);
    };
    auto r0 = residual(y);
    if (!r0) continue;
    double rn = r0->norm();
    bool converged = false;
    for (int it = 0; it < options.max_iterations && !converged; ++it) {
      const double h = 1e-7 * (1.0 + y.norm());
      const auto J = fd_jacobian(residual, y, h);
      if (!J) break;
      Eigen::FullPivLU<Eigen::MatrixXd> lu(*J);
      if (!lu.isInvertible()) break;
      const Eigen::VectorXd step = lu.solve(-*r0);
      double lambda = 1.0;
      bool improved = false;
      for (int ls = 0; ls < 30; ++ls) {
        const Eigen::VectorXd trial = y + lambda * step;
        const auto rt = residual(trial);
        if (rt && rt->norm() < rn) {
          y = trial;
          r0 = rt;
          rn = rt->norm();
          improved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!improved) break;
      if (rn < options.tolerance * scale) converged = true;
      if (y.norm() > 1e8) break;
    }
    if (!converged) continue;

    const Eigen::VectorXd p = geometry::stereo_to_sphere(to_source(y, inverted), n).ambient();
    bool duplicate = false;
    for (const auto& q : result.preimages)
      if ((q - p).norm() < 1e-6) duplicate = true;
    if (duplicate) continue;

    const double h = 1e-6 * (1.0 + y.norm());
    const auto J = fd_jacobian(residual, y, h);
    if (!J) throw SingularityError("preimage_oracle: Jacobian failed at a preimage");
    const double det = J->determinant();
    // absolute: a relative test is blind to homogeneous critical points like z^2 at 0
    if (std::abs(det) < options.singular_threshold)
      throw SingularityError("preimage_oracle: near-singular Jacobian at a preimage; choose another regular value");
    // x |-> x/|x|^2 reverses orientation.
    const int sign = (det > 0.0 ? 1 : -1) * (inverted ? -1 : 1);
    result.preimages.push_back(p);
    result.signs.push_back(sign);
    result.degree += sign;
  }
  return result;
}

DegreeReport holder_degree(const maps::SampledMap& f, int k, const constants::KernelConstants& c,
                           const quadrature::MCConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = f.n();
  require(n == c.n, "holder_degree: map and constants disagree on n");
  require(k > n / f.holder_exponent(), "holder_degree: need k > n/alpha (k = " + std::to_string(k) +
                                           ", n = " + std::to_string(n) +
                                           ", alpha = " + std::to_string(f.holder_exponent()) + ")");
  const exterior::FtildeEvaluator ev(f, k, c);
  const int comps = 2 + 2 * (k + 1);
  quadrature::TupleIntegrand integrand = [&](std::span<const Eigen::VectorXd> pts, std::span<double> out) {
    const exterior::FtildeValue v = ev(pts);
    out[0] = v.total.real();
    out[1] = v.total.imag();
    for (int w = 0; w <= k; ++w) {
      out[2 + w] = v.by_weight[w].real();
      out[3 + k + w] = v.by_weight[w].imag();
    }
  };
  const quadrature::MultiEstimate e = quadrature::mc_integrate(integrand, comps, n, 2 * k, config);
  const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
  const double scale = std::pow(2.0, n);

  DegreeReport r;
  r.method = Method::holder_kernel;
  r.map = f.label();
  r.n = n;
  r.k = k;
  r.alpha = f.holder_exponent();
  r.samples = config.samples;
  r.seed = config.seed;
  r.beta = config.importance_exponent;
  const double raw = sign_k * e.components[0].value;
  r.estimate = -(raw + sphere_signature(n)) / scale;
  r.stderr_ = e.components[0].stderr_ / scale;
  r.diagnostics["raw_pairing"] = raw;
  r.diagnostics["raw_stderr"] = e.components[0].stderr_;
  r.diagnostics["imaginary"] = sign_k * e.components[1].value;
  r.diagnostics["imaginary_stderr"] = e.components[1].stderr_;
  for (int w = 0; w <= k; ++w) {
    r.diagnostics["weight" + std::to_string(w) + "_real"] = sign_k * e.components[2 + w].value;
    r.diagnostics["weight" + std::to_string(w) + "_imag"] = sign_k * e.components[3 + k + w].value;
  }
  r.diagnostics["rejection_rate"] = e.components[0].rejection_rate;
  r.diagnostics["max_abs_sample"] = e.components[0].max_abs_sample;
  r.diagnostics["c_n"] = c.c_n;
  r.diagnostics["c_prime"] = c.c_prime;
  finish(r);
  if (!(r.ci_half_width < 0.5)) r.status = Status::inconclusive;
  r.wall_time = seconds_since(t0);
  return r;
}

DegreeReport pairing_degree(const maps::Fixture& fixture, int k, int L, const specmod::PairingOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const specmod::ProjectionField field = specmod::projection_field(fixture.map, fixture.charge);
  const specmod::PairingResult p = specmod::connes_pairing(field, k, L, options);
  DegreeReport r;
  r.method = Method::connes_pairing;
  r.map = fixture.map.label();
  r.n = 1;
  r.k = k;
  r.alpha = fixture.map.holder_exponent();
  r.estimate = p.normalized_degree;
  r.stderr_ = 0.0;
  r.diagnostics["raw_pairing"] = p.value;
  r.diagnostics["imaginary"] = p.imaginary;
  r.diagnostics["L"] = L;
  r.diagnostics["t"] = p.t;
  r.diagnostics["projection_defect"] = p.projection_defect;
  if (!std::isnan(p.drift)) r.diagnostics["drift"] = p.drift;
  finish(r);
  if (!std::isnan(p.drift) && std::abs(p.drift) / 2.0 >= 0.5) r.status = Status::inconclusive;
  r.wall_time = seconds_since(t0);
  return r;
}

ConsistencyReport degree_consistency(const maps::Fixture& fixture, std::span<const Method> methods,
                                     const ConsistencyOptions& options) {
  require(methods.size() >= 2, "degree_consistency: need at least two methods");
  ConsistencyReport out;
  for (Method m : methods) {
    switch (m) {
      case Method::de_rham:
        out.reports.push_back(smooth_degree(fixture.map, options.mc));
        break;
      case Method::holder_kernel: {
        const constants::KernelConstants c = constants::analytic_constants(fixture.map.n());
        out.reports.push_back(holder_degree(fixture.map, options.k, c, options.mc));
        break;
      }
      case Method::connes_pairing: {
        specmod::PairingOptions po;
        out.reports.push_back(pairing_degree(fixture, options.k, options.L, po));
        break;
      }
      case Method::preimage_oracle: {
        const auto t0 = std::chrono::steady_clock::now();
        const PreimageResult p = preimage_oracle(fixture.map, options.value);
        DegreeReport r;
        r.method = m;
        r.map = fixture.map.label();
        r.n = fixture.map.n();
        r.estimate = p.degree;
        r.diagnostics["preimages"] = static_cast<double>(p.preimages.size());
        finish(r);
        r.wall_time = seconds_since(t0);
        out.reports.push_back(r);
        break;
      }
    }
  }
  out.consistent = true;
  std::ostringstream s;
  for (const auto& r : out.reports) {
    if (r.status != Status::ok || r.rounded != out.reports.front().rounded) out.consistent = false;
    s << to_string(r.method) << "=" << r.rounded << (r.status == Status::ok ? "" : "(inconclusive)") << " ";
  }
  s << (out.consistent ? "consistent" : "DISCREPANCY");
  out.summary = s.str();
  for (auto& r : out.reports)
    for (const auto& other : out.reports)
      if (&other != &r) r.oracle_agreement[to_string(other.method)] = other.rounded == r.rounded;
  return out;
}

}  // namespace holderdeg::degree
