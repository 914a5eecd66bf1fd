#include "holderdeg/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "holderdeg/errors.hpp"
#include "holderdeg/geometry.hpp"

namespace holderdeg::quadrature {

GaussRule gauss_legendre(int order) {
  require(order >= 1, "gauss_legendre: order must be positive");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

void Moments::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void Moments::merge(const Moments& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double total = static_cast<double>(count + other.count);
  const double delta = other.mean - mean;
  mean += delta * static_cast<double>(other.count) / total;
  m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
  count += other.count;
}

double Moments::variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }

DiagonalSampler::DiagonalSampler(int n, int points, double beta) : n_(n), m_(points), beta_(beta) {
  require(n >= 1, "DiagonalSampler: n must be positive");
  require(points >= 1, "DiagonalSampler: need at least one point");
  require(beta >= 0.0 && beta < 2.0 * n, "DiagonalSampler: beta must lie in [0, 2n)");
  volume_ = geometry::sphere_volume(2 * n);
  // Z_beta = Vol(S^{2n-1}) \int_0^2 d^{2n-1-beta} (1 - d^2/4)^{n-1} dd = Vol(S^{2n-1}) 2^{2n-1-beta} B(n - beta/2, n)
  const double a = n - 0.5 * beta;
  const double log_beta_fn = std::lgamma(a) + std::lgamma(static_cast<double>(n)) - std::lgamma(a + n);
  log_normalizer_ = std::log(geometry::sphere_volume(2 * n - 1)) + (2.0 * n - 1.0 - beta) * std::log(2.0) + log_beta_fn;
}

double DiagonalSampler::step_density(double chord) const {
  return std::exp(-beta_ * std::log(chord) - log_normalizer_);
}

Eigen::VectorXd DiagonalSampler::uniform_point(StreamRng& rng, int band, int bands) const {
  if (bands <= 1) return geometry::sample_sphere_ambient(rng, n_);
  // Archimedes: on S^2 the height is uniform, so equal height bands have equal area.
  const double t = -1.0 + 2.0 * (band + rng.uniform()) / bands;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  Eigen::VectorXd v(3);
  v << t, s * std::cos(phi), s * std::sin(phi);
  return v;
}

Eigen::VectorXd DiagonalSampler::near(StreamRng& rng, const Eigen::VectorXd& x) const {
  const double e = 2.0 * n_ - beta_;
  double d = 0.0;
  while (true) {
    d = 2.0 * std::pow(rng.uniform_open(), 1.0 / e);
    if (n_ == 1) break;
    const double accept = std::pow(1.0 - 0.25 * d * d, n_ - 1);
    if (rng.uniform() < accept) break;
  }
  Eigen::VectorXd a(x.size());
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.normal();
    a -= a.dot(x) * x;
    norm = a.norm();
  } while (norm < 1e-12);
  a /= norm;
  const double cos_t = 1.0 - 0.5 * d * d;
  const double sin_t = d * std::sqrt(std::max(0.0, 1.0 - 0.25 * d * d));
  Eigen::VectorXd y = cos_t * x + sin_t * a;
  return y / y.norm();
}

double DiagonalSampler::density(std::span<const Eigen::VectorXd> pts) const {
  const double uniform = std::pow(volume_, -m_);
  if (beta_ == 0.0 || m_ == 1) return uniform;
  std::vector<double> h(m_);
  for (int e = 0; e < m_; ++e) h[e] = step_density((pts[e] - pts[(e + 1) % m_]).norm());
  double q = uniform;
  for (int c = 0; c < m_; ++c) {
    double prod = 1.0 / volume_;
    for (int e = 0; e < m_; ++e)
      if (e != (c + m_ - 1) % m_) prod *= h[e];
    q += prod;
  }
  return q / (m_ + 1);
}

double DiagonalSampler::draw(StreamRng& rng, std::vector<Eigen::VectorXd>& out, int band, int bands) const {
  out.resize(m_);
  if (beta_ == 0.0 || m_ == 1) {
    out[0] = uniform_point(rng, band, bands);
    for (int i = 1; i < m_; ++i) out[i] = geometry::sample_sphere_ambient(rng, n_);
    return density(out);
  }
  const int component = static_cast<int>(rng.below(static_cast<std::uint64_t>(m_ + 1)));
  if (component == m_) {
    out[0] = uniform_point(rng, band, bands);
    for (int i = 1; i < m_; ++i) out[i] = geometry::sample_sphere_ambient(rng, n_);
  } else {
    out[component] = uniform_point(rng, band, bands);
    int cur = component;
    for (int step = 0; step + 1 < m_; ++step) {
      const int next = (cur + 1) % m_;
      out[next] = near(rng, out[cur]);
      cur = next;
    }
  }
  return density(out);
}

namespace {

struct ChunkResult {
  std::vector<Moments> moments;
  long long rejected = 0;
  double max_abs = 0.0;
};

ChunkResult merge_range(std::vector<ChunkResult>& chunks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return chunks[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  ChunkResult a = merge_range(chunks, lo, mid);
  const ChunkResult b = merge_range(chunks, mid, hi);
  for (std::size_t c = 0; c < a.moments.size(); ++c) a.moments[c].merge(b.moments[c]);
  a.rejected += b.rejected;
  a.max_abs = std::max(a.max_abs, b.max_abs);
  return a;
}

}  // namespace

MultiEstimate mc_integrate(const TupleIntegrand& integrand, int components, int n, int points,
                           const MCConfig& config) {
  if (config.samples < 1) throw ConfigurationError("mc_integrate: samples must be at least 1");
  if (config.workers < 1) throw ConfigurationError("mc_integrate: workers must be at least 1");
  if (config.chunk_size < 1) throw ConfigurationError("mc_integrate: chunk_size must be at least 1");
  if (components < 1) throw ConfigurationError("mc_integrate: need at least one component");
  if (config.importance_exponent < 0.0 || config.importance_exponent >= 2.0 * n)
    throw ConfigurationError("mc_integrate: importance exponent must lie in [0, 2n)");
  const int bands = config.strata > 1 ? config.strata : 1;
  if (bands > 1 && n != 1) throw ConfigurationError("mc_integrate: height strata are only available for n = 1");

  const DiagonalSampler sampler(n, points, config.importance_exponent);
  const long long chunk = config.chunk_size;
  const std::size_t nchunks = static_cast<std::size_t>((config.samples + chunk - 1) / chunk);
  std::vector<ChunkResult> results(nchunks);

  auto run_chunk = [&](std::size_t c) {
    StreamRng rng(config.seed, c);
    ChunkResult r;
    r.moments.resize(components);
    std::vector<Eigen::VectorXd> pts;
    std::vector<double> values(components);
    const long long begin = static_cast<long long>(c) * chunk;
    const long long end = std::min(config.samples, begin + chunk);
    for (long long s = begin; s < end; ++s) {
      const int band = static_cast<int>(s % bands);
      const double q = sampler.draw(rng, pts, band, bands);
      bool ok = points == 1;
      if (!ok) {
        ok = true;
        for (int e = 0; e < points && ok; ++e)
          ok = (pts[e] - pts[(e + 1) % points]).norm() >= config.singular_guard;
      }
      if (ok) {
        try {
          integrand(pts, values);
        } catch (const SingularityError&) {
          ok = false;
        }
      }
      if (!ok) {
        ++r.rejected;
        for (auto& m : r.moments) m.add(0.0);
        continue;
      }
      for (int i = 0; i < components; ++i) {
        const double v = values[i] / q;
        r.moments[i].add(v);
        if (i == 0) r.max_abs = std::max(r.max_abs, std::abs(v));
      }
    }
    results[c] = std::move(r);
  };

  const int workers = static_cast<int>(std::min<std::size_t>(config.workers, nchunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t c = next.fetch_add(1);
          if (c >= nchunks || failed.load()) return;
          try {
            run_chunk(c);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  const ChunkResult total = merge_range(results, 0, results.size());
  const double rate = static_cast<double>(total.rejected) / static_cast<double>(config.samples);
  if (rate > config.max_rejection_fraction)
    throw ConfigurationError("mc_integrate: " + std::to_string(total.rejected) +
                             " samples hit the singular set (rate " + std::to_string(rate) + ")");
  MultiEstimate out;
  for (const Moments& m : total.moments) {
    Estimate e;
    e.value = m.mean;
    e.stderr_ = std::sqrt(m.variance() / static_cast<double>(m.count));
    e.n_effective = m.count - total.rejected;
    e.rejected = total.rejected;
    e.rejection_rate = rate;
    e.max_abs_sample = total.max_abs;
    out.components.push_back(e);
  }
  return out;
}

Estimate mc_integrate(const std::function<double(std::span<const Eigen::VectorXd>)>& integrand, int n, int points,
                      const MCConfig& config) {
  TupleIntegrand wrapped = [&](std::span<const Eigen::VectorXd> pts, std::span<double> out) { out[0] = integrand(pts); };
  return mc_integrate(wrapped, 1, n, points, config).components.front();
}

}  // namespace holderdeg::quadrature
