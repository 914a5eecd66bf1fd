#include "holderdeg/kernels.hpp"

#include <cmath>
#include <map>

#include "holderdeg/clifford_words.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/exterior.hpp"

namespace holderdeg::exterior {

namespace {

void check_points(const gamma::GammaSequence& I, std::span<const geometry::ChartPoint> points,
                  const constants::KernelConstants& c) {
  require(points.size() == static_cast<std::size_t>(2 * I.k()), "kernel: need 2k points");
  for (const auto& p : points) {
    require(!p.is_infinite(), "kernel: points must be finite");
    require(p.dim() == 2 * c.n, "kernel: points must lie in R^{2n}");
  }
}

Complex i_pow(int n) {
  static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((n % 4) + 4) % 4];
}

}  // namespace

Complex H_kernel(const gamma::GammaSequence& I, std::span<const geometry::ChartPoint> points,
                 const constants::KernelConstants& c) {
  check_points(I, points, c);
  const std::size_t m = points.size();
  ExteriorOperator prod = ExteriorOperator::identity(c.n);
  for (std::size_t l = 0; l < m; ++l) {
    const auto& x = points[l];
    const auto& y = points[(l + 1) % m];
    const int s = I[l];
    prod = prod * ((s == 1 || s == 2) ? K1(x, y, c.n, c.c_n) : K3(x, y, c.n, c.c_prime));
  }
  return supertrace(prod);
}

Complex expanded_supertrace(const gamma::GammaSequence& I, std::span<const geometry::ChartPoint> points,
                            const constants::KernelConstants& c) {
  check_points(I, points, c);
  const int n = c.n;
  const std::size_t m = points.size();
  const CliffordPolynomial harmonic = harmonic_projector_words(n);
  CliffordPolynomial prod = tau_words(n);
  for (std::size_t l = 0; l < m; ++l) {
    const Eigen::VectorXd& x = points[l].coords();
    const Eigen::VectorXd& y = points[(l + 1) % m].coords();
    const int s = I[l];
    if (s == 1 || s == 2) {
      const Eigen::VectorXd diff = x - y;
      const double r = diff.norm();
      if (r == 0.0) throw SingularityError("expanded_supertrace: coincident points on a singular slot");
      CliffordPolynomial factor = CliffordPolynomial::g_vector(n, diff.data());
      factor *= c.c_n / (std::sqrt(2.0) * std::pow(r, 2 * n + 1));
      prod = prod * factor;
    } else {
      CliffordPolynomial factor = harmonic;
      factor *= c.c_prime * c.c_prime * std::pow((1.0 + x.squaredNorm()) * (1.0 + y.squaredNorm()), -n);
      prod = prod * factor;
    }
  }
  return prod.trace();
}

Complex Q_factor(const gamma::GammaSequence& I, std::span<const projections::Tuple> mapped) {
  require(mapped.size() == static_cast<std::size_t>(2 * I.k()), "Q_factor: need 2k mapped points");
  const std::size_t n = mapped.front().size();
  for (const auto& t : mapped) require(t.size() == n && n > 0, "Q_factor: inconsistent tuple sizes");
  std::vector<int> chain{0};
  for (int i : I.index_map()) chain.push_back(i);
  Complex q(1.0, 0.0);
  for (std::size_t a = 0; a < chain.size(); ++a) {
    const auto& u = mapped[chain[a]];
    const auto& v = mapped[chain[(a + 1) % chain.size()]];
    for (std::size_t j = 0; j < n; ++j) q *= projections::unit_inner(u[j], v[j]);
  }
  return q;
}

FtildeValue ftilde(const maps::SampledMap& f, int k, std::span<const geometry::ChartPoint> points,
                   const constants::KernelConstants& c) {
  require(f.n() == c.n, "ftilde: map and constants disagree on n");
  require(k > c.n / f.holder_exponent(), "ftilde: need k > n/alpha");
  require(points.size() == static_cast<std::size_t>(2 * k), "ftilde: need 2k points");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (!points[a].is_infinite() && !points[b].is_infinite() && points[a].coords() == points[b].coords())
        throw SingularityError("ftilde: points must be pairwise distinct");

  std::vector<projections::Tuple> mapped;
  mapped.reserve(points.size());
  for (const auto& p : points) mapped.push_back(f(p));

  FtildeValue out;
  out.by_weight.assign(k + 1, Complex(0.0, 0.0));
  std::map<std::uint32_t, Complex> h_cache;
  for (const auto& I : gamma::enumerate_gamma(k)) {
    auto it = h_cache.find(I.block_pattern());
    if (it == h_cache.end()) it = h_cache.emplace(I.block_pattern(), H_kernel(I, points, c)).first;
    const Complex term = I.iota() * Q_factor(I, mapped) * it->second;
    out.by_weight[I.weight()] += term;
    out.total += term;
  }
  return out;
}

FtildeEvaluator::FtildeEvaluator(const maps::SampledMap& f, int k, const constants::KernelConstants& c)
    : f_(&f), k_(k), n_(c.n), c_(c) {
  require(f.n() == c.n, "FtildeEvaluator: map and constants disagree on n");
  require(k > c.n / f.holder_exponent(), "FtildeEvaluator: need k > n/alpha");
  std::map<std::uint32_t, std::size_t> index;
  for (const auto& I : gamma::enumerate_gamma(k)) {
    auto it = index.find(I.block_pattern());
    if (it == index.end()) {
      it = index.emplace(I.block_pattern(), groups_.size()).first;
      groups_.push_back({I.block_pattern(), {}});
    }
    Term t;
    t.chain.push_back(0);
    for (int i : I.index_map()) t.chain.push_back(i);
    t.iota = I.iota();
    t.weight = I.weight();
    groups_[it->second].terms.push_back(std::move(t));
  }
  const Complex phase = i_pow(n_);
  tau_real_ = (tau(n_).matrix() / phase).real();
  // g(x) Omega(x)^{-1/2} = c' 2^{-n} for every x.
  const double g = c.c_prime * std::pow(2.0, -n_);
  harmonic_ = harmonic_projector(n_).matrix().real() * (g * g);
  for (int j = 0; j < 2 * n_; ++j)
    generators_.push_back(wedge_minus_contract(Eigen::VectorXd::Unit(2 * n_, j)).matrix().real());
}

FtildeValue FtildeEvaluator::operator()(std::span<const Eigen::VectorXd> ambient) const {
  const int m = 2 * k_;
  require(ambient.size() == static_cast<std::size_t>(m), "FtildeEvaluator: need 2k points");

  std::vector<geometry::ChartPoint> chart;
  chart.reserve(m);
  for (const auto& a : ambient) chart.push_back(geometry::sphere_to_stereo(geometry::SpherePoint(a)));

  // Sphere-weighted singular kernel on each edge (l, l+1).
  std::vector<Eigen::MatrixXd> singular(m);
  for (int l = 0; l < m; ++l) {
    const int r = (l + 1) % m;
    const double chord = (ambient[l] - ambient[r]).norm();
    if (chord == 0.0) throw SingularityError("FtildeEvaluator: coincident neighbouring points");
    if (chart[l].is_infinite() || chart[r].is_infinite())
      throw SingularityError("FtildeEvaluator: point at infinity on a singular edge");
    const Eigen::VectorXd diff = chart[l].coords() - chart[r].coords();
    const Eigen::VectorXd u = diff / diff.norm();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(harmonic_.rows(), harmonic_.cols());
    for (int j = 0; j < 2 * n_; ++j) g += u(j) * generators_[j];
    singular[l] = g * (c_.c_n / (std::sqrt(2.0) * std::pow(chord, 2 * n_)));
  }

  // Inner products of the mapped unit vectors, multiplied over the n coordinates.
  std::vector<projections::Tuple> mapped;
  mapped.reserve(m);
  for (const auto& x : chart) mapped.push_back((*f_)(x));
  Eigen::MatrixXcd gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex v(1.0, 0.0);
      for (int j = 0; j < n_; ++j) v *= projections::unit_inner(mapped[a][j], mapped[b][j]);
      gram(a, b) = v;
    }

  FtildeValue out;
  out.by_weight.assign(k_ + 1, Complex(0.0, 0.0));
  const Complex phase = i_pow(n_);
  for (const Group& group : groups_) {
    Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(harmonic_.rows(), harmonic_.cols());
    for (int l = 0; l < m; ++l) {
      const bool harmonic_slot = (group.pattern >> l) & 1u || (l > 0 && ((group.pattern >> (l - 1)) & 1u));
      prod = prod * (harmonic_slot ? harmonic_ : singular[l]);
    }
    const Complex h = phase * (tau_real_.transpose().cwiseProduct(prod)).sum();
    if (h == Complex(0.0, 0.0)) continue;
    for (const Term& t : group.terms) {
      Complex q(1.0, 0.0);
      for (std::size_t a = 0; a + 1 < t.chain.size(); ++a) q *= gram(t.chain[a], t.chain[a + 1]);
      q *= gram(t.chain.back(), t.chain.front());
      const Complex term = t.iota * q * h;
      out.by_weight[t.weight] += term;
      out.total += term;
    }
  }
  return out;
}

}  // namespace holderdeg::exterior
