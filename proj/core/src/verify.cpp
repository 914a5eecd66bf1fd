#include "holderdeg/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "holderdeg/constants.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/exterior.hpp"
#include "holderdeg/gamma.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/kernels.hpp"
#include "holderdeg/projections.hpp"
#include "holderdeg/quadrature.hpp"
#include "holderdeg/random.hpp"
#include "holderdeg/schatten.hpp"
#include "holderdeg/specmod.hpp"

namespace holderdeg::verify {

using Complex = std::complex<double>;
using projections::ExtendedComplex;
using projections::Tuple;

bool SuiteResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"chern", "gamma", "tracalc", "russo", "trace-formula", "exterior", "homlem"};
}

namespace {

using Clock = std::chrono::steady_clock;

Check at_most(std::string name, double value, double threshold, std::string detail = {}) {
  return Check{std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

Check at_least(std::string name, double value, double threshold, std::string detail = {}) {
  return Check{std::move(name), value >= threshold, value, threshold, std::move(detail)};
}

Check equals(std::string name, long long value, long long expected) {
  return Check{std::move(name), value == expected, static_cast<double>(value), static_cast<double>(expected), {}};
}

SuiteResult timed(std::string name, const std::function<void(std::vector<Check>&)>& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto t0 = Clock::now();
  body(r.checks);
  r.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// Random point of the Riemann sphere with a spread of magnitudes; infinity now and then.
ExtendedComplex random_extended(StreamRng& rng) {
  if (rng.uniform() < 0.05) return ExtendedComplex::infinity();
  if (rng.uniform() < 0.05) return ExtendedComplex(0.0);
  const double scale = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
  return ExtendedComplex(Complex(rng.normal(), rng.normal()) * scale);
}

Tuple random_tuple(StreamRng& rng, int n) {
  Tuple t(n);
  for (auto& z : t) z = random_extended(rng);
  return t;
}

Eigen::VectorXd random_ball_point(StreamRng& rng, int n, double radius) {
  Eigen::VectorXd y(2 * n);
  for (int i = 0; i < 2 * n; ++i) y(i) = rng.normal();
  // mostly inside, some outside, some near the boundary
  const double u = rng.uniform();
  const double r = u < 0.4 ? radius * rng.uniform() : u < 0.7 ? radius * (1.0 + 2.0 * rng.uniform())
                                                              : radius * (1.0 - std::pow(10.0, -1.0 - 9.0 * rng.uniform()));
  return y.normalized() * r;
}

// tr(pT(z_0) ... pT(z_2k)) / k! by dense multiplication.
Complex dense_cyclic_trace(std::span<const Tuple> pts, int k) {
  Eigen::MatrixXcd prod = projections::pT(pts[0]).matrix();
  for (std::size_t a = 1; a < pts.size(); ++a) prod = prod * projections::pT(pts[a]).matrix();
  return prod.trace() / std::tgamma(k + 1.0);
}

std::vector<geometry::ChartPoint> random_chart_points(StreamRng& rng, int n, int count) {
  std::vector<geometry::ChartPoint> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd x(2 * n);
    for (int j = 0; j < 2 * n; ++j) x(j) = rng.normal() * 1.5;
    pts.emplace_back(x);
  }
  return pts;
}

Eigen::MatrixXcd random_complex(StreamRng& rng, int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

struct Grid {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

// Gauss-Legendre grid on [0, 1].
Grid unit_grid(int N) {
  const auto rule = quadrature::gauss_legendre(N);
  Grid g{Eigen::VectorXd(N), Eigen::VectorXd(N)};
  for (int i = 0; i < N; ++i) {
    g.nodes(i) = 0.5 * (rule.nodes[i] + 1.0);
    g.weights(i) = 0.5 * rule.weights[i];
  }
  return g;
}

// Midpoint grid on [0, 1]; interleaves with nothing, so it never meets a Gauss node.
Grid midpoint_grid(int N) {
  Grid g{Eigen::VectorXd(N), Eigen::VectorXd::Constant(N, 1.0 / N)};
  for (int i = 0; i < N; ++i) g.nodes(i) = (i + 0.5) / N;
  return g;
}

// Smooth random kernel: a few random separable products of low-order trigonometric terms.
std::function<Complex(double, double)> random_smooth_kernel(StreamRng& rng) {
  const int terms = 1 + static_cast<int>(rng.below(4));
  std::vector<std::array<double, 6>> coef(terms);
  for (auto& c : coef)
    for (auto& v : c) v = rng.normal();
  return [coef](double x, double y) {
    Complex s(0.0, 0.0);
    for (const auto& c : coef)
      s += Complex(c[0], c[1]) * std::cos(c[2] * x + c[3]) * std::exp(Complex(0.0, c[4] * y + c[5] * x * y));
    return s;
  };
}

}  // namespace

SuiteResult verify_chern(const VerifyOptions& options) {
  return timed("chern", [&](std::vector<Check>& checks) {
    StreamRng rng(options.seed, 1);
    const int trials = 10'000;
    double idem = 0.0, herm = 0.0, trace = 0.0;
    for (int i = 0; i < trials; ++i) {
      const auto z = random_extended(rng);
      const auto p = projections::p0(z);
      idem = std::max(idem, p.idempotence_defect());
      herm = std::max(herm, p.hermiticity_defect());
      trace = std::max(trace, std::abs(p.rank() - 1.0));
      const int n = 1 + static_cast<int>(rng.below(3));
      const Tuple t = random_tuple(rng, n);
      const auto q = projections::pT(t);
      idem = std::max(idem, q.idempotence_defect());
      herm = std::max(herm, q.hermiticity_defect());
      trace = std::max(trace, std::abs(q.rank() - 1.0));
      const projections::BallChart chart(n, 0.5 + rng.uniform());
      const auto y = projections::pY(geometry::ChartPoint(random_ball_point(rng, n, chart.radius())), chart);
      idem = std::max(idem, y.idempotence_defect());
      herm = std::max(herm, y.hermiticity_defect());
    }
    checks.push_back(at_most("p0/pT/pY idempotence (max entry)", idem, 1e-12, "10^4 random inputs each"));
    checks.push_back(at_most("p0/pT/pY hermiticity (max entry)", herm, 1e-12));
    checks.push_back(at_most("p0/pT trace equals rank one", trace, 1e-10));

    // pY approaches pT(inf) at the boundary of the chart.
    double boundary = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const projections::BallChart chart(n, 1.0);
      const Tuple inf(n, ExtendedComplex::infinity());
      const auto target = projections::pT(inf).matrix();
      for (int i = 0; i < 20; ++i) {
        Eigen::VectorXd dir(2 * n);
        for (int j = 0; j < 2 * n; ++j) dir(j) = rng.normal();
        dir.normalize();
        // y_j = (1 - 10^-j) dir: the distance to pT(inf) must shrink along the sequence
        double previous = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= 12; ++j) {
          const auto near = projections::pY(geometry::ChartPoint(dir * (1.0 - std::pow(10.0, -j))), chart);
          const double dist = projections::max_entry(near.matrix() - target);
          if (dist > previous * (1.0 + 1e-12)) boundary = std::max(boundary, 1.0);
          previous = dist;
        }
        boundary = std::max(boundary, previous);
      }
    }
    checks.push_back(at_most("pY continuity at the chart boundary", boundary, 1e-6, "|y| = 1 - 10^-j, j <= 12"));

    const auto adaptive = projections::integrate_chern_top(1);
    checks.push_back(at_most("n=1 top Chern integral, adaptive", std::abs(adaptive.value - 1.0), 1e-6));

    projections::ChernQuadratureConfig restricted;
    restricted.radius = 2.5;
    const auto partial = projections::integrate_chern_top(1, restricted);
    checks.push_back(at_most("n=1 integral over |z|<R against 1 - 1/(1+R^2)",
                             std::abs(partial.value - (1.0 - 1.0 / (1.0 + 2.5 * 2.5))), 1e-8));

    const auto adaptive2 = projections::integrate_chern_top(2);
    checks.push_back(at_most("n=2 top Chern integral, adaptive", std::abs(adaptive2.value - 1.0), 1e-6));

    projections::ChernQuadratureConfig mc;
    mc.method = projections::ChernQuadrature::monte_carlo;
    mc.samples = options.chern_samples;
    mc.seed = options.seed;
    const auto mc2 = projections::integrate_chern_top(2, mc);
    std::ostringstream d;
    d << "value " << mc2.value << ", 95% half-width " << 1.96 * mc2.error;
    const bool inside = std::abs(mc2.value - 1.0) <= 1.96 * mc2.error + 1e-12 && 1.96 * mc2.error <= 1e-2;
    checks.push_back(Check{"n=2 top Chern integral, Monte Carlo CI", inside, std::abs(mc2.value - 1.0), 1e-2, d.str()});
  });
}

SuiteResult verify_gamma(const VerifyOptions&) {
  return timed("gamma", [](std::vector<Check>& checks) {
    checks.push_back(equals("|Gamma_1| by exhaustive filter", static_cast<long long>(gamma::enumerate_gamma(1).size()), 5));
    checks.push_back(equals("|Gamma_2| by exhaustive filter", static_cast<long long>(gamma::enumerate_gamma(2).size()), 29));
    checks.push_back(equals("|Gamma_1^1|", static_cast<long long>(gamma::enumerate_gamma(1, 1).size()), 1));
    for (int k = 1; k <= 3; ++k) {
      const auto filtered = gamma::enumerate_gamma(k);
      const auto built = gamma::generate_gamma_blocks(k);
      checks.push_back(Check{"block generator equals filter, k=" + std::to_string(k), filtered == built,
                             static_cast<double>(built.size()), static_cast<double>(filtered.size()), {}});
    }
    for (int k = 1; k <= 5; ++k)
      checks.push_back(equals("closed-form count, k=" + std::to_string(k),
                              static_cast<long long>(gamma::enumerate_gamma(k).size()), gamma::gamma_size(k)));
    // weights partition Gamma_k
    bool partition = true;
    for (int k = 1; k <= 4; ++k) {
      std::size_t total = 0;
      for (int w = 0; w <= k; ++w) {
        const auto part = gamma::enumerate_gamma(k, w);
        total += part.size();
        for (const auto& I : part) partition = partition && I.weight() == w && w <= k;
      }
      partition = partition && total == gamma::enumerate_gamma(k).size();
    }
    checks.push_back(Check{"Gamma_k is the disjoint union of Gamma_k^w, k<=4", partition, 0, 0, {}});
    const gamma::GammaSequence a(1, {1, 1}), b(1, {1, 2}), c(1, {3, 4});
    const bool signs = a.iota() == Complex(1, 0) && b.iota() == Complex(-1, 0) && c.iota() == Complex(0, -1);
    checks.push_back(Check{"iota on (1,1), (1,2), (3,4)", signs, 0, 0, {}});
  });
}

SuiteResult verify_tracalc(const VerifyOptions& options) {
  return timed("tracalc", [&](std::vector<Check>& checks) {
    StreamRng rng(options.seed, 3);
    double err = 0.0, rot = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + trial % 3;
      const int k = 1 + (trial / 3) % 3;
      std::vector<Tuple> pts;
      for (int a = 0; a < 2 * k + 1; ++a) pts.push_back(random_tuple(rng, n));
      const Complex fast = projections::cyclic_chern_product(pts, k);
      err = std::max(err, std::abs(fast - dense_cyclic_trace(pts, k)));
      std::rotate(pts.begin(), pts.begin() + 1, pts.end());
      rot = std::max(rot, std::abs(fast - projections::cyclic_chern_product(pts, k)));
    }
    checks.push_back(at_most("product formula vs dense trace, 1000 tuples n,k<=3", err, 1e-10));
    checks.push_back(at_most("cyclic rotation invariance", rot, 1e-12));
    const std::vector<Tuple> special{{ExtendedComplex(0.0)}, {ExtendedComplex(1.0)}, {ExtendedComplex::infinity()}};
    checks.push_back(at_most("n=1, k=1, points (0, 1, inf)", std::abs(projections::cyclic_chern_product(special, 1)), 1e-15));
    double equal = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const Tuple z = random_tuple(rng, 2);
      const std::vector<Tuple> same(2 * k + 1, z);
      equal = std::max(equal, std::abs(projections::cyclic_chern_product(same, k) - 1.0 / std::tgamma(k + 1.0)));
    }
    checks.push_back(at_most("equal points give 1/k!", equal, 1e-14));

    // Q_I against the dense trace along the chain 0, Lambda(I).
    double qerr = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + trial % 3;
      const int k = 1 + (trial / 3) % 3;
      const auto all = gamma::enumerate_gamma(k);
      const auto& I = all[rng.below(all.size())];
      std::vector<Tuple> mapped;
      for (int a = 0; a < 2 * k; ++a) mapped.push_back(random_tuple(rng, n));
      std::vector<Tuple> chain{mapped[0]};
      for (int i : I.index_map()) chain.push_back(mapped[i]);
      Eigen::MatrixXcd prod = projections::pT(chain[0]).matrix();
      for (std::size_t a = 1; a < chain.size(); ++a) prod = prod * projections::pT(chain[a]).matrix();
      qerr = std::max(qerr, std::abs(exterior::Q_factor(I, mapped) - prod.trace()));
    }
    checks.push_back(at_most("Q_I product formula vs dense trace, 1000 configs", qerr, 1e-10));
  });
}

SuiteResult verify_exterior(const VerifyOptions& options) {
  return timed("exterior", [&](std::vector<Check>& checks) {
    StreamRng rng(options.seed, 4);
    double gen = 0.0, tau_sq = 0.0, tau_tr = 0.0, anti = 0.0, graded = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const int d = 2 * n;
      const auto I = exterior::ExteriorOperator::identity(n).matrix();
      for (int i = 0; i < d; ++i) {
        const auto wi = exterior::wedge(i, n).matrix();
        const auto ci = exterior::contraction(i, n).matrix();
        gen = std::max(gen, projections::max_entry(wi * wi));
        gen = std::max(gen, projections::max_entry(ci * ci));
        for (int j = 0; j < d; ++j) {
          const auto wj = exterior::wedge(j, n).matrix();
          const auto cj = exterior::contraction(j, n).matrix();
          const Eigen::MatrixXcd target = (i == j) ? Eigen::MatrixXcd(I) : Eigen::MatrixXcd::Zero(I.rows(), I.cols());
          gen = std::max(gen, projections::max_entry(wi * cj + cj * wi - target));
          gen = std::max(gen, projections::max_entry(wi * wj + wj * wi));
        }
      }
      const auto t = exterior::tau(n).matrix();
      tau_sq = std::max(tau_sq, projections::max_entry(t * t - I));
      tau_tr = std::max(tau_tr, std::abs(t.trace()));

      // K1 antisymmetry and Clifford square
      const auto c = constants::analytic_constants(n);
      for (int trial = 0; trial < 50; ++trial) {
        const auto pts = random_chart_points(rng, n, 2);
        const auto a = exterior::K1(pts[0], pts[1], n, c.c_n).matrix();
        const auto b = exterior::K1(pts[1], pts[0], n, c.c_n).matrix();
        anti = std::max(anti, projections::max_entry(a + b) / std::max(1.0, projections::max_entry(a)));
      }

      // str(AB) = (-1)^{|A||B|} str(BA) on homogeneous operators
      for (int trial = 0; trial < 20; ++trial) {
        const int dim = static_cast<int>(I.rows());
        Eigen::MatrixXcd A = random_complex(rng, dim, dim), B = random_complex(rng, dim, dim);
        const int pa = static_cast<int>(rng.below(2)), pb = static_cast<int>(rng.below(2));
        // even or odd part with respect to the grading tau: X -> (X +- tau X tau)/2
        A = 0.5 * (A + (pa ? -1.0 : 1.0) * t * A * t);
        B = 0.5 * (B + (pb ? -1.0 : 1.0) * t * B * t);
        const Complex lhs = exterior::supertrace(exterior::ExteriorOperator(n, A * B));
        const Complex rhs = exterior::supertrace(exterior::ExteriorOperator(n, B * A)) * ((pa && pb) ? -1.0 : 1.0);
        graded = std::max(graded, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
    checks.push_back(at_most("wedge/contraction relations, n<=3", gen, 1e-14));
    checks.push_back(at_most("tau^2 = 1", tau_sq, 1e-14));
    checks.push_back(at_most("tr(tau) = 0", tau_tr, 1e-12));
    checks.push_back(at_most("K1(y,x) = -K1(x,y)", anti, 1e-12));
    checks.push_back(at_most("graded trace property", graded, 1e-12));

    // H_kernel against the word expansion, n = 1, k = 2.
    const auto c = constants::analytic_constants(1);
    const auto all = gamma::enumerate_gamma(2);
    double rel = 0.0;
    int compared = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto pts = random_chart_points(rng, 1, 4);
      const auto& I = all[trial % all.size()];
      const Complex direct = exterior::H_kernel(I, pts, c);
      const Complex expanded = exterior::expanded_supertrace(I, pts, c);
      // Scale: the product of the factor norms bounds |H|.
      double scale = 1.0;
      for (int l = 0; l < 4; ++l) {
        const auto& x = pts[l];
        const auto& y = pts[(l + 1) % 4];
        const auto K = (I[l] <= 2) ? exterior::K1(x, y, 1, c.c_n) : exterior::K3(x, y, 1, c.c_prime);
        scale *= K.matrix().norm();
      }
      rel = std::max(rel, std::abs(direct - expanded) / std::max(std::abs(direct), 1e-12 * scale));
      ++compared;
    }
    checks.push_back(at_most("H_kernel = expanded supertrace, 500 configs (n=1, k=2), relative", rel, 1e-9,
                             std::to_string(compared) + " configurations"));
  });
}

SuiteResult verify_russo(const VerifyOptions& options) {
  return timed("russo", [&](std::vector<Check>& checks) {
    StreamRng rng(options.seed, 5);
    int held = 0, total = 0;
    double worst = 0.0;  // max lhs/rhs
    auto run = [&](const schatten::DiscretizedKernel& k) {
      for (double q : {3.0, 4.0}) {
        const auto r = schatten::russo_check(k, q);
        ++total;
        if (r.holds) ++held;
        worst = std::max(worst, r.lhs / r.rhs);
      }
    };
    for (int trial = 0; trial < 200; ++trial) {
      const int N = 8 + static_cast<int>(rng.below(25));
      const Grid gx = unit_grid(N), gy = unit_grid(N);
      run(schatten::DiscretizedKernel::sample(random_smooth_kernel(rng), gx.nodes, gx.weights, gy.nodes, gy.weights));
    }
    checks.push_back(Check{"200 random smooth kernels, q in {3,4}", held == total, worst, 1.0 + 1e-8,
                           std::to_string(held) + "/" + std::to_string(total) + " hold; max lhs/rhs shown"});

    held = total = 0;
    worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int N = 16 + 8 * (trial % 4);
      const Grid gx = unit_grid(N), gy = midpoint_grid(N);
      std::function<Complex(double, double)> k;
      switch (trial % 5) {
        case 0: {  // near-diagonal singularity
          const double s = 0.2 + 0.1 * (trial / 5);
          k = [s](double x, double y) { return Complex(std::pow(std::abs(x - y), -s), 0.0); };
          break;
        }
        case 1:  // rank one, lopsided
          k = [](double x, double y) { return Complex(std::exp(8.0 * x) * (1.0 + y * y), 0.0); };
          break;
        case 2: {  // oscillatory
          const double w = 20.0 + 20.0 * (trial / 5);
          k = [w](double x, double y) { return std::exp(Complex(0.0, w * x * y)); };
          break;
        }
        case 3:  // concentrated bump
          k = [](double x, double y) { return Complex(std::exp(-400.0 * (x - y) * (x - y)), 0.0); };
          break;
        default:  // non-normal, one-sided
          k = [](double x, double y) { return Complex(x > y ? 1.0 / std::sqrt(x - y + 1e-3) : 0.0, 0.0); };
          break;
      }
      run(schatten::DiscretizedKernel::sample(k, gx.nodes, gx.weights, gy.nodes, gy.weights));
    }
    checks.push_back(Check{"20 adversarial kernels, q in {3,4}", held == total, worst, 1.0 + 1e-8,
                           std::to_string(held) + "/" + std::to_string(total) + " hold; max lhs/rhs shown"});

    const Grid g = unit_grid(16);
    const auto one = schatten::DiscretizedKernel::sample([](double, double) { return Complex(1.0, 0.0); }, g.nodes,
                                                         g.weights, g.nodes, g.weights);
    double eq = 0.0;
    for (double q : {3.0, 4.0}) {
      const auto r = schatten::russo_check(one, q);
      eq = std::max({eq, std::abs(r.lhs - r.rhs), std::abs(r.lhs - 1.0)});
    }
    checks.push_back(at_most("constant kernel: equality lhs = rhs = 1", eq, 1e-10));
  });
}

SuiteResult verify_trace_formula(const VerifyOptions& options) {
  return timed("trace-formula", [&](std::vector<Check>& checks) {
    StreamRng rng(options.seed, 6);
    for (int m : {4, 5, 6}) {
      double diff = 0.0;
      const int Ns[] = {6, 11, 16};
      for (int N : Ns) {
        const Grid g = unit_grid(N);
        std::vector<schatten::DiscretizedKernel> ks;
        for (int j = 0; j < m; ++j)
          ks.push_back(schatten::DiscretizedKernel::sample(random_smooth_kernel(rng), g.nodes, g.weights, g.nodes,
                                                           g.weights));
        const auto r = schatten::trace_product_check(ks, 3.0);
        diff = std::max(diff, r.difference / std::max(1.0, std::abs(r.matrix_trace)));
      }
      checks.push_back(at_most("matrix trace vs multi-sum, m=" + std::to_string(m) + ", N<=16", diff, 1e-10));
    }

    // rank-one chain: tr(prod g_j h_j^T) = prod_j <h_j, g_{j+1}>
    const Grid g = unit_grid(12);
    std::vector<schatten::DiscretizedKernel> ks;
    std::vector<std::function<double(double)>> gs, hs;
    for (int j = 0; j < 4; ++j) {
      const double a = 1.0 + j, b = 0.5 * j;
      gs.push_back([a](double x) { return std::cos(a * x); });
      hs.push_back([b](double y) { return 1.0 + b * y; });
      ks.push_back(schatten::DiscretizedKernel::sample(
          [gx = gs.back(), hy = hs.back()](double x, double y) { return Complex(gx(x) * hy(y), 0.0); }, g.nodes,
          g.weights, g.nodes, g.weights));
    }
    Complex chain(1.0, 0.0);
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int i = 0; i < g.nodes.size(); ++i) s += hs[j](g.nodes(i)) * gs[(j + 1) % 4](g.nodes(i)) * g.weights(i);
      chain *= s;
    }
    const auto r = schatten::trace_product_check(ks, 3.0);
    checks.push_back(at_most("rank-one chain against inner products", std::abs(r.matrix_trace - chain), 1e-12));

    // Kronecker deltas: tr = sum_i prod_j w_i
    std::vector<schatten::DiscretizedKernel> deltas;
    for (int j = 0; j < 4; ++j) {
      schatten::DiscretizedKernel d{Eigen::MatrixXcd::Zero(12, 12), g.weights, g.weights};
      for (int i = 0; i < 12; ++i) d.values(i, i) = 1.0;
      deltas.push_back(d);
    }
    const auto rd = schatten::trace_product_check(deltas, 3.0);
    const double expect = g.weights.array().pow(4).sum();
    checks.push_back(at_most("grid delta kernels: sum of w_i^4", std::abs(rd.integral_value - expect) +
                                                                     std::abs(rd.matrix_trace - expect), 1e-14));
  });
}

SuiteResult verify_homlem(const VerifyOptions& options) {
  return timed("homlem", [&](std::vector<Check>& checks) {
    std::vector<double> ts;
    for (int i = 0; i <= 8; ++i) ts.push_back(std::pow(10.0, 1.0 + 2.0 * i / 8.0));  // 10 .. 1000
    const auto with = specmod::homlem_decay(ts, options.homlem_L, 4.0, true);
    const auto without = specmod::homlem_decay(ts, options.homlem_L, 4.0, false);
    std::ostringstream d;
    d << "L=" << options.homlem_L << ", q=4, t in [10, 1000]";
    checks.push_back(Check{"log-log slope of ||F(t) - F - W||_4", with.slope >= -1.3 && with.slope <= -0.7, with.slope,
                           -1.0, d.str()});
    const double ratio = with.distance.front() / with.distance.back();
    checks.push_back(at_least("distance(t=10) / distance(t=1000)", ratio, 10.0));
    checks.push_back(at_least("without W the distance plateaus (slope)", without.slope, -0.2));
    // spectral formula against dense singular values at small L
    double dense = 0.0;
    for (double t : {1.0, 10.0, 100.0}) {
      const std::vector<double> one{t, 100.0 * t};
      const auto s = specmod::homlem_decay(one, 6, 4.0, true);
      dense = std::max(dense, std::abs(s.distance.front() - specmod::homlem_distance_dense(6, t, 4.0, true)) /
                                  specmod::homlem_distance_dense(6, t, 4.0, true));
    }
    checks.push_back(at_most("spectral distance vs dense SVD (L=6)", dense, 1e-8));
  });
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "chern") return verify_chern(options);
  if (name == "gamma") return verify_gamma(options);
  if (name == "tracalc") return verify_tracalc(options);
  if (name == "russo") return verify_russo(options);
  if (name == "trace-formula") return verify_trace_formula(options);
  if (name == "exterior") return verify_exterior(options);
  if (name == "homlem") return verify_homlem(options);
  throw ConfigurationError("unknown verify suite '" + name + "'");
}

}  // namespace holderdeg::verify
