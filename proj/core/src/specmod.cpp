#include "holderdeg/specmod.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "holderdeg/errors.hpp"
#include "holderdeg/projections.hpp"

namespace holderdeg::specmod {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Visits each (l, m) group: a pair (Y, F) for l = 0, otherwise (Y, E, C, F).
template <class Fn>
void for_each_group(const FormBasis& b, Fn&& fn) {
  for (int i = 0; i < b.size();) {
    const int size = b[i].l == 0 ? 2 : 4;
    fn(i, b[i].l, size);
    i += size;
  }
}

double eigen_lambda(int l) { return static_cast<double>(l) * (l + 1); }

}  // namespace

FormBasis FormBasis::for_modes(std::span<const int> modes, int L) {
  require(L >= 0, "FormBasis: L must be non-negative");
  FormBasis b;
  b.L_ = L;
  for (int m : modes) {
    require(std::abs(m) <= L, "FormBasis: |m| must not exceed L");
    for (int l = std::abs(m); l <= L; ++l) {
      b.elements_.push_back({FormType::function, l, m});
      if (l > 0) {
        b.elements_.push_back({FormType::exact, l, m});
        b.elements_.push_back({FormType::coexact, l, m});
      }
      b.elements_.push_back({FormType::area, l, m});
    }
  }
  return b;
}

FormBasis FormBasis::for_mode(int m, int L) {
  const int modes[1] = {m};
  return for_modes(modes, L);
}

FormBasis FormBasis::full(int L) {
  std::vector<int> modes;
  for (int m = -L; m <= L; ++m) modes.push_back(m);
  return for_modes(modes, L);
}

Eigen::MatrixXd signature_operator(const FormBasis& b) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(b.size(), b.size());
  for_each_group(b, [&](int i, int l, int size) {
    if (size == 2) return;
    const double s = std::sqrt(eigen_lambda(l));
    D(i, i + 1) = D(i + 1, i) = s;
    D(i + 2, i + 3) = D(i + 3, i + 2) = -s;
  });
  return D;
}

Eigen::MatrixXcd grading(const FormBasis& b) {
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(b.size(), b.size());
  const Complex I(0.0, 1.0);
  for_each_group(b, [&](int i, int, int size) {
    const int f = i + size - 1;
    T(f, i) = I;
    T(i, f) = -I;
    if (size == 4) {
      T(i + 2, i + 1) = I;
      T(i + 1, i + 2) = -I;
    }
  });
  return T;
}

Eigen::MatrixXd bounded_transform(const FormBasis& b, double t) {
  Eigen::MatrixXd F = signature_operator(b);
  for_each_group(b, [&](int i, int l, int size) {
    F.block(i, i, size, size) *= t / std::sqrt(1.0 + t * t * eigen_lambda(l));
  });
  return F;
}

Eigen::MatrixXd resolvent_root(const FormBasis& b, double t) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(b.size(), b.size());
  for_each_group(b, [&](int i, int l, int size) {
    const double v = 1.0 / std::sqrt(1.0 + t * t * eigen_lambda(l));
    for (int j = 0; j < size; ++j) S(i + j, i + j) = v;
  });
  return S;
}

Eigen::MatrixXd kernel_projection(const FormBasis& b) {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(b.size(), b.size());
  for_each_group(b, [&](int i, int l, int size) {
    if (l == 0)
      for (int j = 0; j < size; ++j) W(i + j, i + j) = 1.0;
  });
  return W;
}

Eigen::MatrixXd sign_operator(const FormBasis& b) {
  Eigen::MatrixXd F = signature_operator(b);
  for_each_group(b, [&](int i, int l, int size) {
    if (l == 0) {
      F.block(i, i, size, size).setIdentity();
    } else {
      F.block(i, i, size, size) /= std::sqrt(eigen_lambda(l));
    }
  });
  return F;
}

SignatureModule build_signature_module(int L, double t) {
  require(L >= 2, "build_signature_module: L must be at least 2");
  require(t > 0.0, "build_signature_module: t must be positive");
  SignatureModule mod;
  mod.L = L;
  mod.t = t;
  mod.basis = FormBasis::full(L);
  const int N = mod.basis.size();
  mod.A = signature_operator(mod.basis);
  mod.grading = grading(mod.basis);
  const Eigen::MatrixXd F = bounded_transform(mod.basis, t);
  const Eigen::MatrixXd S = resolvent_root(mod.basis, t);
  const Eigen::MatrixXd W0 = kernel_projection(mod.basis);
  mod.F_tilde.resize(2 * N, 2 * N);
  mod.F_tilde << F, S, S, -F;
  mod.W = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  mod.W.topRightCorner(N, N) = W0;
  mod.W.bottomLeftCorner(N, N) = W0;
  mod.grading_tilde = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  mod.grading_tilde.topLeftCorner(N, N) = mod.grading;
  mod.grading_tilde.bottomRightCorner(N, N) = -mod.grading;
  return mod;
}

namespace {

struct ModeTables {
  int m = 0;
  Eigen::MatrixXd scalar;   // nodes x (#l), Pbar_l
  Eigen::MatrixXcd theta;   // nodes x (#1-form elements), d theta component
  Eigen::MatrixXcd phi;     // nodes x (#1-form elements), sin(theta) d phi component
  std::vector<int> scalar_col;  // per basis element: column in `scalar` or -1
  std::vector<int> form_col;    // per basis element: column in theta/phi or -1
};

ModeTables mode_tables(const FormBasis& b, const sph::ThetaRule& rule) {
  ModeTables t;
  if (b.size() == 0) return t;
  t.m = b[0].m;
  const int am = std::abs(t.m);
  const sph::LegendreTable leg = sph::normalized_legendre(t.m, b.L(), rule.theta);
  const int nodes = static_cast<int>(rule.theta.size());
  t.scalar = leg.value;
  int forms = 0;
  for (const auto& e : b.elements()) {
    require(e.m == t.m, "multiplication_block: basis must hold a single mode");
    if (e.type == FormType::exact || e.type == FormType::coexact) ++forms;
  }
  t.theta.resize(nodes, forms);
  t.phi.resize(nodes, forms);
  int col = 0;
  const Complex I(0.0, 1.0);
  for (const auto& e : b.elements()) {
    const int j = e.l - am;
    if (e.type == FormType::function || e.type == FormType::area) {
      t.scalar_col.push_back(j);
      t.form_col.push_back(-1);
      continue;
    }
    const double norm = 1.0 / std::sqrt(eigen_lambda(e.l));
    for (int i = 0; i < nodes; ++i) {
      const double dtheta = leg.dtheta(i, j) * norm;
      const Complex dphi = I * static_cast<double>(t.m) * leg.value(i, j) / std::sin(rule.theta[i]) * norm;
      if (e.type == FormType::exact) {
        t.theta(i, col) = dtheta;
        t.phi(i, col) = dphi;
      } else {
        t.theta(i, col) = -dphi;
        t.phi(i, col) = dtheta;
      }
    }
    t.scalar_col.push_back(-1);
    t.form_col.push_back(col++);
  }
  return t;
}

Eigen::MatrixXcd assemble_block(std::span<const Complex> profile, const FormBasis& out, const ModeTables& to,
                                const FormBasis& in, const ModeTables& ti, const sph::ThetaRule& rule) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(out.size(), in.size());
  if (out.size() == 0 || in.size() == 0) return M;
  const int nodes = static_cast<int>(rule.theta.size());
  Eigen::VectorXcd wa(nodes);
  for (int i = 0; i < nodes; ++i) wa(i) = two_pi * rule.weight[i] * profile[i];
  const Eigen::MatrixXcd scalar =
      to.scalar.cast<Complex>().transpose() * wa.asDiagonal() * ti.scalar.cast<Complex>();
  const Eigen::MatrixXcd forms =
      to.theta.adjoint() * wa.asDiagonal() * ti.theta + to.phi.adjoint() * wa.asDiagonal() * ti.phi;
  for (int r = 0; r < out.size(); ++r) {
    for (int c = 0; c < in.size(); ++c) {
      const FormType a = out[r].type, b = in[c].type;
      if (to.scalar_col[r] >= 0 && ti.scalar_col[c] >= 0) {
        if (a == b) M(r, c) = scalar(to.scalar_col[r], ti.scalar_col[c]);
      } else if (to.form_col[r] >= 0 && ti.form_col[c] >= 0) {
        M(r, c) = forms(to.form_col[r], ti.form_col[c]);
      }
    }
  }
  return M;
}

}  // namespace

Eigen::MatrixXcd multiplication_block(std::span<const Complex> profile, const FormBasis& out, const FormBasis& in,
                                      const sph::ThetaRule& rule) {
  require(profile.size() == rule.theta.size(), "multiplication_block: profile must be sampled at the rule nodes");
  const ModeTables to = mode_tables(out, rule);
  const ModeTables ti = mode_tables(in, rule);
  return assemble_block(profile, out, to, in, ti, rule);
}

Eigen::MatrixXcd multiplication_operator(const std::function<Complex(double, double)>& a, int L,
                                         const sph::ThetaRule& rule, int phi_nodes) {
  require(L >= 0, "multiplication_operator: L must be non-negative");
  const int nphi = phi_nodes > 0 ? phi_nodes : std::max(64, 4 * L + 4);
  const int nodes = static_cast<int>(rule.theta.size());
  const int jmax = 2 * L;
  // a_j(theta_i) = (1/N) sum_k a(theta_i, phi_k) e^{-i j phi_k}
  std::vector<std::vector<Complex>> modes(2 * jmax + 1, std::vector<Complex>(nodes));
  std::vector<Complex> samples(nphi);
  for (int i = 0; i < nodes; ++i) {
    for (int k = 0; k < nphi; ++k) samples[k] = a(rule.theta[i], two_pi * k / nphi);
    for (int j = -jmax; j <= jmax; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < nphi; ++k) s += samples[k] * std::polar(1.0, -two_pi * j * k / nphi);
      modes[j + jmax][i] = s / static_cast<double>(nphi);
    }
  }
  std::vector<FormBasis> bases;
  std::vector<ModeTables> tables;
  std::vector<int> offset;
  int total = 0;
  for (int m = -L; m <= L; ++m) {
    bases.push_back(FormBasis::for_mode(m, L));
    tables.push_back(mode_tables(bases.back(), rule));
    offset.push_back(total);
    total += bases.back().size();
  }
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(total, total);
  for (int mo = -L; mo <= L; ++mo)
    for (int mi = -L; mi <= L; ++mi) {
      const int io = mo + L, ii = mi + L;
      M.block(offset[io], offset[ii], bases[io].size(), bases[ii].size()) =
          assemble_block(modes[mo - mi + jmax], bases[io], tables[io], bases[ii], tables[ii], rule);
    }
  return M;
}

ProjectionField projection_field(const maps::SampledMap& f, std::optional<int> charge) {
  require(f.n() == 1, "projection_field: only maps into S^2 are supported");
  ProjectionField field;
  field.label = f.label();
  field.charge = charge;
  field.p = [f](double theta, double phi) -> Eigen::Matrix2cd {
    const geometry::ChartPoint x = theta >= std::numbers::pi
                                       ? geometry::ChartPoint::infinity(2)
                                       : geometry::ChartPoint(Eigen::Vector2d(std::tan(0.5 * theta) * std::cos(phi),
                                                                              std::tan(0.5 * theta) * std::sin(phi)));
    return projections::p0(f(x)[0]).matrix();
  };
  return field;
}

ProjectionField constant_projection(const Eigen::Matrix2cd& p, std::string label) {
  projections::HermitianProjection check(p, 1e-10);
  (void)check;
  ProjectionField field;
  field.label = std::move(label);
  field.charge = 0;
  field.p = [p](double, double) -> Eigen::Matrix2cd { return p; };
  // A constant field is equivariant only when it is diagonal.
  if (std::abs(p(0, 1)) > 0.0) field.charge.reset();
  return field;
}

namespace {

struct ComponentOps {
  Eigen::MatrixXd F;
  Eigen::MatrixXd S;
  Eigen::MatrixXcd tau;
};

ComponentOps component_ops(const FormBasis& b1, const FormBasis& b2, double t) {
  const int n1 = b1.size(), n2 = b2.size();
  ComponentOps ops;
  ops.F = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  ops.S = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
  ops.tau = Eigen::MatrixXcd::Zero(n1 + n2, n1 + n2);
  ops.F.topLeftCorner(n1, n1) = bounded_transform(b1, t);
  ops.F.bottomRightCorner(n2, n2) = bounded_transform(b2, t);
  ops.S.topLeftCorner(n1, n1) = resolvent_root(b1, t);
  ops.S.bottomRightCorner(n2, n2) = resolvent_root(b2, t);
  ops.tau.topLeftCorner(n1, n1) = grading(b1);
  ops.tau.bottomRightCorner(n2, n2) = grading(b2);
  return ops;
}

// tr(tau P (C^{2k})_{11}) with C = [[ [F, P], -i P S ], [ -i S P, 0 ]] = [F~, P (+) 0].
Complex block_contribution(const Eigen::MatrixXcd& P, const ComponentOps& ops, int k) {
  const Eigen::Index N = P.rows();
  if (N == 0) return {0.0, 0.0};
  const Complex I(0.0, 1.0);
  const Eigen::MatrixXcd F = ops.F.cast<Complex>();
  const Eigen::MatrixXcd S = ops.S.cast<Complex>();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
  C.topLeftCorner(N, N) = F * P - P * F;
  C.topRightCorner(N, N) = -I * P * S;
  C.bottomLeftCorner(N, N) = -I * S * P;
  const Eigen::MatrixXcd C2 = C * C;
  Eigen::MatrixXcd power = C2;
  for (int i = 1; i < k; ++i) power = power * C2;
  return (ops.tau * P * power.topLeftCorner(N, N)).trace();
}

Complex sign_power(int k) { return (k % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0); }

PairingResult pairing_once(const ProjectionField& field, int k, int L, const PairingOptions& options) {
  const int nodes = options.theta_nodes > 0 ? options.theta_nodes : 4 * L + 96;
  const sph::ThetaRule rule = sph::theta_rule(nodes, options.grading);
  PairingResult out;
  out.L = L;
  out.k = k;
  out.t = options.t;
  Complex total(0.0, 0.0);
  double defect_sq = 0.0, dim = 0.0;

  // Reject fields that are not pointwise projections; the compression itself is
  // never exactly idempotent near the truncation edge.
  double field_defect = 0.0;
  for (int i = 0; i < nodes; i += std::max(1, nodes / 16))
    for (double phi : {0.0, 1.7, 3.9}) {
      const Eigen::Matrix2cd p = field.p(rule.theta[i], phi);
      field_defect = std::max({field_defect, projections::max_entry(p * p - p), projections::max_entry(p - p.adjoint())});
    }
  if (field_defect > 0.1)
    throw PreconditionError("connes_pairing: field '" + field.label + "' is not a projection (defect " +
                            std::to_string(field_defect) + ")");

  if (field.charge && !options.force_dense) {
    const int d = *field.charge;
    out.path = "block";
    std::vector<Complex> prof[2][2];
    for (auto& row : prof)
      for (auto& v : row) v.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
      const Eigen::Matrix2cd p = field.p(rule.theta[i], 0.0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) prof[a][b][i] = p(a, b);
    }
    // The block decomposition is only valid for equivariant fields; spot-check it.
    for (double theta : {0.37, 1.3, 2.6})
      for (double phi : {0.4, 2.2, 4.9}) {
        const Eigen::Matrix2cd p = field.p(theta, phi);
        const Eigen::Matrix2cd p0 = field.p(theta, 0.0);
        const Complex e = std::polar(1.0, d * phi);
        const double err = std::max({std::abs(p(0, 0) - p0(0, 0)), std::abs(p(1, 1) - p0(1, 1)),
                                     std::abs(p(0, 1) - p0(0, 1) * e), std::abs(p(1, 0) - p0(1, 0) * std::conj(e))});
        if (err > 1e-9) throw PreconditionError("connes_pairing: field '" + field.label + "' is not equivariant with charge " +
                                                std::to_string(d));
      }
    const int jlo = std::min(-L, -L + d), jhi = std::max(L, L + d);
    for (int J = jlo; J <= jhi; ++J) {
      const int m1 = J, m2 = J - d;
      const std::vector<int> modes1 = std::abs(m1) <= L ? std::vector<int>{m1} : std::vector<int>{};
      const std::vector<int> modes2 = std::abs(m2) <= L ? std::vector<int>{m2} : std::vector<int>{};
      const FormBasis b1 = FormBasis::for_modes(modes1, L);
      const FormBasis b2 = FormBasis::for_modes(modes2, L);
      const ModeTables t1 = mode_tables(b1, rule), t2 = mode_tables(b2, rule);
      const int n1 = b1.size(), n2 = b2.size();
      Eigen::MatrixXcd P(n1 + n2, n1 + n2);
      P.topLeftCorner(n1, n1) = assemble_block(prof[0][0], b1, t1, b1, t1, rule);
      P.topRightCorner(n1, n2) = assemble_block(prof[0][1], b1, t1, b2, t2, rule);
      P.bottomLeftCorner(n2, n1) = assemble_block(prof[1][0], b2, t2, b1, t1, rule);
      P.bottomRightCorner(n2, n2) = assemble_block(prof[1][1], b2, t2, b2, t2, rule);
      if (P.size() > 0) {
        defect_sq += (P * P - P).squaredNorm();
        dim += static_cast<double>(P.rows());
      }
      total += block_contribution(P, component_ops(b1, b2, options.t), k);
    }
  } else {
    out.path = "dense";
    Eigen::MatrixXcd blocks[2][2];
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        blocks[a][b] = multiplication_operator([&](double th, double ph) { return field.p(th, ph)(a, b); }, L, rule);
    const Eigen::Index N = blocks[0][0].rows();
    Eigen::MatrixXcd P(2 * N, 2 * N);
    P << blocks[0][0], blocks[0][1], blocks[1][0], blocks[1][1];
    defect_sq = (P * P - P).squaredNorm();
    dim = static_cast<double>(P.rows());
    const FormBasis b = FormBasis::full(L);
    total = block_contribution(P, component_ops(b, b, options.t), k);
  }
  total *= sign_power(k);
  out.value = total.real();
  out.imaginary = total.imag();
  out.normalized_degree = out.value / -2.0;
  out.projection_defect = dim > 0.0 ? std::sqrt(defect_sq / dim) : 0.0;
  return out;
}

}  // namespace

PairingResult connes_pairing(const ProjectionField& p, int k, int L, const PairingOptions& options) {
  require(k >= 1, "connes_pairing: k must be positive");
  require(L >= 2, "connes_pairing: L must be at least 2");
  require(options.t > 0.0, "connes_pairing: t must be positive");
  PairingResult r = pairing_once(p, k, L, options);
  if (options.estimate_drift) {
    const PairingResult half = pairing_once(p, k, std::max(2, L / 2), options);
    r.drift = r.value - half.value;
  }
  return r;
}

HomlemResult homlem_decay(std::span<const double> t_grid, int L, double q, bool include_W) {
  require(t_grid.size() >= 2, "homlem_decay: need at least two values of t");
  require(L >= 1 && q >= 1.0, "homlem_decay: need L >= 1 and q >= 1");
  require(t_grid.back() / t_grid.front() >= 100.0 * (1.0 - 1e-12), "homlem_decay: t grid must span at least two decades");
  HomlemResult r;
  for (double t : t_grid) {
    require(t > 0.0, "homlem_decay: t must be positive");
    // Each eigenvector of D with eigenvalue mu != 0 contributes the 2x2 block
    // [[a, b], [b, -a]], a = phi(t mu) - sign(mu), b = (1 + t^2 mu^2)^{-1/2}.
    double sum = include_W ? 0.0 : 2.0 * 2.0;  // kernel: b = 1 when W is left out
    for (int l = 1; l <= L; ++l) {
      const double lam = eigen_lambda(l);
      const double mu = std::sqrt(lam);
      const double a = t * mu / std::sqrt(1.0 + t * t * lam) - 1.0;
      const double b = 1.0 / std::sqrt(1.0 + t * t * lam);
      sum += 4.0 * (2 * l + 1) * 2.0 * std::pow(a * a + b * b, 0.5 * q);
    }
    r.t.push_back(t);
    r.distance.push_back(std::pow(sum, 1.0 / q));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(r.t.size());
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    const double x = std::log(r.t[i]), y = std::log(r.distance[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return r;
}

double homlem_distance_dense(int L, double t, double q, bool include_W) {
  const SignatureModule mod = build_signature_module(L, t);
  const int N = mod.basis.size();
  Eigen::MatrixXd sign = signature_operator(mod.basis);
  const Eigen::MatrixXd W0 = kernel_projection(mod.basis);
  for_each_group(mod.basis, [&](int i, int l, int size) {
    if (l > 0) sign.block(i, i, size, size) /= std::sqrt(eigen_lambda(l));
  });
  Eigen::MatrixXd limit = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  limit.topLeftCorner(N, N) = sign;
  limit.bottomRightCorner(N, N) = -sign;
  Eigen::MatrixXd diff = mod.F_tilde - limit;
  if (include_W) diff -= mod.W;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(diff).singularValues();
  return std::pow(sv.array().pow(q).sum(), 1.0 / q);
}

}  // namespace holderdeg::specmod
