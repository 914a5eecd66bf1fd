#include "holderdeg/maps.hpp"

#include <cmath>
#include <sstream>

#include "holderdeg/errors.hpp"

namespace holderdeg::maps {

using geometry::ChartPoint;
using projections::Complex;
using projections::ExtendedComplex;
using projections::Tuple;

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::smooth:
      return "smooth";
    case Smoothness::lipschitz:
      return "lipschitz";
    case Smoothness::holder:
      return "holder";
  }
  return "unknown";
}

SampledMap::SampledMap(std::string label, int n, double holder_exponent, Evaluator evaluator)
    : label_(std::move(label)), n_(n), alpha_(holder_exponent), evaluator_(std::move(evaluator)) {
  require(n >= 1, "SampledMap: n must be positive");
  require(holder_exponent > 0.0 && holder_exponent <= 1.0, "SampledMap: Holder exponent must lie in (0, 1]");
  require(static_cast<bool>(evaluator_), "SampledMap: empty evaluator");
}

Tuple SampledMap::operator()(const ChartPoint& x) const {
  require(x.dim() == 2 * n_, "SampledMap: source point has the wrong dimension");
  Tuple t = evaluator_(x);
  require(t.size() == static_cast<std::size_t>(n_), "SampledMap: evaluator returned the wrong tuple size");
  return t;
}

namespace {

Complex as_complex(const ChartPoint& x) { return {x.coords()(0), x.coords()(1)}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigurationError("fixture: cannot parse " + what + " from '" + s + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  const double v = parse_double(s, what);
  if (v != std::floor(v)) throw ConfigurationError("fixture: " + what + " must be an integer");
  return static_cast<int>(v);
}

Complex ipow(Complex z, int d) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < d; ++i) r *= z;
  return r;
}

ExtendedComplex zpow(const ChartPoint& x, int d) {
  if (d == 0) return Complex(1.0, 0.0);
  if (x.is_infinite()) return ExtendedComplex::infinity();
  const Complex z = as_complex(x);
  return d > 0 ? ipow(z, d) : ipow(std::conj(z), -d);
}

Fixture n1_fixture(std::string label, double alpha, int degree, Smoothness s, std::optional<int> charge,
                   std::string description, std::function<ExtendedComplex(const ChartPoint&)> f) {
  SampledMap m(std::move(label), 1, alpha, [f = std::move(f)](const ChartPoint& x) { return Tuple{f(x)}; });
  return Fixture{std::move(m), degree, s, charge, std::move(description)};
}

}  // namespace

Fixture make_fixture(const std::string& name) {
  const std::vector<std::string> parts = split(name, ':');
  if (parts.empty()) throw ConfigurationError("fixture: empty name");
  const std::string& head = parts[0];

  if (head == "identity" && parts.size() == 1)
    return n1_fixture(name, 1.0, 1, Smoothness::smooth, 1, "z -> z",
                      [](const ChartPoint& x) -> ExtendedComplex {
                        if (x.is_infinite()) return ExtendedComplex::infinity();
                        return as_complex(x);
                      });

  if (head == "antipodal" && parts.size() == 1)
    return n1_fixture(name, 1.0, -1, Smoothness::smooth, 1, "z -> -1/conj(z)",
                      [](const ChartPoint& x) -> ExtendedComplex {
                        if (x.is_infinite()) return Complex(0.0, 0.0);
                        const Complex z = as_complex(x);
                        if (z == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
                        return -1.0 / std::conj(z);
                      });

  if (head == "const" && parts.size() == 1)
    return n1_fixture(name, 1.0, 0, Smoothness::smooth, std::nullopt, "z -> 0.3 + 0.1i",
                      [](const ChartPoint&) -> ExtendedComplex { return Complex(0.3, 0.1); });

  if (head == "perturbed_identity" && parts.size() == 1)
    return n1_fixture(name, 1.0, 1, Smoothness::smooth, std::nullopt, "z -> z + 0.25/(1 + |z|^2)",
                      [](const ChartPoint& x) -> ExtendedComplex {
                        if (x.is_infinite()) return ExtendedComplex::infinity();
                        const Complex z = as_complex(x);
                        return z + 0.25 / (1.0 + std::norm(z));
                      });

  if (head == "zpow" && parts.size() == 2) {
    const int d = parse_int(parts[1], "power");
    const std::string desc = d >= 0 ? "z -> z^" + std::to_string(d) : "z -> conj(z)^" + std::to_string(-d);
    return n1_fixture(name, 1.0, d, Smoothness::smooth, d, desc,
                      [d](const ChartPoint& x) { return zpow(x, d); });
  }

  if (head == "snowflake" && parts.size() <= 3) {
    const double beta = parts.size() >= 2 ? parse_double(parts[1], "exponent") : 0.6;
    const int d = parts.size() >= 3 ? parse_int(parts[2], "power") : 2;
    require(beta > 0.0 && beta <= 1.0, "snowflake: exponent must lie in (0, 1]");
    require(d >= 1, "snowflake: power must be positive");
    // w |-> w |w|^{beta-1} is Holder-beta at 0 and (in the chart 1/w) at infinity.
    return n1_fixture(name, beta, d, beta < 1.0 ? Smoothness::holder : Smoothness::smooth, d,
                      "z -> (z |z|^{beta-1})^d",
                      [beta, d](const ChartPoint& x) -> ExtendedComplex {
                        if (x.is_infinite()) return ExtendedComplex::infinity();
                        const Complex z = as_complex(x);
                        const double r = std::abs(z);
                        if (r == 0.0) return Complex(0.0, 0.0);
                        return ipow(z * std::pow(r, beta - 1.0), d);
                      });
  }

  if (head == "ball_identity" && parts.size() <= 3) {
    const int n = parts.size() >= 2 ? parse_int(parts[1], "n") : 1;
    const double radius = parts.size() >= 3 ? parse_double(parts[2], "radius") : 1.0;
    projections::BallChart chart(n, radius);
    SampledMap m(name, n, 1.0, [chart](const ChartPoint& x) { return chart.nu_tilde(x); });
    return Fixture{std::move(m), 1, Smoothness::lipschitz, n == 1 ? std::optional<int>(1) : std::nullopt,
                   "identity composed with the ball-chart extension nu~"};
  }

  throw ConfigurationError("fixture: unknown map '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"identity",  "antipodal",   "const",         "perturbed_identity", "zpow:-2",       "zpow:-1",
          "zpow:0",    "zpow:2",      "zpow:3",        "snowflake:0.6:2",    "snowflake:0.6:1", "ball_identity:1",
          "ball_identity:2"};
}

}  // namespace holderdeg::maps
