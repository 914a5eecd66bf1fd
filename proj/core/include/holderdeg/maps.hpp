#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holderdeg/geometry.hpp"
#include "holderdeg/projections.hpp"

/// Maps S^{2n} -> target, sampled through charts, and the registry of test fixtures.
namespace holderdeg::maps {

enum class Smoothness { smooth, lipschitz, holder };

std::string to_string(Smoothness s);

/// x in the source stereographic chart |-> the n target coordinates fed to p_T.
/// For n = 1 the target coordinate is the stereographic coordinate of the target S^2.
class SampledMap {
 public:
  using Evaluator = std::function<projections::Tuple(const geometry::ChartPoint&)>;

  SampledMap(std::string label, int n, double holder_exponent, Evaluator evaluator);

  const std::string& label() const noexcept { return label_; }
  int n() const noexcept { return n_; }
  double holder_exponent() const noexcept { return alpha_; }

  projections::Tuple operator()(const geometry::ChartPoint& x) const;

 private:
  std::string label_;
  int n_;
  double alpha_;
  Evaluator evaluator_;
};

struct Fixture {
  SampledMap map;
  int degree;
  Smoothness smoothness;
  /// d when f(e^{i phi} z) = e^{i d phi} f(z) (n = 1 only).
  std::optional<int> charge;
  std::string description;
};

/// Builds a fixture from a name such as
///   identity, antipodal, const, perturbed_identity, zpow:D,
///   snowflake[:BETA[:D]], ball_identity[:N[:RADIUS]].
/// zpow with D < 0 is realized as conj(z)^{|D|}, which has degree D.
Fixture make_fixture(const std::string& name);

/// Names accepted by make_fixture, with default parameters.
std::vector<std::string> fixture_names();

}  // namespace holderdeg::maps
