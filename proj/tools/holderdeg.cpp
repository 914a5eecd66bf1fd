// holderdeg: degrees of maps between even spheres, and the checks behind them.
//
// Every command writes one JSON record per line to stdout (each with a "schema"
// field) and a short human summary to stderr.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holderdeg/config.hpp"
#include "holderdeg/constants.hpp"
#include "holderdeg/degree.hpp"
#include "holderdeg/errors.hpp"
#include "holderdeg/geometry.hpp"
#include "holderdeg/maps.hpp"
#include "holderdeg/verify.hpp"

namespace hd = holderdeg;
using json = nlohmann::json;

namespace {

struct Settings {
  std::string map = "identity";
  int n = 1;
  int k = 2;
  int L = 32;
  long long samples = 1'000'000;
  std::uint64_t seed = 1;
  double beta = 0.0;
  int workers = 0;  // 0: hardware concurrency
  int strata = 0;
  double t = 1.0;
  bool drift = false;
  std::string value;
  std::string constants_file;
  std::string methods = "de_rham,preimage_oracle";
  int nodes = 200;
  std::string store;
};

void emit(const json& record) { std::cout << record.dump() << '\n' << std::flush; }

json report_json(const hd::degree::DegreeReport& r) {
  json j = {{"schema", "holderdeg.degree.v1"},
            {"method", hd::degree::to_string(r.method)},
            {"map", r.map},
            {"n", r.n},
            {"estimate", r.estimate},
            {"stderr", r.stderr_},
            {"ci95_half_width", r.ci_half_width},
            {"rounded", r.rounded},
            {"distance_to_integer", r.distance_to_integer},
            {"status", hd::degree::to_string(r.status)},
            {"k", r.k},
            {"alpha", r.alpha},
            {"samples", r.samples},
            {"seed", r.seed},
            {"beta", r.beta},
            {"wall_time", r.wall_time}};
  j["diagnostics"] = r.diagnostics;
  if (!r.oracle_agreement.empty()) j["oracle_agreement"] = r.oracle_agreement;
  return j;
}

void summarize(const hd::degree::DegreeReport& r) {
  std::fprintf(stderr, "%-16s %-22s deg ~ %.4f +- %.4f -> %lld (%s, %.2fs)\n", hd::degree::to_string(r.method).c_str(),
               r.map.c_str(), r.estimate, r.ci_half_width, r.rounded, hd::degree::to_string(r.status).c_str(),
               r.wall_time);
}

hd::quadrature::MCConfig mc_from(const Settings& s) {
  hd::quadrature::MCConfig mc;
  mc.samples = s.samples;
  mc.seed = s.seed;
  mc.importance_exponent = s.beta;
  mc.strata = s.strata;
  mc.workers = s.workers > 0 ? s.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return mc;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw hd::ConfigurationError("cannot read '" + item + "' as a number");
    }
  }
  return out;
}

// n points of S^2 in ambient coordinates (3n numbers) or n chart coordinates (2n numbers).
hd::projections::Tuple parse_value(const std::string& text, int n) {
  const std::vector<double> v = parse_list(text);
  hd::projections::Tuple t(n);
  if (v.size() == static_cast<std::size_t>(3 * n)) {
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd a(3);
      a << v[3 * j], v[3 * j + 1], v[3 * j + 2];
      const double norm = a.norm();
      if (norm == 0.0) throw hd::ConfigurationError("--value: zero vector");
      const auto x = hd::geometry::sphere_to_stereo(hd::geometry::SpherePoint(a / norm));
      t[j] = x.is_infinite() ? hd::projections::ExtendedComplex::infinity()
                             : hd::projections::ExtendedComplex({x.coords()(0), x.coords()(1)});
    }
  } else if (v.size() == static_cast<std::size_t>(2 * n)) {
    for (int j = 0; j < n; ++j) t[j] = hd::projections::Complex(v[2 * j], v[2 * j + 1]);
  } else {
    throw hd::ConfigurationError("--value: expected " + std::to_string(3 * n) + " ambient or " + std::to_string(2 * n) +
                                 " chart coordinates");
  }
  return t;
}

hd::constants::KernelConstants load_constants(const std::string& path, int n) {
  if (path.empty()) return hd::constants::analytic_constants(n);
  std::ifstream in(path);
  if (!in) throw hd::ConfigurationError("cannot open constants file '" + path + "'");
  const json j = json::parse(in);
  hd::constants::KernelConstants c;
  c.n = j.at("n").get<int>();
  c.c_n = j.at("c_n").get<double>();
  c.c_prime = j.at("c_prime").get<double>();
  c.provenance = j.value("provenance", std::string("file ") + path);
  if (c.n != n) throw hd::ConfigurationError("constants file is for n = " + std::to_string(c.n));
  return c;
}

int run_smooth(const Settings& s) {
  const auto fx = hd::maps::make_fixture(s.map);
  if (fx.map.n() != s.n)
    throw hd::ConfigurationError("map '" + s.map + "' has n = " + std::to_string(fx.map.n()) + ", --n says " +
                                 std::to_string(s.n));
  const auto r = hd::degree::smooth_degree(fx.map, mc_from(s));
  emit(report_json(r));
  summarize(r);
  return 0;
}

int run_holder(const Settings& s) {
  const auto fx = hd::maps::make_fixture(s.map);
  const auto c = load_constants(s.constants_file, fx.map.n());
  const auto r = hd::degree::holder_degree(fx.map, s.k, c, mc_from(s));
  json j = report_json(r);
  j["constants"] = {{"c_n", c.c_n}, {"c_prime", c.c_prime}, {"provenance", c.provenance}};
  emit(j);
  summarize(r);
  return 0;
}

int run_oracle(const Settings& s) {
  const auto fx = hd::maps::make_fixture(s.map);
  const int n = fx.map.n();
  const auto value = s.value.empty() ? hd::projections::Tuple(n, hd::projections::Complex(0.37, 0.21))
                                     : parse_value(s.value, n);
  hd::degree::PreimageOptions opt;
  opt.seed = s.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = hd::degree::preimage_oracle(fx.map, value, opt);
  json pre = json::array();
  for (std::size_t i = 0; i < p.preimages.size(); ++i)
    pre.push_back({{"point", std::vector<double>(p.preimages[i].data(), p.preimages[i].data() + p.preimages[i].size())},
                   {"sign", p.signs[i]}});
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit({{"schema", "holderdeg.degree.v1"},
        {"method", "preimage_oracle"},
        {"map", fx.map.label()},
        {"n", n},
        {"estimate", p.degree},
        {"stderr", 0.0},
        {"rounded", p.degree},
        {"status", "ok"},
        {"k", 0},
        {"alpha", fx.map.holder_exponent()},
        {"samples", opt.starts},
        {"seed", opt.seed},
        {"wall_time", wall},
        {"preimages", pre}});
  std::fprintf(stderr, "preimage_oracle  %-22s deg = %d (%zu preimages)\n", fx.map.label().c_str(), p.degree,
               p.preimages.size());
  return 0;
}

int run_consistency(const Settings& s) {
  const auto fx = hd::maps::make_fixture(s.map);
  std::vector<hd::degree::Method> methods;
  std::stringstream ss(s.methods);
  std::string m;
  while (std::getline(ss, m, ',')) methods.push_back(hd::degree::method_from_string(m));
  hd::degree::ConsistencyOptions opt;
  opt.mc = mc_from(s);
  opt.k = s.k;
  opt.L = s.L;
  if (!s.value.empty()) opt.value = parse_value(s.value, fx.map.n());
  const auto rep = hd::degree::degree_consistency(fx, methods, opt);
  for (const auto& r : rep.reports) {
    emit(report_json(r));
    summarize(r);
  }
  emit({{"schema", "holderdeg.consistency.v1"},
        {"map", fx.map.label()},
        {"expected", fx.degree},
        {"consistent", rep.consistent},
        {"summary", rep.summary}});
  std::fprintf(stderr, "%s\n", rep.summary.c_str());
  return rep.consistent ? 0 : 1;
}

int run_pairing(const Settings& s) {
  const auto fx = hd::maps::make_fixture(s.map);
  hd::specmod::PairingOptions opt;
  opt.t = s.t;
  opt.estimate_drift = s.drift;
  const auto r = hd::degree::pairing_degree(fx, s.k, s.L, opt);
  json j = report_json(r);
  j["schema"] = "holderdeg.pairing.v1";
  j["L"] = s.L;
  emit(j);
  summarize(r);
  return 0;
}

int run_verify(const std::string& suite, const Settings& s) {
  hd::verify::VerifyOptions opt;
  opt.seed = s.seed;
  std::vector<std::string> names = suite == "all" ? hd::verify::suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : names) {
    const auto r = hd::verify::run_suite(name, opt);
    for (const auto& c : r.checks) {
      emit({{"schema", "holderdeg.verify.v1"},
            {"suite", r.name},
            {"check", c.name},
            {"passed", c.passed},
            {"value", c.value},
            {"threshold", c.threshold},
            {"detail", c.detail}});
      std::fprintf(stderr, "  [%s] %s: %.3g (limit %.3g) %s\n", c.passed ? "ok" : "FAIL", c.name.c_str(), c.value,
                   c.threshold, c.detail.c_str());
    }
    std::fprintf(stderr, "%s: %s (%.2fs)\n", r.name.c_str(), r.passed() ? "passed" : "FAILED", r.wall_time);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int run_calibrate(const Settings& s) {
  const auto cal = hd::constants::calibrate_constants(s.n, s.nodes);
  const json j = {{"schema", "holderdeg.constants.v1"},
                  {"n", s.n},
                  {"c_n", cal.constants.c_n},
                  {"c_prime", cal.constants.c_prime},
                  {"c_n_closed_form", cal.c_n_analytic},
                  {"c_prime_closed_form", cal.c_prime_analytic},
                  {"c_n_relative_error", cal.c_n_relative_error},
                  {"c_prime_relative_error", cal.c_prime_relative_error},
                  {"nodes", cal.quadrature_nodes},
                  {"provenance", cal.constants.provenance}};
  emit(j);
  if (!s.store.empty()) {
    std::ofstream out(s.store);
    if (!out) throw hd::ConfigurationError("cannot write '" + s.store + "'");
    out << j.dump(2) << '\n';
  }
  std::fprintf(stderr, "n=%d  c_n = %.15g (rel. err %.1e)  c' = %.15g (rel. err %.1e)\n", s.n, cal.constants.c_n,
               cal.c_n_relative_error, cal.constants.c_prime, cal.c_prime_relative_error);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of maps between even-dimensional spheres"};
  app.require_subcommand(1);
  Settings s;
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file; command line flags win")->check(CLI::ExistingFile);

  // Options that may also come from the config file, keyed by their long name.
  struct Configurable {
    CLI::App* owner;
    CLI::Option* option;
    std::function<void(const hd::config::Config&)> apply;
  };
  std::vector<Configurable> configurable;
  auto opt = [&](CLI::App* sub, const std::string& key, auto& field, const std::string& help) {
    CLI::Option* o = sub->add_option("--" + key, field, help)->capture_default_str();
    configurable.push_back({sub, o, [&field, key](const hd::config::Config& c) {
      using T = std::decay_t<decltype(field)>;
      if (!c.contains(key)) return;
      if constexpr (std::is_same_v<T, std::string>) field = *c.get(key);
      else if constexpr (std::is_same_v<T, double>) field = c.get_double(key, field);
      else if constexpr (std::is_same_v<T, std::uint64_t>) field = c.get_uint(key, field);
      else field = static_cast<T>(c.get_int(key, field));
    }});
    return o;
  };

  auto* degree = app.add_subcommand("degree", "estimate a degree")->require_subcommand(1);
  auto* smooth = degree->add_subcommand("smooth", "de Rham pullback of the top Chern form");
  opt(smooth, "map", s.map, "fixture name");
  opt(smooth, "n", s.n, "half the sphere dimension");
  opt(smooth, "samples", s.samples, "Monte Carlo samples");
  opt(smooth, "seed", s.seed, "root seed");
  opt(smooth, "workers", s.workers, "threads (0 = all cores)");

  auto* holder = degree->add_subcommand("holder", "kernel formula valid for Hoelder maps");
  opt(holder, "map", s.map, "fixture name");
  opt(holder, "k", s.k, "order of the formula, k > n/alpha");
  opt(holder, "samples", s.samples, "Monte Carlo samples");
  opt(holder, "beta", s.beta, "near-diagonal proposal exponent, 0 <= beta < 2n");
  opt(holder, "seed", s.seed, "root seed");
  opt(holder, "workers", s.workers, "threads (0 = all cores)");
  opt(holder, "strata", s.strata, "height strata of the first point (n = 1)");
  opt(holder, "constants", s.constants_file, "constants written by `calibrate constants --store`");

  auto* oracle = degree->add_subcommand("oracle", "signed preimage count");
  opt(oracle, "map", s.map, "fixture name");
  opt(oracle, "value", s.value, "regular value: x,y,z on S^2 per factor, or re,im chart coordinates");
  opt(oracle, "seed", s.seed, "seed for the Newton starts");

  auto* consistency = degree->add_subcommand("consistency", "compare several methods on one map");
  opt(consistency, "map", s.map, "fixture name");
  opt(consistency, "methods", s.methods, "comma list of de_rham, holder_kernel, connes_pairing, preimage_oracle");
  opt(consistency, "k", s.k, "order for holder_kernel and connes_pairing");
  opt(consistency, "L", s.L, "truncation for connes_pairing");
  opt(consistency, "samples", s.samples, "Monte Carlo samples");
  opt(consistency, "beta", s.beta, "near-diagonal proposal exponent");
  opt(consistency, "seed", s.seed, "root seed");
  opt(consistency, "workers", s.workers, "threads (0 = all cores)");
  opt(consistency, "value", s.value, "regular value for preimage_oracle");

  auto* pairing = app.add_subcommand("pairing", "index pairing on the spectral S^2 module");
  opt(pairing, "map", s.map, "fixture name (n = 1)");
  opt(pairing, "k", s.k, "order of the pairing");
  opt(pairing, "L", s.L, "harmonic truncation degree");
  opt(pairing, "t", s.t, "scale of the signature operator");
  pairing->add_flag("--drift", s.drift, "also compute at L/2 and report the drift");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a property suite; exits nonzero on failure");
  verify->add_option("suite", suite, "chern|gamma|tracalc|russo|trace-formula|exterior|homlem|all")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = hd::verify::suite_names();
        names.push_back("all");
        return names;
      }()));
  opt(verify, "seed", s.seed, "seed for random inputs");

  auto* calibrate = app.add_subcommand("calibrate", "recompute normalizing constants")->require_subcommand(1);
  auto* constants = calibrate->add_subcommand("constants", "c_n and c'_n by quadrature");
  opt(constants, "n", s.n, "half the sphere dimension");
  opt(constants, "nodes", s.nodes, "Gauss-Legendre nodes");
  opt(constants, "store", s.store, "write the constants to this JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      const auto cfg = hd::config::Config::load(config_path);
      for (const auto& c : configurable)
        if (c.owner->parsed() && c.option->count() == 0) c.apply(cfg);
    }
    if (smooth->parsed()) return run_smooth(s);
    if (holder->parsed()) return run_holder(s);
    if (oracle->parsed()) return run_oracle(s);
    if (consistency->parsed()) return run_consistency(s);
    if (pairing->parsed()) return run_pairing(s);
    if (verify->parsed()) return run_verify(suite, s);
    if (constants->parsed()) return run_calibrate(s);
  } catch (const hd::Error& e) {
    emit({{"schema", "holderdeg.error.v1"}, {"error", e.what()}});
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
