#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "holderdeg/quadrature.hpp"

/// Flat `key = value` run configuration. `#` starts a comment; blank lines are ignored.
namespace holderdeg::config {

class Config {
 public:
  /// Throws ConfigurationError on malformed lines or repeated keys.
  static Config parse(std::istream& in, const std::string& source = "<config>");
  static Config load(const std::string& path);

  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
  const std::map<std::string, std::string>& entries() const noexcept { return values_; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

 private:
  std::string source_;
  std::map<std::string, std::string> values_;
};

/// Reads samples, seed, workers, beta, strata, chunk_size on top of `base`.
quadrature::MCConfig mc_config(const Config& c, quadrature::MCConfig base = {});

}  // namespace holderdeg::config
