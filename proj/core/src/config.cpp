#include "holderdeg/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "holderdeg/errors.hpp"

namespace holderdeg::config {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ConfigurationError("config: '" + key + "' expects a number, got '" + text + "'");
  return value;
}

}  // namespace

Config Config::parse(std::istream& in, const std::string& source) {
  Config c;
  c.source_ = source;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(number);
    if (eq == std::string::npos) throw ConfigurationError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw ConfigurationError(where + ": empty key");
    if (c.values_.count(key)) throw ConfigurationError(where + ": duplicate key '" + key + "'");
    c.values_[key] = value;
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("config: cannot open '" + path + "'");
  return parse(in, path);
}

std::optional<std::string> Config::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? parse_number<double>(key, *v) : fallback;
}

long long Config::get_int(const std::string& key, long long fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  // allow 1e6-style budgets
  const double d = parse_number<double>(key, *v);
  if (d != static_cast<double>(static_cast<long long>(d)))
    throw ConfigurationError("config: '" + key + "' expects an integer, got '" + *v + "'");
  return static_cast<long long>(d);
}

std::uint64_t Config::get_uint(const std::string& key, std::uint64_t fallback) const {
  const auto v = get(key);
  return v ? parse_number<std::uint64_t>(key, *v) : fallback;
}

quadrature::MCConfig mc_config(const Config& c, quadrature::MCConfig base) {
  base.samples = c.get_int("samples", base.samples);
  base.seed = c.get_uint("seed", base.seed);
  base.workers = static_cast<int>(c.get_int("workers", base.workers));
  base.importance_exponent = c.get_double("beta", base.importance_exponent);
  base.strata = static_cast<int>(c.get_int("strata", base.strata));
  base.chunk_size = c.get_int("chunk_size", base.chunk_size);
  return base;
}

}  // namespace holderdeg::config
