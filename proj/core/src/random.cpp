#include "holderdeg/random.hpp"

namespace holderdeg {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t root_seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(root_seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

StreamRng::StreamRng(std::uint64_t root_seed, std::uint64_t stream)
    : engine_(stream_seed(root_seed, stream)) {}

StreamRng::StreamRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double StreamRng::uniform() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StreamRng::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double StreamRng::normal() { return normal_(engine_); }

std::uint64_t StreamRng::below(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

}  // namespace holderdeg
