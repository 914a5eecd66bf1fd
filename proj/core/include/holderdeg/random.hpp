#pragma once

#include <cstdint>
#include <random>

namespace holderdeg {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for stream `stream` of a computation rooted at `root_seed`.
///
/// Streams are addressed by a counter, so the sample assigned to a given chunk
/// does not depend on how chunks are distributed over worker threads.
std::uint64_t stream_seed(std::uint64_t root_seed, std::uint64_t stream) noexcept;

/// Random engine owned by exactly one worker.
class StreamRng {
 public:
  StreamRng(std::uint64_t root_seed, std::uint64_t stream);
  explicit StreamRng(std::uint64_t seed);

  double uniform();          // [0, 1)
  double uniform_open();     // (0, 1)
  double normal();
  std::uint64_t below(std::uint64_t bound);  // [0, bound)

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace holderdeg
