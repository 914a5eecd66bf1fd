#pragma once

#include <complex>
#include <cstdint>
#include <vector>

/// The index sets Gamma_k: words over {1,2,3,4} of length 2k recording which
/// kernel (singular 1/2, harmonic 3/4) sits in each slot of the expanded supertrace.
namespace holderdeg::gamma {

class GammaSequence {
 public:
  /// Throws PreconditionError unless `entries` satisfies the Gamma_k conditions.
  GammaSequence(int k, std::vector<int> entries);

  int k() const noexcept { return k_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](std::size_t l) const { return entries_[l]; }

  /// Number of 3s (equivalently of (3,4) blocks).
  int weight() const noexcept { return weight_; }

  /// Lambda(I) = (i_1, ..., i_2k), 1-based; raw values, so i_2k may equal 2k+1.
  std::vector<int> index_map_raw() const;
  /// Lambda(I) with 2k+1 identified with 1, as 0-based point indices.
  std::vector<int> index_map() const;

  /// (-1)^{sum(i_l - l)} i^{w(I)}.
  std::complex<double> iota() const;

  /// Bit l set when slot l (0-based) holds a 3. Kernels depend on I only through this.
  std::uint32_t block_pattern() const noexcept { return pattern_; }

  friend bool operator==(const GammaSequence&, const GammaSequence&) = default;

 private:
  int k_;
  std::vector<int> entries_;
  int weight_ = 0;
  std::uint32_t pattern_ = 0;
};

bool satisfies_gamma_conditions(const std::vector<int>& entries);

/// All of Gamma_k by exhaustive filtering of {1,2,3,4}^{2k}, lexicographic order.
/// Requires 1 <= k <= 6.
std::vector<GammaSequence> enumerate_gamma(int k);

/// Gamma_k^w.
std::vector<GammaSequence> enumerate_gamma(int k, int weight);

/// Gamma_k built by placing disjoint (3,4) blocks among {1,2} fillers,
/// sorted lexicographically. Independent of the filter above.
std::vector<GammaSequence> generate_gamma_blocks(int k);

/// sum_w C(2k-w, w) 4^{k-w}.
long long gamma_size(int k);

}  // namespace holderdeg::gamma
