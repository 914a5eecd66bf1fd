#include "holderdeg/gamma.hpp"

#include <algorithm>

#include "holderdeg/errors.hpp"

namespace holderdeg::gamma {

bool satisfies_gamma_conditions(const std::vector<int>& s) {
  if (s.empty() || s.size() % 2 != 0) return false;
  for (int v : s)
    if (v < 1 || v > 4) return false;
  if (s.front() == 4 || s.back() == 3) return false;
  for (std::size_t l = 0; l + 1 < s.size(); ++l)
    if ((s[l] == 3) != (s[l + 1] == 4)) return false;
  return true;
}

GammaSequence::GammaSequence(int k, std::vector<int> entries) : k_(k), entries_(std::move(entries)) {
  require(k >= 1, "GammaSequence: k must be positive");
  require(entries_.size() == static_cast<std::size_t>(2 * k), "GammaSequence: need 2k entries");
  require(satisfies_gamma_conditions(entries_), "GammaSequence: entries violate the Gamma_k conditions");
  for (std::size_t l = 0; l < entries_.size(); ++l) {
    if (entries_[l] == 3) {
      ++weight_;
      pattern_ |= 1u << l;
    }
  }
}

std::vector<int> GammaSequence::index_map_raw() const {
  std::vector<int> out(entries_.size());
  for (std::size_t l = 0; l < entries_.size(); ++l) {
    const int pos = static_cast<int>(l) + 1;
    out[l] = (entries_[l] == 1 || entries_[l] == 3) ? pos : pos + 1;
  }
  return out;
}

std::vector<int> GammaSequence::index_map() const {
  std::vector<int> out = index_map_raw();
  const int m = static_cast<int>(out.size());
  for (int& i : out) i = (i - 1) % m;
  return out;
}

std::complex<double> GammaSequence::iota() const {
  const std::vector<int> raw = index_map_raw();
  int shift = 0;
  for (std::size_t l = 0; l < raw.size(); ++l) shift += raw[l] - static_cast<int>(l + 1);
  static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> v = powers[weight_ % 4];
  return shift % 2 == 0 ? v : -v;
}

std::vector<GammaSequence> enumerate_gamma(int k) {
  require(k >= 1 && k <= 6, "enumerate_gamma: k must lie in [1, 6]");
  const int len = 2 * k;
  std::vector<GammaSequence> out;
  std::vector<int> s(len, 1);
  // Odometer over {1,2,3,4}^{2k}; the last slot moves fastest, which gives lexicographic order.
  while (true) {
    if (satisfies_gamma_conditions(s)) out.emplace_back(k, s);
    int pos = len - 1;
    while (pos >= 0 && s[pos] == 4) s[pos--] = 1;
    if (pos < 0) break;
    ++s[pos];
  }
  return out;
}

std::vector<GammaSequence> enumerate_gamma(int k, int weight) {
  std::vector<GammaSequence> all = enumerate_gamma(k);
  std::erase_if(all, [&](const GammaSequence& g) { return g.weight() != weight; });
  return all;
}

namespace {

void place_blocks(int len, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (pos == len) {
    out.push_back(cur);
    return;
  }
  for (int filler : {1, 2}) {
    cur.push_back(filler);
    place_blocks(len, pos + 1, cur, out);
    cur.pop_back();
  }
  if (pos + 1 < len) {
    cur.push_back(3);
    cur.push_back(4);
    place_blocks(len, pos + 2, cur, out);
    cur.pop_back();
    cur.pop_back();
  }
}

}  // namespace

std::vector<GammaSequence> generate_gamma_blocks(int k) {
  require(k >= 1 && k <= 6, "generate_gamma_blocks: k must lie in [1, 6]");
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  place_blocks(2 * k, 0, cur, words);
  std::sort(words.begin(), words.end());
  std::vector<GammaSequence> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(k, std::move(w));
  return out;
}

long long gamma_size(int k) {
  require(k >= 1, "gamma_size: k must be positive");
  long long total = 0;
  for (int w = 0; w <= k; ++w) {
    // C(2k - w, w)
    long long c = 1;
    for (int i = 0; i < w; ++i) c = c * (2 * k - w - i) / (i + 1);
    total += c * (1LL << (2 * (k - w)));
  }
  return total;
}

}  // namespace holderdeg::gamma
