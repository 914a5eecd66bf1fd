#include "doctest.h"

#include <algorithm>

#include "holderdeg/errors.hpp"
#include "holderdeg/gamma.hpp"

using namespace holderdeg;
using namespace holderdeg::gamma;

namespace {
// Independent count: words of length 2k in which 3 is always followed by 4 and 4 always
// preceded by 3, counted by a transfer recursion over the previous letter.
long long count_by_transfer(int k) {
  // state: previous letter was 3 (must place 4) or not
  long long free = 1, must4 = 0;
  for (int pos = 0; pos < 2 * k; ++pos) {
    const long long next_free = free * 2 + must4;  // 1, 2 after a free slot; 4 after a 3
    const long long next_must4 = free;             // 3 after a free slot
    free = next_free;
    must4 = next_must4;
  }
  return free;  // may not end on 3
}
}  // namespace

TEST_SUITE("gamma") {
  TEST_CASE("Gamma_1 and its weight-one part") {
    const auto g = enumerate_gamma(1);
    REQUIRE(g.size() == 5);
    const std::vector<std::vector<int>> expect{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 4}};
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i].entries() == expect[i]);
    const auto w1 = enumerate_gamma(1, 1);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].entries() == std::vector<int>{3, 4});
  }

  TEST_CASE("sizes against an independent transfer count") {
    CHECK(enumerate_gamma(2).size() == 29);
    for (int k = 1; k <= 6; ++k) {
      CHECK(static_cast<long long>(enumerate_gamma(k).size()) == count_by_transfer(k));
      CHECK(gamma_size(k) == count_by_transfer(k));
    }
  }

  TEST_CASE("block generator equals the filter") {
    for (int k = 1; k <= 4; ++k) CHECK(generate_gamma_blocks(k) == enumerate_gamma(k));
  }

  TEST_CASE("lexicographic order and weight partition") {
    const auto g = enumerate_gamma(3);
    CHECK(std::is_sorted(g.begin(), g.end(), [](const GammaSequence& a, const GammaSequence& b) {
      return a.entries() < b.entries();
    }));
    std::size_t total = 0;
    for (int w = 0; w <= 3; ++w) total += enumerate_gamma(3, w).size();
    CHECK(total == g.size());
    for (const auto& I : g) CHECK(I.weight() <= 3);
  }

  TEST_CASE("index map and iota") {
    const GammaSequence a(1, {1, 1}), b(1, {1, 2}), c(1, {3, 4});
    CHECK(a.iota() == std::complex<double>(1, 0));
    CHECK(b.iota() == std::complex<double>(-1, 0));
    CHECK(c.iota() == std::complex<double>(0, -1));
    CHECK(b.index_map_raw() == std::vector<int>{1, 3});
    CHECK(b.index_map() == std::vector<int>{0, 0});
    const GammaSequence d(2, {2, 3, 4, 1});
    CHECK(d.index_map_raw() == std::vector<int>{2, 2, 4, 4});
    CHECK(d.index_map() == std::vector<int>{1, 1, 3, 3});
    CHECK(d.block_pattern() == 0b0010u);
    CHECK(d.weight() == 1);
  }

  TEST_CASE("invalid words are rejected") {
    CHECK_THROWS_AS(GammaSequence(1, {4, 1}), PreconditionError);
    CHECK_THROWS_AS(GammaSequence(1, {1, 3}), PreconditionError);
    CHECK_THROWS_AS(GammaSequence(2, {3, 1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(GammaSequence(2, {1, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(enumerate_gamma(7), PreconditionError);
    CHECK_THROWS_AS(enumerate_gamma(0), PreconditionError);
  }
}
