#include "holderdeg/clifford_words.hpp"

#include <bit>

#include "holderdeg/errors.hpp"

namespace holderdeg::exterior {

namespace {

// Sign from bringing the product of two normal-ordered monomials in one family
// into normal order, with generator squares equal to `square`.
double monomial_product_sign(std::uint32_t a, std::uint32_t b, double square) {
  double sign = 1.0;
  // Each generator of b passes over the generators of a with larger index.
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint32_t above = a & ~((2u << j) - 1u);
    if (std::popcount(above) % 2 != 0) sign = -sign;
  }
  if (square < 0.0 && std::popcount(a & b) % 2 != 0) sign = -sign;
  return sign;
}

}  // namespace

CliffordPolynomial::CliffordPolynomial(int n) : n_(n) {
  require(n >= 1 && n <= 8, "CliffordPolynomial: n out of range");
}

CliffordPolynomial CliffordPolynomial::scalar(int n, Complex c) {
  CliffordPolynomial p(n);
  p.add({0u, 0u}, c);
  return p;
}

CliffordPolynomial CliffordPolynomial::g_vector(int n, const double* v) {
  CliffordPolynomial p(n);
  for (int j = 0; j < 2 * n; ++j)
    if (v[j] != 0.0) p.add({1u << j, 0u}, v[j]);
  return p;
}

CliffordPolynomial CliffordPolynomial::word(int n, std::uint32_t g_mask, std::uint32_t h_mask, Complex c) {
  CliffordPolynomial p(n);
  p.add({g_mask, h_mask}, c);
  return p;
}

void CliffordPolynomial::add(Key key, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) it->second += c;
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& other) {
  require(n_ == other.n_, "CliffordPolynomial: dimension mismatch");
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator*=(Complex c) {
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  require(a.n_ == b.n_, "CliffordPolynomial: dimension mismatch");
  CliffordPolynomial out(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // g_A h_B g_C h_D = (-1)^{|B||C|} g_A g_C h_B h_D
      double sign = (std::popcount(ka.second) * std::popcount(kb.first)) % 2 == 0 ? 1.0 : -1.0;
      sign *= monomial_product_sign(ka.first, kb.first, -1.0);
      sign *= monomial_product_sign(ka.second, kb.second, 1.0);
      out.add({ka.first ^ kb.first, ka.second ^ kb.second}, sign * ca * cb);
    }
  }
  return out;
}

CliffordPolynomial::Complex CliffordPolynomial::trace() const {
  const auto it = terms_.find({0u, 0u});
  const double dim = static_cast<double>(1u << (2 * n_));
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second * dim;
}

CliffordPolynomial harmonic_projector_words(int n) {
  CliffordPolynomial lower = CliffordPolynomial::scalar(n, 1.0);
  CliffordPolynomial upper = CliffordPolynomial::scalar(n, 1.0);
  for (int j = 0; j < 2 * n; ++j) {
    const std::uint32_t bit = 1u << j;
    // g_j h_j is already in normal order.
    CliffordPolynomial minus = CliffordPolynomial::scalar(n, 0.5);
    minus += CliffordPolynomial::word(n, bit, bit, -0.5);
    CliffordPolynomial plus = CliffordPolynomial::scalar(n, 0.5);
    plus += CliffordPolynomial::word(n, bit, bit, 0.5);
    lower = lower * minus;
    upper = upper * plus;
  }
  lower += upper;
  return lower;
}

CliffordPolynomial tau_words(int n) {
  std::complex<double> phase(1.0, 0.0);
  for (int j = 0; j < n; ++j) phase *= std::complex<double>(0.0, 1.0);
  return CliffordPolynomial::word(n, (1u << (2 * n)) - 1u, 0u, phase);
}

}  // namespace holderdeg::exterior
