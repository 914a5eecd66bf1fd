#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>

/// Symbolic words in the generators g_j = e_j^ - e_j-| and h_j = e_j^ + e_j-|.
///
/// The g_j and h_j together generate the full operator algebra on the exterior
/// algebra: g_j^2 = -1, h_j^2 = +1, and any two distinct generators anticommute.
/// A word is stored in normal order g_{A} h_{B} (increasing indices within each
/// group), keyed by the bitmasks (A, B).
namespace holderdeg::exterior {

class CliffordPolynomial {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using Complex = std::complex<double>;

  explicit CliffordPolynomial(int n);

  static CliffordPolynomial scalar(int n, Complex c);
  /// sum_j v_j g_j.
  static CliffordPolynomial g_vector(int n, const double* v);
  static CliffordPolynomial word(int n, std::uint32_t g_mask, std::uint32_t h_mask, Complex c = 1.0);

  int n() const noexcept { return n_; }
  const std::map<Key, Complex>& terms() const noexcept { return terms_; }

  CliffordPolynomial& operator+=(const CliffordPolynomial& other);
  CliffordPolynomial& operator*=(Complex c);
  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);

  /// Normalized trace over the 2^{2n}-dimensional space times 2^{2n}: only the empty word survives.
  Complex trace() const;

 private:
  void add(Key key, Complex c);

  int n_;
  std::map<Key, Complex> terms_;
};

/// P_0 + P_top written in words: prod_j (1 - g_j h_j)/2 + prod_j (1 + g_j h_j)/2.
CliffordPolynomial harmonic_projector_words(int n);

/// tau = i^n g_1 ... g_2n.
CliffordPolynomial tau_words(int n);

}  // namespace holderdeg::exterior
