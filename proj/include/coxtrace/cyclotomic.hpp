#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace coxtrace {

// Element Σ a_j X^j of Z[X]/(X^{2m} - 1), exponents taken mod 2m. Evaluating at
// ζ = e^{iπ/m}, a primitive 2m-th root of unity, gives the element of Z[ζ] it stands for.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(unsigned m);
  CyclotomicElement(unsigned m, std::vector<mpz_class> coefficients);

  static CyclotomicElement constant(unsigned m, long value);
  static CyclotomicElement monomial(unsigned m, unsigned exponent, long coefficient = 1);

  unsigned half_order() const noexcept { return m_; }
  std::size_t period() const noexcept { return coeffs_.size(); }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  const mpz_class& operator[](std::size_t j) const { return coeffs_[j]; }

  // All coefficients zero (stronger than vanishing at ζ).
  bool is_formally_zero() const;
  // Σ |a_j|.
  mpz_class norm() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);
  CyclotomicElement operator-() const;

  // *this += x * y, skipping zero coefficients of both factors.
  void add_product(const CyclotomicElement& x, const CyclotomicElement& y);

  friend CyclotomicElement operator+(CyclotomicElement x, const CyclotomicElement& y) { return x += y; }
  friend CyclotomicElement operator-(CyclotomicElement x, const CyclotomicElement& y) { return x -= y; }
  friend CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y);
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  void check_compatible(const CyclotomicElement& rhs) const;

  unsigned m_;
  std::vector<mpz_class> coeffs_;
};

// Φ_n(X), coefficients from the constant term up. Memoized; safe to call concurrently.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

// Exact: Σ a_j ζ^j = 0 iff Φ_{2m} divides the degree < 2m representative.
bool is_zero_at_zeta(const CyclotomicElement& x);

// Sign of Σ a_j cos(jπ/m), the real part of the value at ζ; the value itself when it is
// real. 0 exactly when is_zero_at_zeta(x). Nonzero signs come from outward-rounded
// interval evaluation at 64, 128, 256, ... fractional bits.
int sign_real(const CyclotomicElement& x);

// Chinese remainder representation: r_i = M mod p_i for pairwise distinct primes p_i.
struct Residues {
  std::vector<mpz_class> primes;
  std::vector<mpz_class> residues;
};

Residues residues_of(const mpz_class& value, const std::vector<mpz_class>& primes);
// The unique M in [0, Π p_i - 1] with M ≡ r_i (mod p_i). Throws std::invalid_argument on
// repeated or non-coprime moduli and on residues outside [0, p_i - 1].
mpz_class crr_reconstruct(const Residues& r);

}  // namespace coxtrace
