#pragma once

#include <cstddef>
#include <vector>

#include "coxtrace/alphabet.hpp"
#include "coxtrace/cyclotomic.hpp"

namespace coxtrace {

// Coefficients Σ λ_b b in the letter basis, each λ_b in Z[ζ].
using GeoVector = std::vector<CyclotomicElement>;

// Square matrix over Z[X]/(X^{2m} - 1), stored by columns.
class GeoMatrix {
 public:
  static GeoMatrix identity(std::size_t n, unsigned m);

  std::size_t size() const noexcept { return columns_.size(); }
  const CyclotomicElement& at(std::size_t row, std::size_t col) const { return columns_[col][row]; }
  CyclotomicElement& at(std::size_t row, std::size_t col) { return columns_[col][row]; }
  const GeoVector& column(std::size_t col) const { return columns_[col]; }
  GeoVector& column(std::size_t col) { return columns_[col]; }

  // Entrywise equality after substituting ζ for X.
  bool equals_at_zeta(const GeoMatrix& other) const;

  friend GeoMatrix operator*(const GeoMatrix& a, const GeoMatrix& b);

 private:
  std::vector<GeoVector> columns_;
};

// The standard geometric representation σ of a Coxeter group, over Z[ζ] with ζ = e^{iπ/m}
// and m the lcm of the finite off-diagonal entries (1 when there are none).
class CoxeterSystem {
 public:
  explicit CoxeterSystem(const GroupSpec& spec);

  std::size_t size() const noexcept { return matrix_.size(); }
  unsigned half_order() const noexcept { return m_; }
  unsigned entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  // Adjoins a letter x with m(x, a) = 0 for every a; x gets index size().
  CoxeterSystem with_free_letter() const;

  // Entry (i, j) of σ_{a_i}: -1 on the diagonal, else 2cos(π/m_ij) as X^k + X^{2m-k}
  // with m = m_ij·k, or 2 when m_ij = 0.
  const CyclotomicElement& coefficient(std::size_t i, std::size_t j) const { return coefficient_[i][j]; }

  GeoMatrix generator(Symbol a) const;
  // v <- σ_a(v). Only the a-coordinate changes.
  void apply(Symbol a, GeoVector& v) const;
  // p <- p·σ_a.
  void right_multiply(GeoMatrix& p, Symbol a) const;
  GeoVector unit(Symbol b) const;

 private:
  CoxeterSystem(CoxeterMatrix matrix, unsigned m);

  CoxeterMatrix matrix_;
  unsigned m_;
  std::vector<std::vector<CyclotomicElement>> coefficient_;
};

// Vectors σ_w(a) for a in Σ are entirely >= 0 or entirely <= 0. Returns +1 / -1 per case;
// anything else raises InternalFault.
int dichotomy_sign(const GeoVector& v);

// All operations below require kind coxeter or even-coxeter (KindError otherwise).
GeoMatrix sigma_generator(const GroupSpec& spec, std::size_t a);
// σ_w(b), applying the generators of w right to left to the unit vector b.
GeoVector sigma_apply(const GroupSpec& spec, const Word& w, std::size_t b);
// Sign of the b-coefficient of σ_w(a).
int sign_of_coefficient(const GroupSpec& spec, const Word& w, std::size_t a, std::size_t b);

// For w = a_1 ⋯ a_k, entry i is the dichotomy sign of σ_{a_1 ⋯ a_{i-1}}(a_i):
// +1 when a_i lengthens the prefix, -1 when it shortens it.
std::vector<int> step_signs(const GroupSpec& spec, const Word& w);

std::size_t geodesic_length(const GroupSpec& spec, const Word& w);
// Letters of the shortlex normal form of w, ascending: {b : λ_b ≠ 0} for σ_w(x).
std::vector<std::size_t> geodesic_alphabet(const GroupSpec& spec, const Word& w);

using ParikhVector = std::vector<std::size_t>;
// Parikh image of the shortlex normal form. Requires kind even-coxeter.
ParikhVector parikh_even(const GroupSpec& spec, const Word& w);

}  // namespace coxtrace
