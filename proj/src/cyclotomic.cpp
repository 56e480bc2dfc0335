#include "coxtrace/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "coxtrace/errors.hpp"

namespace coxtrace {

CyclotomicElement::CyclotomicElement(unsigned m) : m_(m), coeffs_(2 * static_cast<std::size_t>(m)) {
  if (m == 0) throw std::invalid_argument("cyclotomic half-order must be positive");
}

CyclotomicElement::CyclotomicElement(unsigned m, std::vector<mpz_class> coefficients)
    : m_(m), coeffs_(std::move(coefficients)) {
  if (m == 0) throw std::invalid_argument("cyclotomic half-order must be positive");
  if (coeffs_.size() != 2 * static_cast<std::size_t>(m)) {
    throw std::invalid_argument("expected " + std::to_string(2 * m) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
}

CyclotomicElement CyclotomicElement::constant(unsigned m, long value) { return monomial(m, 0, value); }

CyclotomicElement CyclotomicElement::monomial(unsigned m, unsigned exponent, long coefficient) {
  CyclotomicElement x(m);
  x.coeffs_[exponent % x.period()] = coefficient;
  return x;
}

bool CyclotomicElement::is_formally_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

mpz_class CyclotomicElement::norm() const {
  mpz_class total = 0;
  for (const auto& c : coeffs_) total += abs(c);
  return total;
}

void CyclotomicElement::check_compatible(const CyclotomicElement& rhs) const {
  if (m_ != rhs.m_) {
    throw std::invalid_argument("cyclotomic half-order mismatch: " + std::to_string(m_) + " vs " +
                                std::to_string(rhs.m_));
  }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  check_compatible(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  check_compatible(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void CyclotomicElement::add_product(const CyclotomicElement& x, const CyclotomicElement& y) {
  check_compatible(x);
  check_compatible(y);
  const std::size_t p = coeffs_.size();
  for (std::size_t i = 0; i < p; ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (sgn(y.coeffs_[j]) == 0) continue;
      const std::size_t k = i + j < p ? i + j : i + j - p;
      mpz_addmul(coeffs_[k].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
    }
  }
}

CyclotomicElement operator*(const CyclotomicElement& x, const CyclotomicElement& y) {
  CyclotomicElement out(x.m_);
  out.add_product(x, y);
  return out;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) { return *this = *this * rhs; }

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  static std::recursive_mutex mutex;
  static std::map<unsigned, std::vector<mpz_class>> cache;
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial index must be positive");

  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // X^n - 1 divided by Φ_d for every proper divisor d; each division is exact and monic.
  std::vector<mpz_class> quotient(n + 1, 0);
  quotient[0] = -1;
  quotient[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<mpz_class> next(quotient.size() - dd, 0);
    for (std::size_t i = quotient.size(); i-- > dd;) {
      const mpz_class c = quotient[i];
      next[i - dd] = c;
      for (std::size_t t = 0; t <= dd; ++t) quotient[i - dd + t] -= c * divisor[t];
    }
    quotient = std::move(next);
  }
  return cache.emplace(n, std::move(quotient)).first->second;
}

bool is_zero_at_zeta(const CyclotomicElement& x) {
  if (x.is_formally_zero()) return true;
  const auto& phi = cyclotomic_polynomial(static_cast<unsigned>(x.period()));
  const std::size_t d = phi.size() - 1;
  std::vector<mpz_class> r = x.coefficients();
  for (std::size_t i = r.size(); i-- > d;) {
    if (sgn(r[i]) == 0) continue;
    const mpz_class c = r[i];
    for (std::size_t t = 0; t <= d; ++t) {
      mpz_submul(r[i - d + t].get_mpz_t(), c.get_mpz_t(), phi[t].get_mpz_t());
    }
  }
  return std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d),
                     [](const mpz_class& c) { return sgn(c) == 0; });
}

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  Real(Real&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  Real& operator=(Real&&) = delete;
  ~Real() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

// Enclosures [lo[k], hi[k]] of cos(kπ/m) for 0 < k < m, at a fixed working precision.
struct CosineTable {
  unsigned m;
  mpfr_prec_t precision;
  std::vector<Real> lo;
  std::vector<Real> hi;
};

const CosineTable& cosines(unsigned m, mpfr_prec_t precision) {
  thread_local std::vector<CosineTable> tables;
  for (const auto& t : tables) {
    if (t.m == m && t.precision == precision) return t;
  }
  CosineTable table{m, precision, {}, {}};
  Real pi_lo(precision), pi_hi(precision), angle(precision);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  for (unsigned k = 0; k < m; ++k) {
    table.lo.emplace_back(precision);
    table.hi.emplace_back(precision);
    if (k == 0) continue;
    // kπ/m lies in (0, π), where cos decreases.
    mpfr_mul_ui(angle.get(), pi_hi.get(), k, MPFR_RNDU);
    mpfr_div_ui(angle.get(), angle.get(), m, MPFR_RNDU);
    mpfr_cos(table.lo.back().get(), angle.get(), MPFR_RNDD);
    mpfr_mul_ui(angle.get(), pi_lo.get(), k, MPFR_RNDD);
    mpfr_div_ui(angle.get(), angle.get(), m, MPFR_RNDD);
    mpfr_cos(table.hi.back().get(), angle.get(), MPFR_RNDU);
  }
  if (tables.size() >= 32) tables.erase(tables.begin());
  tables.push_back(std::move(table));
  return tables.back();
}

}  // namespace

int sign_real(const CyclotomicElement& x) {
  const unsigned m = x.half_order();
  const auto& a = x.coefficients();

  // cos(kπ/m) = cos((2m-k)π/m): fold the coefficients onto k in [0, m]. Terms whose cosine
  // is 0 or ±1/2 are kept exactly, doubled to stay integral.
  mpz_class twice_rational = 2 * (a[0] - a[m]);
  std::vector<std::pair<unsigned, mpz_class>> terms;
  for (unsigned k = 1; k < m; ++k) {
    mpz_class s = a[k] + a[2 * m - k];
    if (sgn(s) == 0 || 2 * k == m) continue;
    if (3 * k == m) {
      twice_rational += s;
    } else if (3 * k == 2 * m) {
      twice_rational -= s;
    } else {
      terms.emplace_back(k, std::move(s));
    }
  }
  if (terms.empty()) return sgn(twice_rational);

  std::size_t magnitude_bits = mpz_sizeinbase(twice_rational.get_mpz_t(), 2);
  for (const auto& [k, s] : terms) magnitude_bits = std::max(magnitude_bits, mpz_sizeinbase(s.get_mpz_t(), 2));
  // A nonzero value exceeds norm^{-2m} in absolute value; past that many fractional bits
  // (plus the coefficient size) a straddling enclosure can only mean a bug.
  const std::size_t norm_bits = mpz_sizeinbase(x.norm().get_mpz_t(), 2);
  const std::size_t cap = (2 * static_cast<std::size_t>(m) + 1) * norm_bits + 64;

  bool zero_checked = false;
  for (std::size_t fractional = 64;; fractional *= 2) {
    const auto precision = static_cast<mpfr_prec_t>(fractional + magnitude_bits + 8);
    const auto& table = cosines(m, precision);
    Real lo(precision), hi(precision), t(precision);
    mpfr_set_z(lo.get(), twice_rational.get_mpz_t(), MPFR_RNDD);
    mpfr_div_2ui(lo.get(), lo.get(), 1, MPFR_RNDD);
    mpfr_set_z(hi.get(), twice_rational.get_mpz_t(), MPFR_RNDU);
    mpfr_div_2ui(hi.get(), hi.get(), 1, MPFR_RNDU);
    for (const auto& [k, s] : terms) {
      const bool positive = sgn(s) > 0;
      mpfr_mul_z(t.get(), (positive ? table.lo[k] : table.hi[k]).get(), s.get_mpz_t(), MPFR_RNDD);
      mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul_z(t.get(), (positive ? table.hi[k] : table.lo[k]).get(), s.get_mpz_t(), MPFR_RNDU);
      mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    if (!zero_checked) {
      zero_checked = true;
      if (is_zero_at_zeta(x)) return 0;
    }
    if (fractional >= cap) {
      throw InternalFault("sign of a nonzero cyclotomic value undecided at " + std::to_string(fractional) +
                          " fractional bits");
    }
  }
}

Residues residues_of(const mpz_class& value, const std::vector<mpz_class>& primes) {
  Residues r{primes, {}};
  for (const auto& p : primes) {
    mpz_class rem;
    mpz_fdiv_r(rem.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
    r.residues.push_back(rem);
  }
  return r;
}

mpz_class crr_reconstruct(const Residues& r) {
  if (r.primes.size() != r.residues.size()) throw std::invalid_argument("primes and residues differ in length");
  mpz_class modulus = 1;
  for (std::size_t i = 0; i < r.primes.size(); ++i) {
    const auto& p = r.primes[i];
    if (p < 2) throw std::invalid_argument("modulus " + p.get_str() + " is not a prime");
    if (r.residues[i] < 0 || r.residues[i] >= p) {
      throw std::invalid_argument("residue " + r.residues[i].get_str() + " outside [0, " + p.get_str() + ")");
    }
    if (gcd(modulus, p) != 1) throw std::invalid_argument("moduli repeat or share a factor (" + p.get_str() + ")");
    modulus *= p;
  }
  mpz_class total = 0;
  for (std::size_t i = 0; i < r.primes.size(); ++i) {
    const mpz_class cofactor = modulus / r.primes[i];
    mpz_class inverse;
    mpz_invert(inverse.get_mpz_t(), cofactor.get_mpz_t(), r.primes[i].get_mpz_t());
    total += r.residues[i] * cofactor * inverse;
  }
  mpz_class out;
  mpz_fdiv_r(out.get_mpz_t(), total.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

}  // namespace coxtrace
