#include <doctest.h>

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <random>

#include "coxtrace/cyclotomic.hpp"

using namespace coxtrace;

namespace {

CyclotomicElement make(unsigned m, std::initializer_list<std::pair<unsigned, long>> terms) {
  CyclotomicElement x(m);
  for (auto [k, c] : terms) x += CyclotomicElement::monomial(m, k, c);
  return x;
}

CyclotomicElement random_element(std::mt19937_64& rng, unsigned m, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<mpz_class> c(2 * m);
  for (auto& v : c) v = coeff(rng);
  return CyclotomicElement(m, c);
}

}  // namespace

TEST_CASE("addition") {
  const unsigned m = 3;
  CHECK(make(m, {{1, 1}}) + make(m, {{1, 1}}) == make(m, {{1, 2}}));
  const auto x = make(m, {{0, 4}, {5, -2}});
  CHECK(x + CyclotomicElement(m) == x);
  CHECK(make(m, {{5, 1}}) + make(m, {{5, 1}}) == make(m, {{5, 2}}));
  CHECK_THROWS_AS(make(3, {}) + make(4, {}), std::invalid_argument);
  CHECK_THROWS_AS(CyclotomicElement(3, std::vector<mpz_class>(5)), std::invalid_argument);
}

TEST_CASE("multiplication") {
  const unsigned m = 3;
  CHECK(make(m, {{3, 1}}) * make(m, {{3, 1}}) == CyclotomicElement::constant(m, 1));
  const auto x = make(m, {{0, 4}, {5, -2}});
  CHECK(x * CyclotomicElement::constant(m, 1) == x);
  const auto y = make(m, {{1, 1}, {5, 1}});
  CHECK(y * y == make(m, {{2, 1}, {0, 2}, {4, 1}}));
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const unsigned m = 1 + round % 12;
    const auto a = random_element(rng, m, 50);
    const auto b = random_element(rng, m, 50);
    const auto c = random_element(rng, m, 50);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    auto d = a;
    d.add_product(b, c);
    CHECK(d == a + b * c);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  // Φ_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), mpz_class(-2)) == 2);
}

TEST_CASE("zero test examples") {
  CHECK(is_zero_at_zeta(make(3, {{3, 1}, {0, 1}})));
  CHECK(is_zero_at_zeta(CyclotomicElement(3)));
  CHECK_FALSE(is_zero_at_zeta(make(3, {{1, 1}, {5, 1}})));
  CHECK(is_zero_at_zeta(make(1, {{0, 1}, {1, 1}})));
}

TEST_CASE("sign examples") {
  CHECK(sign_real(make(3, {{1, 1}, {5, 1}})) == 1);
  CHECK(sign_real(make(3, {{3, 1}})) == -1);
  CHECK(sign_real(make(2, {{1, 2}, {3, 2}})) == 0);
  CHECK(sign_real(CyclotomicElement(5)) == 0);
  // 2cos(π/5) = golden ratio: φ - 1 - 1/φ = 0, φ² - φ - 1 = 0.
  const auto phi = make(5, {{1, 1}, {9, 1}});
  CHECK(sign_real(phi * phi - phi - CyclotomicElement::constant(5, 1)) == 0);
  CHECK(sign_real(phi * phi - phi - CyclotomicElement::constant(5, 2)) == -1);
}

TEST_CASE("sign matches rational evaluation for m in 1..3") {
  std::mt19937_64 rng(11);
  // 2cos(jπ/m) for j = 0..2m-1.
  const std::map<unsigned, std::vector<int>> twice_cos = {
      {1, {2, -2}}, {2, {2, 0, -2, 0}}, {3, {2, 1, -1, -2, -1, 1}}};
  for (int round = 0; round < 3000; ++round) {
    const unsigned m = 1 + round % 3;
    auto x = random_element(rng, m, 3);
    // Make it real: a_j = a_{2m-j}.
    auto c = x.coefficients();
    for (unsigned j = 1; j < m; ++j) c[2 * m - j] = c[j];
    x = CyclotomicElement(m, c);
    mpz_class twice = 0;
    for (unsigned j = 0; j < 2 * m; ++j) twice += c[j] * twice_cos.at(m)[j];
    CHECK(sign_real(x) == sgn(twice));
  }
}

TEST_CASE("sign of real parts of nearly cancelling sums at larger m") {
  // (2cos(π/m))^k computed two ways differ by exactly zero.
  for (unsigned m = 4; m <= 12; ++m) {
    const auto c = make(m, {{1, 1}, {2 * m - 1, 1}});
    auto p = CyclotomicElement::constant(m, 1);
    for (int k = 0; k < 12; ++k) p *= c;
    CHECK(sign_real(p) == 1);
    CHECK(sign_real(p - p) == 0);
    CHECK(sign_real(-p) == -1);
  }
}

TEST_CASE("chinese remainder reconstruction") {
  const std::vector<mpz_class> p{2, 3, 5};
  CHECK(crr_reconstruct({p, {1, 2, 0}}) == 5);
  CHECK(crr_reconstruct({p, {0, 0, 0}}) == 0);
  CHECK(crr_reconstruct({p, {0, 1, 2}}) == 22);
  CHECK_THROWS_AS(crr_reconstruct({p, {0, 3, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(crr_reconstruct({{2, 2}, {0, 1}}), std::invalid_argument);
  for (int v = 0; v < 30; ++v) {
    const auto r = residues_of(v, p);
    CHECK(crr_reconstruct(r) == v);
  }
}

TEST_CASE("sign matches 256-bit evaluation on real elements") {
  std::mt19937_64 rng(17);
  mpfr_t pi, angle, c, sum, term;
  for (auto* v : {pi, angle, c, sum, term}) mpfr_init2(v, 256);
  mpfr_const_pi(pi, MPFR_RNDN);
  for (int round = 0; round < 3000; ++round) {
    const unsigned m = 1 + round % 12;
    auto coeffs = random_element(rng, m, 100).coefficients();
    for (unsigned j = 1; j < m; ++j) coeffs[2 * m - j] = coeffs[j];
    const CyclotomicElement x(m, coeffs);
    mpfr_set_zero(sum, 1);
    for (unsigned j = 0; j < 2 * m; ++j) {
      mpfr_mul_ui(angle, pi, j, MPFR_RNDN);
      mpfr_div_ui(angle, angle, m, MPFR_RNDN);
      mpfr_cos(c, angle, MPFR_RNDN);
      mpfr_mul_z(term, c, coeffs[j].get_mpz_t(), MPFR_RNDN);
      mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    const int expected = mpfr_cmpabs_ui(sum, 0) == 0 ? 0 : mpfr_sgn(sum);
    if (is_zero_at_zeta(x)) {
      CHECK(sign_real(x) == 0);
    } else {
      CHECK(sign_real(x) == expected);
    }
  }
  for (auto* v : {pi, angle, c, sum, term}) mpfr_clear(v);
}
