#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coxtrace/coxeter.hpp"
#include "coxtrace/errors.hpp"
#include "coxtrace/oracle.hpp"
#include "support.hpp"

using namespace coxtrace;
using coxtrace::testing::spec_from;
using coxtrace::testing::W;

namespace {

bool equals_int(const CyclotomicElement& x, long v) {
  return is_zero_at_zeta(x - CyclotomicElement::constant(x.half_order(), v));
}

const GroupSpec s3 = spec_from("kind = coxeter\nletters = a b\nm a b 3\n");
const GroupSpec b2 = spec_from("kind = even-coxeter\nletters = a b\nm a b 4\n");

}  // namespace

TEST_CASE("generator matrices") {
  const auto right = spec_from("kind = coxeter\nletters = a b\nm a b 2\n");
  const auto free = spec_from("kind = coxeter\nletters = a b\n");
  auto col = [](const GeoMatrix& g, std::size_t j) { return g.column(j); };
  // σ_a(b) = b when m = 2.
  CHECK(equals_int(col(sigma_generator(right, 0), 1)[0], 0));
  CHECK(equals_int(col(sigma_generator(right, 0), 1)[1], 1));
  // σ_a(b) = b + 2a when m = ∞.
  CHECK(equals_int(col(sigma_generator(free, 0), 1)[0], 2));
  CHECK(equals_int(col(sigma_generator(free, 0), 1)[1], 1));
  // σ_a(a) = -a.
  CHECK(equals_int(col(sigma_generator(s3, 0), 0)[0], -1));
  CHECK(equals_int(col(sigma_generator(s3, 0), 0)[1], 0));
}

TEST_CASE("sigma_apply") {
  const auto e = sigma_apply(s3, {}, 1);
  CHECK(equals_int(e[0], 0));
  CHECK(equals_int(e[1], 1));
  const auto a = sigma_apply(s3, W("a", s3), 0);
  CHECK(equals_int(a[0], -1));
  // σ_a(σ_b(b)) = σ_a(-b) = -(b + a) with 2cos(π/3) = 1.
  const auto ab = sigma_apply(s3, W("ab", s3), 1);
  CHECK(equals_int(ab[0], -1));
  CHECK(equals_int(ab[1], -1));
}

TEST_CASE("sign_of_coefficient") {
  CHECK(sign_of_coefficient(s3, {}, 0, 0) == 1);
  CHECK(sign_of_coefficient(s3, W("a", s3), 0, 0) == -1);
  // σ_ab(a) = σ_a(a + b) = -a + b + a = b.
  CHECK(sign_of_coefficient(s3, W("ab", s3), 0, 0) == 0);
  CHECK(sign_of_coefficient(s3, W("ab", s3), 0, 1) == 1);
}

TEST_CASE("geodesic length examples") {
  CHECK(geodesic_length(s3, W("ababab", s3)) == 0);
  CHECK(geodesic_length(s3, W("aa", s3)) == 0);
  CHECK(geodesic_length(s3, W("abab", s3)) == 2);
}

TEST_CASE("geodesic alphabet examples") {
  CHECK(geodesic_alphabet(s3, W("aa", s3)).empty());
  CHECK(geodesic_alphabet(s3, W("a", s3)) == std::vector<std::size_t>{0});
  CHECK(geodesic_alphabet(s3, W("abab", s3)) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("parikh examples") {
  CHECK(parikh_even(b2, W("abba", b2)) == ParikhVector{0, 0});
  CHECK(parikh_even(b2, W("abab", b2)) == ParikhVector{2, 2});
  CHECK(parikh_even(b2, W("ababab", b2)) == ParikhVector{1, 1});
  CHECK_THROWS_AS(parikh_even(s3, W("ab", s3)), KindError);
  CHECK_THROWS_AS(geodesic_length(spec_from("kind = racg\nletters = a\n"), {}), KindError);
}

TEST_CASE("homomorphism laws") {
  for (const auto& spec : testing::all_coxeter_specs(3, {0, 2, 3, 4, 5, 6})) {
    const std::size_t n = spec.size();
    for (std::size_t a = 0; a < n; ++a) {
      const auto ga = sigma_generator(spec, a);
      CHECK((ga * ga).equals_at_zeta(GeoMatrix::identity(n, ga.at(0, 0).half_order())));
      for (std::size_t b = a + 1; b < n; ++b) {
        const unsigned m = spec.entry(a, b);
        if (m == 0) continue;
        const auto gab = ga * sigma_generator(spec, b);
        auto p = GeoMatrix::identity(n, ga.at(0, 0).half_order());
        for (unsigned k = 0; k < m; ++k) {
          CHECK_FALSE(p.equals_at_zeta(GeoMatrix::identity(n, p.at(0, 0).half_order())) != (k == 0));
          p = p * gab;
        }
        CHECK(p.equals_at_zeta(GeoMatrix::identity(n, p.at(0, 0).half_order())));
      }
    }
  }
}

TEST_CASE("length parity, inverses, parikh sums") {
  std::mt19937_64 rng(3);
  for (const auto& spec : testing::all_coxeter_specs(3, {0, 2, 3, 4, 6})) {
    for (int round = 0; round < 20; ++round) {
      const Word w = testing::random_word(rng, testing::plain_letters(3), 14);
      const auto len = geodesic_length(spec, w);
      CHECK(len % 2 == w.size() % 2);
      CHECK(len <= w.size());
      Word ww = w;
      ww.insert(ww.end(), w.rbegin(), w.rend());
      CHECK(geodesic_length(spec, ww) == 0);
      for (int s : step_signs(spec, w)) CHECK((s == 1 || s == -1));
      if (spec.kind() == GroupKind::even_coxeter) {
        const auto p = parikh_even(spec, w);
        CHECK(std::accumulate(p.begin(), p.end(), std::size_t{0}) == len);
      }
    }
  }
}

TEST_CASE("agreement with Tits moves on a mixed spec with m = 5 and 6") {
  const auto spec = spec_from("kind = coxeter\nletters = a b c\nm a b 5\nm b c 6\n");
  testing::for_each_word(testing::plain_letters(3), 6, [&](const Word& w) {
    const auto geos = oracle::tits_closure(spec, w);
    CHECK(geodesic_length(spec, w) == geos.front().size());
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::any_of(geos.front().begin(), geos.front().end(), [&](const Letter& l) { return l.index == i; })) {
        letters.push_back(i);
      }
    }
    CHECK(geodesic_alphabet(spec, w) == letters);
  });
}

TEST_CASE("dichotomy sign rejects mixed vectors") {
  const unsigned m = 3;
  GeoVector v{CyclotomicElement::constant(m, 1), CyclotomicElement::constant(m, -1)};
  CHECK_THROWS_AS(dichotomy_sign(v), InternalFault);
  GeoVector z{CyclotomicElement(m), CyclotomicElement(m)};
  CHECK_THROWS_AS(dichotomy_sign(z), InternalFault);
  GeoVector p{CyclotomicElement(m), CyclotomicElement::constant(m, 2)};
  CHECK(dichotomy_sign(p) == 1);
}
