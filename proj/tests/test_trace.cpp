#include <doctest.h>

#include <algorithm>
#include <memory>
#include <queue>
#include <set>

#include "coxtrace/trace.hpp"
#include "support.hpp"

using namespace coxtrace;

namespace {

AlphabetPtr make_alphabet(std::size_t n, std::vector<std::pair<Symbol, Symbol>> pairs) {
  return std::make_shared<const IndependenceAlphabet>(n, pairs);
}

SymbolWord sym(const std::string& s) {
  SymbolWord out;
  for (char c : s) out.push_back(static_cast<Symbol>(c - 'a'));
  return out;
}

Trace T(const AlphabetPtr& a, const std::string& s) { return Trace(a, sym(s)); }

std::set<SymbolWord> swap_class(const IndependenceAlphabet& alpha, const SymbolWord& w) {
  std::set<SymbolWord> seen{w};
  std::queue<SymbolWord> q;
  q.push(w);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (alpha.independent(u[i], u[i + 1])) {
        auto v = u;
        std::swap(v[i], v[i + 1]);
        if (seen.insert(v).second) q.push(v);
      }
    }
  }
  return seen;
}

std::vector<AlphabetPtr> small_alphabets() {
  std::vector<AlphabetPtr> out;
  const std::vector<std::pair<Symbol, Symbol>> pairs = {{0, 1}, {0, 2}, {1, 2}};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::pair<Symbol, Symbol>> chosen;
    for (unsigned p = 0; p < 3; ++p) {
      if ((mask >> p) & 1U) chosen.push_back(pairs[p]);
    }
    out.push_back(make_alphabet(3, chosen));
  }
  return out;
}

void for_each_symbol_word(std::size_t n, std::size_t max_len, const std::function<void(const SymbolWord&)>& f) {
  std::vector<Letter> letters = testing::plain_letters(n);
  testing::for_each_word(letters, max_len, [&](const Word& w) {
    SymbolWord s;
    for (const auto& l : w) s.push_back(static_cast<Symbol>(l.index));
    f(s);
  });
}

}  // namespace

TEST_CASE("trace equality examples") {
  const auto ab = make_alphabet(3, {{0, 1}});
  CHECK(T(ab, "ab") == T(ab, "ba"));
  CHECK_FALSE(T(ab, "ac") == T(ab, "ca"));
  CHECK(T(ab, "abc") == T(ab, "bac"));
}

TEST_CASE("trace alphabet") {
  const auto ab = make_alphabet(3, {{0, 1}});
  CHECK(trace_alphabet(T(ab, "aba")) == std::vector<Symbol>{0, 1});
  CHECK(trace_alphabet(Trace(ab)).empty());
  CHECK(trace_alphabet(T(ab, "abc")) == std::vector<Symbol>{0, 1, 2});
}

TEST_CASE("primes") {
  const auto ind = make_alphabet(2, {{0, 1}});
  const auto dep = make_alphabet(2, {});
  CHECK_FALSE(is_prime(T(ind, "ab")));
  CHECK(is_prime(T(dep, "ab")));
  CHECK_FALSE(is_prime(Trace(dep)));
}

TEST_CASE("prime prefixes") {
  const auto ab = make_alphabet(3, {{0, 1}});
  CHECK(prime_prefixes(T(ab, "abc")) == std::vector<Trace>{T(ab, "a"), T(ab, "b"), T(ab, "abc")});
  const auto dep = make_alphabet(1, {});
  CHECK(prime_prefixes(T(dep, "aa")) == std::vector<Trace>{T(dep, "a"), T(dep, "aa")});
  CHECK(prime_prefixes(Trace(dep)).empty());
}

TEST_CASE("hasse diagrams") {
  const auto dep = make_alphabet(3, {});
  CHECK(hasse_diagram(T(dep, "abc")).arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(hasse_diagram(T(dep, "aba")).arcs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(dependence_graph(T(dep, "abc")).arcs.size() == 3);
  const auto ind = make_alphabet(2, {{0, 1}});
  CHECK(hasse_diagram(T(ind, "ab")).arcs.empty());
}

TEST_CASE("lex normal form examples") {
  const auto ind = make_alphabet(2, {{0, 1}});
  CHECK(lex_normal_form(*ind, sym("ba")) == sym("ab"));
  const auto dep = make_alphabet(2, {});
  CHECK(lex_normal_form(*dep, sym("ba")) == sym("ba"));
  const auto ac = make_alphabet(3, {{0, 1}, {0, 2}});
  CHECK(lex_normal_form(*ac, sym("bca")) == sym("abc"));
}

TEST_CASE("trace equality coincides with swap reachability") {
  for (const auto& alpha : small_alphabets()) {
    for_each_symbol_word(3, 5, [&](const SymbolWord& w) {
      const auto cls = swap_class(*alpha, w);
      const Trace t(alpha, w);
      CHECK(t.word() == *cls.begin());
      CHECK(lex_normal_form(*alpha, t.word()) == t.word());
      for (const auto& v : cls) CHECK(Trace(alpha, v) == t);
    });
  }
}

TEST_CASE("prime prefixes are prefixes, one per vertex") {
  for (const auto& alpha : small_alphabets()) {
    for_each_symbol_word(3, 6, [&](const SymbolWord& w) {
      const Trace t(alpha, w);
      const auto pp = prime_prefixes(t);
      CHECK(pp.size() <= t.size());
      for (const auto& p : pp) {
        CHECK(is_prime(p));
        const auto rest = left_quotient(p, t);
        REQUIRE(rest.has_value());
        CHECK(p * *rest == t);
      }
      // Exhaustive: prime prefixes are exactly the prime traces v with t = v·x.
      std::set<SymbolWord> expected;
      for (std::size_t mask = 1; mask < (std::size_t{1} << t.size()); ++mask) {
        SymbolWord sub;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if ((mask >> i) & 1U) sub.push_back(t.word()[i]);
        }
        const Trace v(alpha, sub);
        if (is_prime(v) && left_quotient(v, t)) expected.insert(v.word());
      }
      std::set<SymbolWord> got;
      for (const auto& p : pp) got.insert(p.word());
      CHECK(got == expected);
    });
  }
}

TEST_CASE("hasse diagram is the transitive reduction") {
  for (const auto& alpha : small_alphabets()) {
    for_each_symbol_word(3, 6, [&](const SymbolWord& w) {
      const auto dg = hasse_diagram(*alpha, w);
      const std::size_t n = w.size();
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) reach[i][j] = alpha->dependent(w[i], w[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
        }
      }
      std::set<std::pair<std::size_t, std::size_t>> cover;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!reach[i][j]) continue;
          bool covered = true;
          for (std::size_t k = i + 1; k < j; ++k) covered = covered && !(reach[i][k] && reach[k][j]);
          if (covered) cover.insert({i, j});
        }
      }
      CHECK(std::set<std::pair<std::size_t, std::size_t>>(dg.arcs.begin(), dg.arcs.end()) == cover);
    });
  }
}
