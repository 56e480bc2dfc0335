#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coxtrace/alphabet.hpp"

namespace coxtrace::testing {

inline GroupSpec spec_from(const std::string& text) { return parse_group_spec(text); }

inline std::vector<std::string> default_letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

// Every Coxeter spec on n letters with off-diagonal entries drawn from `values`.
inline std::vector<GroupSpec> all_coxeter_specs(std::size_t n, const std::vector<unsigned>& values) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<GroupSpec> out;
  std::vector<std::size_t> choice(pairs.size(), 0);
  while (true) {
    CoxeterMatrix m(n, std::vector<unsigned>(n, 1));
    bool even = true;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const unsigned v = values[choice[p]];
      m[pairs[p].first][pairs[p].second] = m[pairs[p].second][pairs[p].first] = v;
      even = even && v % 2 == 0;
    }
    out.push_back(GroupSpec::coxeter(even ? GroupKind::even_coxeter : GroupKind::coxeter, default_letters(n), m));
    std::size_t p = 0;
    while (p < pairs.size() && ++choice[p] == values.size()) choice[p++] = 0;
    if (p == pairs.size()) break;
  }
  return out;
}

// Every independence relation on n letters.
inline std::vector<GroupSpec> all_independence_specs(GroupKind kind, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<GroupSpec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) edges.push_back(pairs[p]);
    }
    out.push_back(GroupSpec::independence(kind, default_letters(n), edges));
  }
  return out;
}

// Calls f on every word of length <= max_length over `letters`, in shortlex order.
inline void for_each_word(const std::vector<Letter>& letters, std::size_t max_length,
                          const std::function<void(const Word&)>& f) {
  Word w;
  f(w);
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      w.clear();
      for (auto i : idx) w.push_back(letters[i]);
      f(w);
      std::size_t p = len;
      while (p > 0 && ++idx[p - 1] == letters.size()) idx[--p] = 0;
      if (p == 0) break;
    }
  }
}

inline std::vector<Letter> plain_letters(std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({i, false});
  return out;
}

inline std::vector<Letter> gamma_letters(std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<Letter>& letters, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w(len(rng));
  for (auto& l : w) l = letters[pick(rng)];
  return w;
}

inline Word W(const std::string& text, const GroupSpec& spec) { return parse_word(text, spec); }

}  // namespace coxtrace::testing
