#include "coxtrace/racg.hpp"

#include <algorithm>
#include <string>

#include "coxtrace/trace.hpp"

namespace coxtrace {

namespace {

void require_kind(const GroupSpec& spec, GroupKind kind) {
  if (spec.kind() != kind) {
    throw KindError("operation needs kind " + std::string(kind_name(kind)) + ", got " +
                    std::string(kind_name(spec.kind())));
  }
}

struct Overflow {};

// v <- σ_a(v) on a vector with the x slot last. Throws Overflow if int64 does not suffice.
template <typename Int>
void apply_generator(const IndependenceAlphabet& alphabet, Symbol a, std::vector<Int>& v) {
  const std::size_t n = alphabet.size();
  const std::uint64_t neighbours = alphabet.dependent_mask(a) & ~(std::uint64_t{1} << a);
  if constexpr (std::is_same_v<Int, std::int64_t>) {
    std::int64_t sum = v[n];
    for (std::size_t b = 0; b < n; ++b) {
      if (((neighbours >> b) & 1U) && __builtin_add_overflow(sum, v[b], &sum)) throw Overflow{};
    }
    std::int64_t twice = 0;
    if (__builtin_mul_overflow(sum, std::int64_t{2}, &twice) || __builtin_sub_overflow(twice, v[a], &v[a])) {
      throw Overflow{};
    }
  } else {
    Int sum = v[n];
    for (std::size_t b = 0; b < n; ++b) {
      if ((neighbours >> b) & 1U) sum += v[b];
    }
    v[a] = 2 * sum - v[a];
  }
}

template <typename Int>
std::uint64_t support(const std::vector<Int>& v, std::size_t n) {
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < n; ++b) {
    if (v[b] != 0) mask |= std::uint64_t{1} << b;
  }
  return mask;
}

template <typename Int>
std::vector<Int> sigma_apply_as(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol d) {
  std::vector<Int> v(alphabet.size() + 1, Int(0));
  v[d] = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply_generator(alphabet, *it, v);
  return v;
}

// windows[p][q] for p < q: the window strictly between the p-th and q-th occurrence of a
// has its Coxeter-trace alphabet inside I(a). Per right end, σ(x) grows leftwards one
// generator at a time, so every window is read off in a single sweep.
template <typename Int>
std::vector<std::vector<bool>> window_table(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol a,
                                            const std::vector<std::size_t>& positions) {
  const std::size_t n = alphabet.size();
  const std::uint64_t outside = ~alphabet.independent_mask(a) & alphabet.full_mask();
  std::vector<std::vector<bool>> table(positions.size(), std::vector<bool>(positions.size(), false));
  for (std::size_t q = 1; q < positions.size(); ++q) {
    std::vector<Int> v(n + 1, Int(0));
    v[n] = 1;
    std::size_t p = q;
    for (std::size_t i = positions[q]; i-- > positions[0];) {
      if (w[i] == a) {
        --p;
        table[p][q] = (support(v, n) & outside) == 0;
      }
      apply_generator(alphabet, w[i], v);
    }
  }
  return table;
}

}  // namespace

IntVector racg_sigma_apply(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol d) {
  return sigma_apply_as<mpz_class>(alphabet, w, d);
}

IntVector racg_sigma_apply(const GroupSpec& spec, const Word& w, std::size_t d) {
  require_kind(spec, GroupKind::racg);
  if (d > spec.size()) throw std::out_of_range("letter index out of range");
  return racg_sigma_apply(spec.independence(), to_symbols(w, spec), static_cast<Symbol>(d));
}

std::uint64_t normal_form_alphabet(const IndependenceAlphabet& alphabet, std::span<const Symbol> w) {
  const auto x = static_cast<Symbol>(alphabet.size());
  try {
    return support(sigma_apply_as<std::int64_t>(alphabet, w, x), alphabet.size());
  } catch (const Overflow&) {
    return support(sigma_apply_as<mpz_class>(alphabet, w, x), alphabet.size());
  }
}

std::vector<std::size_t> normal_form_alphabet(const GroupSpec& spec, const Word& w) {
  require_kind(spec, GroupKind::racg);
  const auto mask = normal_form_alphabet(spec.independence(), to_symbols(w, spec));
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < spec.size(); ++b) {
    if ((mask >> b) & 1U) out.push_back(b);
  }
  return out;
}

SymbolWord a_short_pass(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol a) {
  std::vector<std::size_t> positions;
  std::vector<std::size_t> rank_of(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == a) {
      rank_of[i] = positions.size();
      positions.push_back(i);
    }
  }
  if (positions.size() < 2) return SymbolWord(w.begin(), w.end());

  std::vector<std::vector<bool>> windows;
  try {
    windows = window_table<std::int64_t>(alphabet, w, a, positions);
  } catch (const Overflow&) {
    windows = window_table<mpz_class>(alphabet, w, a, positions);
  }

  SymbolWord out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != a) {
      out.push_back(w[i++]);
      continue;
    }
    const std::size_t p = rank_of[i];
    std::size_t q = positions.size();
    for (std::size_t k = p + 1; k < positions.size(); ++k) {
      if (windows[p][k]) q = k;
    }
    if (q == positions.size()) {
      out.push_back(w[i++]);
      continue;
    }
    for (std::size_t k = i; k < positions[q]; ++k) {
      if (w[k] != a) out.push_back(w[k]);
    }
    i = positions[q] + 1;
  }
  return out;
}

Word a_short_pass(const GroupSpec& spec, const Word& w, std::size_t a) {
  require_kind(spec, GroupKind::racg);
  return from_symbols(a_short_pass(spec.independence(), to_symbols(w, spec), static_cast<Symbol>(a)), spec);
}

SymbolWord shortlex_racg(const IndependenceAlphabet& alphabet, std::span<const Symbol> w) {
  SymbolWord current(w.begin(), w.end());
  for (Symbol a = 0; a < alphabet.size(); ++a) current = a_short_pass(alphabet, current, a);
  return lex_normal_form(alphabet, current);
}

Word shortlex_racg(const GroupSpec& spec, const Word& w) {
  require_kind(spec, GroupKind::racg);
  return from_symbols(shortlex_racg(spec.independence(), to_symbols(w, spec)), spec);
}

Word embed_phi(const GroupSpec& spec, const Word& w) {
  require_kind(spec, GroupKind::graph);
  Word out;
  out.reserve(2 * w.size());
  for (const auto& l : w) {
    out.push_back(l);
    out.push_back(Letter{l.index, !l.inverted});
  }
  return out;
}

SymbolWord shortlex_graph_group(const ExtendedIndependence& ext, std::span<const Symbol> w) {
  const auto& gamma = ext.gamma;
  SymbolWord phi;
  phi.reserve(2 * w.size());
  for (Symbol s : w) {
    phi.push_back(s);
    phi.push_back(ExtendedIndependence::bar(s));
  }
  const SymbolWord normal = shortlex_racg(gamma, phi);
  const auto hasse = hasse_diagram(gamma, normal);

  // Along each chain of {a, ā}-vertices the φ-images appear as consecutive pairs x·x̄.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> open(gamma.size() / 2, kNone);
  SymbolWord contracted;
  for (std::size_t v = 0; v < normal.size(); ++v) {
    const Symbol s = normal[v];
    auto& slot = open[s / 2];
    if (slot == kNone) {
      slot = v;
      contracted.push_back(s);
      continue;
    }
    const bool covering = std::binary_search(hasse.arcs.begin(), hasse.arcs.end(), std::pair{slot, v});
    if (normal[slot] != ExtendedIndependence::bar(s) || !covering) {
      throw InternalFault("right-angled normal form of a φ-image does not pair up");
    }
    slot = kNone;
  }
  if (std::any_of(open.begin(), open.end(), [](std::size_t o) { return o != kNone; })) {
    throw InternalFault("right-angled normal form of a φ-image has an unpaired vertex");
  }
  return lex_normal_form(gamma, contracted);
}

Word shortlex_graph_group(const GroupSpec& spec, const Word& w) {
  require_kind(spec, GroupKind::graph);
  const auto ext = extend_independence(spec);
  return from_symbols(shortlex_graph_group(ext, to_symbols(w, spec)), spec);
}

}  // namespace coxtrace
