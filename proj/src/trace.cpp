#include "coxtrace/trace.hpp"

#include <algorithm>
#include <numeric>

namespace coxtrace {

namespace {

constexpr std::uint64_t bit(Symbol s) { return std::uint64_t{1} << s; }

// Rows of a square bit matrix; below[j] has bit i set iff vertex i strictly precedes j.
class BitRows {
 public:
  explicit BitRows(std::size_t n) : words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool test(std::size_t row, std::size_t col) const { return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U; }
  void set(std::size_t row, std::size_t col) { bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64); }
  void merge(std::size_t into, std::size_t from) {
    for (std::size_t w = 0; w < words_; ++w) bits_[into * words_ + w] |= bits_[from * words_ + w];
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

BitRows strict_predecessors(const IndependenceAlphabet& alphabet, std::span<const Symbol> word) {
  const std::size_t n = word.size();
  BitRows below(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (alphabet.dependent(word[i], word[j]) && !below.test(j, i)) {
        below.set(j, i);
        below.merge(j, i);
      }
    }
  }
  return below;
}

}  // namespace

SymbolWord lex_normal_form(const IndependenceAlphabet& alphabet, std::span<const Symbol> word,
                           std::span<const unsigned> rank) {
  std::vector<Symbol> remaining(word.begin(), word.end());
  SymbolWord out;
  out.reserve(remaining.size());
  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    std::uint64_t pending = 0;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      const Symbol s = remaining[j];
      if ((alphabet.dependent_mask(s) & pending) == 0 && (best == remaining.size() || rank[s] < rank[remaining[best]])) {
        best = j;
      }
      pending |= bit(s);
    }
    out.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

SymbolWord lex_normal_form(const IndependenceAlphabet& alphabet, std::span<const Symbol> word) {
  std::vector<unsigned> rank(alphabet.size());
  std::iota(rank.begin(), rank.end(), 0U);
  return lex_normal_form(alphabet, word, rank);
}

Trace::Trace(AlphabetPtr alphabet, std::span<const Symbol> word)
    : alphabet_(std::move(alphabet)), word_(lex_normal_form(*alphabet_, word)) {}

Trace Trace::operator*(const Trace& rhs) const {
  SymbolWord joined = word_;
  joined.insert(joined.end(), rhs.word_.begin(), rhs.word_.end());
  return Trace(alphabet_, joined);
}

std::uint64_t alphabet_mask(std::span<const Symbol> word) {
  std::uint64_t mask = 0;
  for (Symbol s : word) mask |= bit(s);
  return mask;
}

std::vector<Symbol> trace_alphabet(const Trace& t) {
  std::vector<Symbol> out;
  const auto mask = alphabet_mask(t.word());
  for (Symbol s = 0; s < t.alphabet().size(); ++s) {
    if ((mask >> s) & 1U) out.push_back(s);
  }
  return out;
}

bool is_prime(const Trace& t) {
  const auto& w = t.word();
  const auto& alphabet = t.alphabet();
  std::size_t maximal = 0;
  std::uint64_t later = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    if ((alphabet.dependent_mask(w[i]) & later) == 0) ++maximal;
    later |= bit(w[i]);
  }
  return maximal == 1;
}

std::vector<Trace> prime_prefixes(const Trace& t) {
  const auto& w = t.word();
  const auto& alphabet = t.alphabet();
  std::vector<Trace> out;
  out.reserve(w.size());
  for (std::size_t top = 0; top < w.size(); ++top) {
    // Scanning leftwards, a vertex lies below `top` iff it depends on some label already taken.
    std::vector<Symbol> downset{w[top]};
    std::uint64_t taken = bit(w[top]);
    for (std::size_t i = top; i-- > 0;) {
      if (alphabet.dependent_mask(w[i]) & taken) {
        downset.push_back(w[i]);
        taken |= bit(w[i]);
      }
    }
    std::reverse(downset.begin(), downset.end());
    out.emplace_back(t.alphabet_ptr(), downset);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Trace> left_quotient(const Trace& v, const Trace& t) {
  const auto& alphabet = t.alphabet();
  std::vector<Symbol> rest = t.word();
  for (Symbol s : v.word()) {
    std::uint64_t pending = 0;
    std::size_t found = rest.size();
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == s) {
        found = j;
        break;
      }
      pending |= bit(rest[j]);
    }
    if (found == rest.size() || (alphabet.dependent_mask(s) & pending) != 0) return std::nullopt;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(found));
  }
  return Trace(t.alphabet_ptr(), rest);
}

DependenceGraph dependence_graph(const Trace& t) {
  DependenceGraph g{t.word(), {}};
  for (std::size_t j = 0; j < g.labels.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (t.alphabet().dependent(g.labels[i], g.labels[j])) g.arcs.emplace_back(i, j);
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

DependenceGraph hasse_diagram(const IndependenceAlphabet& alphabet, std::span<const Symbol> word) {
  const auto below = strict_predecessors(alphabet, word);
  DependenceGraph g{SymbolWord(word.begin(), word.end()), {}};
  const std::size_t n = word.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!alphabet.dependent(word[i], word[j])) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) {
        if (below.test(k, i) && below.test(j, k)) covered = false;
      }
      if (covered) g.arcs.emplace_back(i, j);
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

DependenceGraph hasse_diagram(const Trace& t) { return hasse_diagram(t.alphabet(), t.word()); }

}  // namespace coxtrace
