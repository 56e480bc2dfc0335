#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coxtrace/alphabet.hpp"

namespace coxtrace {

using AlphabetPtr = std::shared_ptr<const IndependenceAlphabet>;

// Vertices 0..n-1 labelled by symbols; arcs (i, j) with i < j.
struct DependenceGraph {
  SymbolWord labels;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

// Lexicographically least linearization of DG(word) for the symbol ranking `rank`
// (rank[s] is the position of s in the linear order). Emits, step by step, the least
// label among the currently minimal vertices.
SymbolWord lex_normal_form(const IndependenceAlphabet& alphabet, std::span<const Symbol> word,
                           std::span<const unsigned> rank);
// Same, under the natural symbol order.
SymbolWord lex_normal_form(const IndependenceAlphabet& alphabet, std::span<const Symbol> word);

// Element of the trace monoid M(Σ, I), stored as the lexicographic normal form of its
// class under the natural symbol order, so equality is word equality.
class Trace {
 public:
  explicit Trace(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  Trace(AlphabetPtr alphabet, std::span<const Symbol> word);

  const SymbolWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  const IndependenceAlphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  Trace operator*(const Trace& rhs) const;

  friend bool operator==(const Trace& a, const Trace& b) { return a.word_ == b.word_; }
  // Shortlex: by length, then lexicographically on the canonical word.
  friend bool shortlex_less(const Trace& a, const Trace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.word_ < b.word_;
  }

 private:
  AlphabetPtr alphabet_;
  SymbolWord word_;
};

bool shortlex_less(const Trace& a, const Trace& b);

// α(t), ascending.
std::vector<Symbol> trace_alphabet(const Trace& t);
std::uint64_t alphabet_mask(std::span<const Symbol> word);

// True iff DG(t) has exactly one maximal vertex; the empty trace is not prime.
bool is_prime(const Trace& t);

// All prime v with t = v·x, sorted shortlex. One per vertex of DG(t): the vertex's downset.
std::vector<Trace> prime_prefixes(const Trace& t);

// x with t = v·x, if v is a prefix of t.
std::optional<Trace> left_quotient(const Trace& v, const Trace& t);

// Over the canonical word of t.
DependenceGraph dependence_graph(const Trace& t);
DependenceGraph hasse_diagram(const Trace& t);
DependenceGraph hasse_diagram(const IndependenceAlphabet& alphabet, std::span<const Symbol> word);

}  // namespace coxtrace
