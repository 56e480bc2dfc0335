#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxtrace/errors.hpp"

namespace coxtrace {

// Index of a letter in a working alphabet. The numeric order is the shortlex order.
using Symbol = unsigned;
using SymbolWord = std::vector<Symbol>;

// Finite alphabet {0, ..., size-1} with a symmetric irreflexive independence relation.
// Dependence D is the complement, hence reflexive.
class IndependenceAlphabet {
 public:
  static constexpr std::size_t kMaxSymbols = 64;

  IndependenceAlphabet() = default;
  IndependenceAlphabet(std::size_t size, std::span<const std::pair<Symbol, Symbol>> independent_pairs);

  std::size_t size() const noexcept { return independent_.size(); }
  bool independent(Symbol a, Symbol b) const noexcept { return (independent_[a] >> b) & 1U; }
  bool dependent(Symbol a, Symbol b) const noexcept { return !independent(a, b); }

  // Bit b set iff (a, b) is in I (resp. D).
  std::uint64_t independent_mask(Symbol a) const noexcept { return independent_[a]; }
  std::uint64_t dependent_mask(Symbol a) const noexcept { return ~independent_[a] & full_mask(); }
  std::uint64_t full_mask() const noexcept {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

  friend bool operator==(const IndependenceAlphabet&, const IndependenceAlphabet&) = default;

 private:
  std::vector<std::uint64_t> independent_;
};

enum class GroupKind { coxeter, even_coxeter, racg, graph, fim };

std::string_view kind_name(GroupKind kind);
std::optional<GroupKind> kind_from_name(std::string_view name);

constexpr bool is_coxeter_kind(GroupKind k) {
  return k == GroupKind::coxeter || k == GroupKind::even_coxeter;
}
// Kinds whose words range over Γ = Σ ∪ Σ̄.
constexpr bool has_inverse_letters(GroupKind k) {
  return k == GroupKind::graph || k == GroupKind::fim;
}

// Symmetric matrix of naturals; 0 stands for an infinite entry.
using CoxeterMatrix = std::vector<std::vector<unsigned>>;

// A named, ordered alphabet together with either a Coxeter matrix (kinds coxeter and
// even-coxeter) or an independence relation (kinds racg, graph and fim). Immutable once built;
// the factories validate every invariant and throw ParseError on violation.
class GroupSpec {
 public:
  static GroupSpec coxeter(GroupKind kind, std::vector<std::string> letters, CoxeterMatrix matrix);
  static GroupSpec independence(GroupKind kind, std::vector<std::string> letters,
                                std::span<const std::pair<std::size_t, std::size_t>> edges);

  GroupKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::string& name(std::size_t i) const { return letters_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Coxeter kinds only.
  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  unsigned entry(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  // racg, graph and fim kinds only; the relation I over Σ.
  const IndependenceAlphabet& independence() const noexcept { return independence_; }
  bool independent(std::size_t i, std::size_t j) const {
    return independence_.independent(static_cast<Symbol>(i), static_cast<Symbol>(j));
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec() = default;

  GroupKind kind_ = GroupKind::coxeter;
  std::vector<std::string> letters_;
  CoxeterMatrix matrix_;
  IndependenceAlphabet independence_;
};

// Letter names are tokens over [a-z0-9_].
bool is_valid_letter_name(std::string_view name);

GroupSpec parse_group_spec(std::string_view text);
std::string render_group_spec(const GroupSpec& spec);

// The right-angled Coxeter group of `spec` viewed as a Coxeter matrix: 2 on edges, 0 elsewhere.
GroupSpec racg_as_coxeter(const GroupSpec& spec);

struct Letter {
  std::size_t index = 0;
  bool inverted = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Tokens joined by '.', or an undotted run when every letter name has one character.
// A trailing apostrophe marks a formal inverse (graph and fim kinds only). "1" and the
// empty string denote the empty word unless "1" is itself a letter.
Word parse_word(std::string_view text, const GroupSpec& spec);
// Dotted rendering; "1" for the empty word.
std::string render_word(const Word& word, const GroupSpec& spec);
// Inverse in the group: reversal, flipping formal inverses for graph and fim kinds.
Word inverse_word(const Word& word, const GroupSpec& spec);

// (Γ, I_Γ) for a graph-group spec. Symbol 2i is the i-th letter, 2i+1 its formal inverse,
// which yields the order a < ā < b < b̄ < ...
struct ExtendedIndependence {
  GroupSpec base;
  IndependenceAlphabet gamma;

  static constexpr Symbol symbol(Letter l) { return static_cast<Symbol>(2 * l.index + (l.inverted ? 1 : 0)); }
  static constexpr Letter letter(Symbol s) { return Letter{s / 2, (s & 1U) != 0}; }
  static constexpr Symbol bar(Symbol s) { return s ^ 1U; }
};

// Requires kind graph or fim.
ExtendedIndependence extend_independence(const GroupSpec& spec);

// Working-alphabet view of a word: Σ-indices for Coxeter and racg kinds, Γ-indices
// (see ExtendedIndependence) for graph and fim kinds.
SymbolWord to_symbols(const Word& word, const GroupSpec& spec);
Word from_symbols(const SymbolWord& symbols, const GroupSpec& spec);

}  // namespace coxtrace
