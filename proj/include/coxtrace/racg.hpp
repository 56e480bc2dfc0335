#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "coxtrace/alphabet.hpp"

namespace coxtrace {

// Coefficients over Z, indexed by symbol, with one trailing slot for the adjoined letter x.
using IntVector = std::vector<mpz_class>;

// The integer geometric representation of C(Σ, I):
//   σ_a(a) = -a,  σ_a(b) = b for (a, b) in I,  σ_a(b) = b + 2a for (a, b) in D, a ≠ b,
// extended by a letter x (symbol alphabet.size()) that depends on every letter.
// Returns σ_w(d), computed right to left.
IntVector racg_sigma_apply(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol d);
// Requires kind racg; d == spec.size() selects x.
IntVector racg_sigma_apply(const GroupSpec& spec, const Word& w, std::size_t d);

// α of the Coxeter-trace of w: the b with λ_b ≠ 0 in σ_w(x). Bit b of the mask.
std::uint64_t normal_form_alphabet(const IndependenceAlphabet& alphabet, std::span<const Symbol> w);
std::vector<std::size_t> normal_form_alphabet(const GroupSpec& spec, const Word& w);

// One elimination pass for letter a. Left to right: at an occurrence a_i = a, find the
// largest j > i with a_j = a whose window a_{i+1} ⋯ a_{j-1} has its Coxeter-trace alphabet
// inside I(a); if there is one, emit the window without its a's and resume after j,
// otherwise keep a_i. The result equals w in C(Σ, I), is a-short, and keeps every
// b-shortness of w.
SymbolWord a_short_pass(const IndependenceAlphabet& alphabet, std::span<const Symbol> w, Symbol a);
Word a_short_pass(const GroupSpec& spec, const Word& w, std::size_t a);

// Passes for every letter in order, then the lexicographic normal form of the resulting
// Coxeter-trace.
SymbolWord shortlex_racg(const IndependenceAlphabet& alphabet, std::span<const Symbol> w);
Word shortlex_racg(const GroupSpec& spec, const Word& w);

// φ(a) = a·ā and φ(ā) = ā·a, a word over Γ read as letters of C(Γ, I_Γ). Requires kind graph.
Word embed_phi(const GroupSpec& spec, const Word& w);

// Shortlex normal form in G(Σ, I) through C(Γ, I_Γ): normalize φ(w) there, then contract
// each covering pair x·x̄ of the Hasse diagram back to x.
SymbolWord shortlex_graph_group(const ExtendedIndependence& ext, std::span<const Symbol> w);
Word shortlex_graph_group(const GroupSpec& spec, const Word& w);

}  // namespace coxtrace
