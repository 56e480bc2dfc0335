#pragma once

#include <vector>

#include "coxtrace/trace.hpp"

namespace coxtrace {

struct RewriteRule {
  Trace left;
  Trace right;
};

// Finite length-reducing trace rewriting system over one independence alphabet.
//
// reduce() yields the unique irreducible descendant only when the system is confluent
// and terminating; S_C and S_G (the two factories) are, arbitrary rule sets need not be.
class TraceRewritingSystem {
 public:
  TraceRewritingSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules);

  // S_C = { a·a -> 1 }: the right-angled Coxeter group C(Σ, I).
  static TraceRewritingSystem coxeter(AlphabetPtr alphabet);
  // S_G = { x·x̄ -> 1 } on (Γ, I_Γ) with x̄ = x xor 1: the graph group G(Σ, I).
  static TraceRewritingSystem graph_group(AlphabetPtr gamma);

  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  // Every rule is x·y -> 1 with I(x) = I(y); then a factor x·y of a trace shows up as
  // x·v·y in any representative word with α(v) ⊆ I(x), which allows a plain word scan.
  bool is_cancellation_system() const noexcept { return cancellation_; }
  std::uint64_t cancels_with(Symbol x) const noexcept { return partners_[x]; }

 private:
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  bool cancellation_ = false;
  std::vector<std::uint64_t> partners_;
};

Trace reduce(const Trace& t, const TraceRewritingSystem& system);
bool is_irreducible(const Trace& t, const TraceRewritingSystem& system);

// Every t' with t -> t' in one step, found by matching each rule's left side against the
// convex subsets of DG(t). Independent of the cancellation fast path.
std::vector<Trace> one_step_rewrites(const Trace& t, const TraceRewritingSystem& system);

}  // namespace coxtrace
