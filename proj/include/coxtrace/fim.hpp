#pragma once

#include <string>
#include <vector>

#include "coxtrace/alphabet.hpp"
#include "coxtrace/rewriting.hpp"
#include "coxtrace/trace.hpp"

namespace coxtrace {

// Prime traces over (Γ, I_Γ), sorted shortlex, without repeats.
using MunnSet = std::vector<Trace>;

// Word problem of the free partially commutative inverse monoid FIM(Σ, I): u = v there
// iff u = v in the graph group G(Σ, I) and M(u) = M(v).
class FreeInverseMonoid {
 public:
  // Requires kind fim.
  explicit FreeInverseMonoid(const GroupSpec& spec);

  const GroupSpec& spec() const noexcept { return ext_.base; }
  const AlphabetPtr& gamma() const noexcept { return gamma_; }

  // The S_G-irreducible trace of u in M(Γ, I_Γ).
  Trace group_normal_form(const Word& u) const;
  // Union over the prefixes a_1 ⋯ a_i of the prime prefixes of their S_G-normal forms.
  MunnSet munn_set(const Word& u) const;
  bool equal(const Word& u, const Word& v) const;

 private:
  ExtendedIndependence ext_;
  AlphabetPtr gamma_;
  TraceRewritingSystem group_;
};

MunnSet munn_set(const GroupSpec& spec, const Word& u);
bool fim_equal(const GroupSpec& spec, const Word& u, const Word& v);

// One dotted canonical word per member, in set order.
std::vector<std::string> render_munn_set(const MunnSet& set, const GroupSpec& spec);

}  // namespace coxtrace
