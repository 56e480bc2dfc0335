#include "coxtrace/fim.hpp"

#include <algorithm>

namespace coxtrace {

namespace {

const ExtendedIndependence& require_fim(const ExtendedIndependence& ext) {
  if (ext.base.kind() != GroupKind::fim) throw KindError("operation needs kind fim");
  return ext;
}

}  // namespace

FreeInverseMonoid::FreeInverseMonoid(const GroupSpec& spec)
    : ext_(require_fim(extend_independence(spec))),
      gamma_(std::make_shared<const IndependenceAlphabet>(ext_.gamma)),
      group_(TraceRewritingSystem::graph_group(gamma_)) {}

Trace FreeInverseMonoid::group_normal_form(const Word& u) const {
  return reduce(Trace(gamma_, to_symbols(u, ext_.base)), group_);
}

MunnSet FreeInverseMonoid::munn_set(const Word& u) const {
  MunnSet out;
  Trace prefix(gamma_);
  for (Symbol s : to_symbols(u, ext_.base)) {
    prefix = reduce(prefix * Trace(gamma_, SymbolWord{s}), group_);
    auto primes = prime_prefixes(prefix);
    out.insert(out.end(), std::make_move_iterator(primes.begin()), std::make_move_iterator(primes.end()));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FreeInverseMonoid::equal(const Word& u, const Word& v) const {
  return group_normal_form(u) == group_normal_form(v) && munn_set(u) == munn_set(v);
}

MunnSet munn_set(const GroupSpec& spec, const Word& u) { return FreeInverseMonoid(spec).munn_set(u); }

bool fim_equal(const GroupSpec& spec, const Word& u, const Word& v) { return FreeInverseMonoid(spec).equal(u, v); }

std::vector<std::string> render_munn_set(const MunnSet& set, const GroupSpec& spec) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto& t : set) out.push_back(render_word(from_symbols(t.word(), spec), spec));
  return out;
}

}  // namespace coxtrace
