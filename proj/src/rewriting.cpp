#include "coxtrace/rewriting.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace coxtrace {

namespace {

struct Redex {
  std::size_t left;
  std::size_t right;
};

// Leftmost x·v·y with x·y -> 1 a rule and α(v) ⊆ I(x).
std::optional<Redex> find_cancellation(const SymbolWord& w, const TraceRewritingSystem& system) {
  const auto& alphabet = *system.alphabet_ptr();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto partners = system.cancels_with(w[i]);
    if (partners == 0) continue;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if ((partners >> w[j]) & 1U) return Redex{i, j};
      if (alphabet.dependent(w[i], w[j])) break;
    }
  }
  return std::nullopt;
}

SymbolWord erase_pair(const SymbolWord& w, Redex r) {
  SymbolWord out;
  out.reserve(w.size() - 2);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != r.left && k != r.right) out.push_back(w[k]);
  }
  return out;
}

class ConvexMatcher {
 public:
  explicit ConvexMatcher(const Trace& t) : t_(t), n_(t.size()), below_(n_ * n_, false) {
    const auto& w = t.word();
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!t.alphabet().dependent(w[i], w[j])) continue;
        below_[j * n_ + i] = true;
        for (std::size_t k = 0; k < i; ++k) {
          if (below_[i * n_ + k]) below_[j * n_ + k] = true;
        }
      }
    }
  }

  // Calls emit(result) for every occurrence of rule.left; stops early when emit returns true.
  template <typename Emit>
  bool for_each_match(const RewriteRule& rule, Emit&& emit) const {
    const auto& w = t_.word();
    const auto& left = rule.left.word();
    std::vector<Symbol> letters;
    std::vector<std::size_t> need;
    for (Symbol s : left) {
      auto it = std::find(letters.begin(), letters.end(), s);
      if (it == letters.end()) {
        letters.push_back(s);
        need.push_back(1);
      } else {
        ++need[static_cast<std::size_t>(it - letters.begin())];
      }
    }
    std::vector<std::vector<std::size_t>> occurrences(letters.size());
    for (std::size_t k = 0; k < n_; ++k) {
      auto it = std::find(letters.begin(), letters.end(), w[k]);
      if (it != letters.end()) occurrences[static_cast<std::size_t>(it - letters.begin())].push_back(k);
    }
    for (std::size_t l = 0; l < letters.size(); ++l) {
      if (occurrences[l].size() < need[l]) return false;
    }

    // Same-letter vertices form a chain, so a convex occurrence uses consecutive ones.
    std::vector<std::size_t> start(letters.size(), 0);
    while (true) {
      std::vector<bool> in(n_, false);
      for (std::size_t l = 0; l < letters.size(); ++l) {
        for (std::size_t c = 0; c < need[l]; ++c) in[occurrences[l][start[l] + c]] = true;
      }
      if (auto result = rewrite_at(in, rule)) {
        if (emit(*result)) return true;
      }
      std::size_t l = 0;
      while (l < letters.size() && ++start[l] + need[l] > occurrences[l].size()) start[l++] = 0;
      if (l == letters.size()) return false;
    }
  }

 private:
  bool precedes(std::size_t i, std::size_t j) const { return below_[j * n_ + i]; }

  std::optional<Trace> rewrite_at(const std::vector<bool>& in, const RewriteRule& rule) const {
    const auto& w = t_.word();
    SymbolWord inner, before, after;
    for (std::size_t k = 0; k < n_; ++k) {
      if (in[k]) {
        inner.push_back(w[k]);
        continue;
      }
      bool above_some = false, below_some = false;
      for (std::size_t p = 0; p < n_; ++p) {
        if (!in[p]) continue;
        above_some = above_some || precedes(p, k);
        below_some = below_some || precedes(k, p);
      }
      if (above_some && below_some) return std::nullopt;
      (below_some ? before : after).push_back(w[k]);
    }
    if (lex_normal_form(t_.alphabet(), inner) != rule.left.word()) return std::nullopt;
    before.insert(before.end(), rule.right.word().begin(), rule.right.word().end());
    before.insert(before.end(), after.begin(), after.end());
    return Trace(t_.alphabet_ptr(), before);
  }

  const Trace& t_;
  std::size_t n_;
  std::vector<bool> below_;
};

}  // namespace

TraceRewritingSystem::TraceRewritingSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), partners_(alphabet_->size(), 0) {
  cancellation_ = true;
  for (const auto& r : rules_) {
    if (r.left.size() <= r.right.size()) throw std::invalid_argument("rewriting rule is not length-reducing");
    if (!(*r.left.alphabet_ptr() == *alphabet_) || !(*r.right.alphabet_ptr() == *alphabet_)) {
      throw std::invalid_argument("rewriting rule over a different alphabet");
    }
    const auto& l = r.left.word();
    // The canonical word of x·y may be y·x when x, y commute; then no scan finds x·v·y reliably.
    if (l.size() != 2 || !r.right.empty() || alphabet_->independent(l[0], l[1]) ||
        alphabet_->independent_mask(l[0]) != alphabet_->independent_mask(l[1])) {
      cancellation_ = false;
      continue;
    }
    partners_[l[0]] |= std::uint64_t{1} << l[1];
  }
  if (!cancellation_) std::fill(partners_.begin(), partners_.end(), 0);
}

TraceRewritingSystem TraceRewritingSystem::coxeter(AlphabetPtr alphabet) {
  std::vector<RewriteRule> rules;
  for (Symbol a = 0; a < alphabet->size(); ++a) {
    rules.push_back({Trace(alphabet, SymbolWord{a, a}), Trace(alphabet)});
  }
  return TraceRewritingSystem(alphabet, std::move(rules));
}

TraceRewritingSystem TraceRewritingSystem::graph_group(AlphabetPtr gamma) {
  if (gamma->size() % 2 != 0) throw std::invalid_argument("Γ must pair each letter with its formal inverse");
  std::vector<RewriteRule> rules;
  for (Symbol a = 0; a < gamma->size(); ++a) {
    rules.push_back({Trace(gamma, SymbolWord{a, a ^ 1U}), Trace(gamma)});
  }
  return TraceRewritingSystem(gamma, std::move(rules));
}

Trace reduce(const Trace& t, const TraceRewritingSystem& system) {
  if (system.is_cancellation_system()) {
    SymbolWord w = t.word();
    while (auto redex = find_cancellation(w, system)) {
      w = lex_normal_form(*system.alphabet_ptr(), erase_pair(w, *redex));
    }
    return Trace(t.alphabet_ptr(), w);
  }

  Trace current = t;
  while (true) {
    std::optional<Trace> next;
    const ConvexMatcher matcher(current);
    for (const auto& rule : system.rules()) {
      if (matcher.for_each_match(rule, [&](const Trace& r) {
            next = r;
            return true;
          })) {
        break;
      }
    }
    if (!next) return current;
    current = std::move(*next);
  }
}

bool is_irreducible(const Trace& t, const TraceRewritingSystem& system) {
  if (system.is_cancellation_system()) return !find_cancellation(t.word(), system).has_value();
  const ConvexMatcher matcher(t);
  for (const auto& rule : system.rules()) {
    if (matcher.for_each_match(rule, [](const Trace&) { return true; })) return false;
  }
  return true;
}

std::vector<Trace> one_step_rewrites(const Trace& t, const TraceRewritingSystem& system) {
  std::vector<Trace> out;
  const ConvexMatcher matcher(t);
  for (const auto& rule : system.rules()) {
    matcher.for_each_match(rule, [&](const Trace& r) {
      out.push_back(r);
      return false;
    });
  }
  return out;
}

}  // namespace coxtrace
