#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxtrace/alphabet.hpp"

// Brute-force ground truth. Nothing here touches traces or the geometric representation:
// answers come from exhaustive closure under raw word moves.
namespace coxtrace::oracle {

struct Limits {
  std::size_t max_length = 10;
  std::size_t max_letters = 3;
  std::size_t max_states = 2'000'000;
};

// All geodesics of w in a Coxeter group (kinds coxeter, even-coxeter, racg), sorted
// lexicographically: the shortest words reachable from w by braid moves
// (aba⋯ <-> bab⋯, both of length m_ab) and deletions a·a -> 1.
std::vector<Word> tits_closure(const GroupSpec& spec, const Word& w, const Limits& limits = {});

// All geodesics of w in a graph group (kinds graph, fim), sorted with a < a' < b < b' < ⋯:
// the shortest words reachable by swapping adjacent commuting letters and deleting x·x̄.
std::vector<Word> swap_cancel_closure(const GroupSpec& spec, const Word& w, const Limits& limits = {});

// Whichever closure fits the kind.
std::vector<Word> geodesics(const GroupSpec& spec, const Word& w, const Limits& limits = {});

Word shortlex(const GroupSpec& spec, const Word& w, const Limits& limits = {});
bool equal(const GroupSpec& spec, const Word& u, const Word& v, const Limits& limits = {});

// Geodesics with memory, for sweeps over many words of one spec. Braid moves and swaps are
// reversible and keep length while deletions shorten, so every word of the start's length in
// a closure has that very closure; all of them are answered from one search.
class Memo {
 public:
  explicit Memo(GroupSpec spec, Limits limits = {});
  const std::vector<Word>& geodesics(const Word& w);

 private:
  GroupSpec spec_;
  Limits limits_;
  std::unordered_map<std::string, std::size_t> index_;
  std::deque<std::vector<Word>> results_;
};

}  // namespace coxtrace::oracle
