#include "coxtrace/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace coxtrace::oracle {

namespace {

// Words are strings of letter codes whose byte order is the shortlex order.
using Code = std::string;

void check_limits(const GroupSpec& spec, const Word& w, const Limits& limits) {
  if (w.size() > limits.max_length) {
    throw BoundExceeded("oracle word length " + std::to_string(w.size()) + " exceeds bound " +
                        std::to_string(limits.max_length));
  }
  if (spec.size() > limits.max_letters) {
    throw BoundExceeded("oracle alphabet size " + std::to_string(spec.size()) + " exceeds bound " +
                        std::to_string(limits.max_letters));
  }
}

Code encode(const GroupSpec& spec, const Word& w) {
  const bool gamma = has_inverse_letters(spec.kind());
  Code out;
  for (const auto& l : w) out.push_back(static_cast<char>(gamma ? 2 * l.index + (l.inverted ? 1 : 0) : l.index));
  return out;
}

Word decode(const GroupSpec& spec, const Code& code) {
  const bool gamma = has_inverse_letters(spec.kind());
  Word out;
  for (char c : code) {
    const auto v = static_cast<std::size_t>(static_cast<unsigned char>(c));
    out.push_back(gamma ? Letter{v / 2, (v & 1U) != 0} : Letter{v, false});
  }
  return out;
}

struct Closure {
  std::unordered_set<Code> seen;
  std::vector<Word> minimal;
};

template <typename Moves>
Closure closure(const GroupSpec& spec, const Word& w, const Limits& limits, Moves&& moves) {
  std::unordered_set<Code> seen;
  std::deque<Code> queue;
  const Code start = encode(spec, w);
  seen.insert(start);
  queue.push_back(start);
  std::size_t shortest = start.size();
  while (!queue.empty()) {
    const Code current = std::move(queue.front());
    queue.pop_front();
    shortest = std::min(shortest, current.size());
    moves(current, [&](Code next) {
      if (seen.insert(next).second) {
        if (seen.size() > limits.max_states) {
          throw BoundExceeded("oracle closure exceeds " + std::to_string(limits.max_states) + " words");
        }
        queue.push_back(std::move(next));
      }
    });
  }
  std::vector<Code> minimal;
  for (const auto& c : seen) {
    if (c.size() == shortest) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  Closure out;
  for (const auto& c : minimal) out.minimal.push_back(decode(spec, c));
  out.seen = std::move(seen);
  return out;
}

Closure tits(const GroupSpec& spec, const Word& w, const Limits& limits);
Closure swap_cancel(const GroupSpec& spec, const Word& w, const Limits& limits);

}  // namespace

std::vector<Word> tits_closure(const GroupSpec& spec, const Word& w, const Limits& limits) {
  return tits(spec, w, limits).minimal;
}

std::vector<Word> swap_cancel_closure(const GroupSpec& spec, const Word& w, const Limits& limits) {
  return swap_cancel(spec, w, limits).minimal;
}

namespace {

Closure tits(const GroupSpec& spec, const Word& w, const Limits& limits) {
  if (has_inverse_letters(spec.kind())) throw KindError("Tits moves need a Coxeter or racg spec");
  check_limits(spec, w, limits);
  const std::size_t n = spec.size();
  std::vector<std::vector<unsigned>> order(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        order[i][j] = 1;
      } else if (is_coxeter_kind(spec.kind())) {
        order[i][j] = spec.entry(i, j);
      } else {
        order[i][j] = spec.independent(i, j) ? 2 : 0;
      }
    }
  }

  return closure(spec, w, limits, [&](const Code& c, auto&& emit) {
    for (std::size_t p = 0; p + 1 < c.size(); ++p) {
      const auto a = static_cast<unsigned char>(c[p]);
      const auto b = static_cast<unsigned char>(c[p + 1]);
      if (a == b) {
        emit(c.substr(0, p) + c.substr(p + 2));
        continue;
      }
      const unsigned m = order[a][b];
      if (m < 2 || p + m > c.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m && alternating; ++k) {
        alternating = static_cast<unsigned char>(c[p + k]) == (k % 2 == 0 ? a : b);
      }
      if (!alternating) continue;
      Code next = c;
      for (std::size_t k = 0; k < m; ++k) next[p + k] = static_cast<char>(k % 2 == 0 ? b : a);
      emit(std::move(next));
    }
  });
}

Closure swap_cancel(const GroupSpec& spec, const Word& w, const Limits& limits) {
  if (!has_inverse_letters(spec.kind())) throw KindError("swap/cancel moves need a graph or fim spec");
  check_limits(spec, w, limits);
  return closure(spec, w, limits, [&](const Code& c, auto&& emit) {
    for (std::size_t p = 0; p + 1 < c.size(); ++p) {
      const auto x = static_cast<unsigned char>(c[p]);
      const auto y = static_cast<unsigned char>(c[p + 1]);
      if ((x ^ y) == 1U) {
        emit(c.substr(0, p) + c.substr(p + 2));
      } else if (x / 2 != y / 2 && spec.independent(x / 2, y / 2)) {
        Code next = c;
        std::swap(next[p], next[p + 1]);
        emit(std::move(next));
      }
    }
  });
}

}  // namespace

std::vector<Word> geodesics(const GroupSpec& spec, const Word& w, const Limits& limits) {
  return has_inverse_letters(spec.kind()) ? swap_cancel_closure(spec, w, limits) : tits_closure(spec, w, limits);
}

Word shortlex(const GroupSpec& spec, const Word& w, const Limits& limits) {
  return geodesics(spec, w, limits).front();
}

bool equal(const GroupSpec& spec, const Word& u, const Word& v, const Limits& limits) {
  return geodesics(spec, u, limits) == geodesics(spec, v, limits);
}

Memo::Memo(GroupSpec spec, Limits limits) : spec_(std::move(spec)), limits_(limits) {}

const std::vector<Word>& Memo::geodesics(const Word& w) {
  const Code key = encode(spec_, w);
  if (const auto it = index_.find(key); it != index_.end()) return results_[it->second];
  Closure c = has_inverse_letters(spec_.kind()) ? swap_cancel(spec_, w, limits_) : tits(spec_, w, limits_);
  const std::size_t slot = results_.size();
  results_.push_back(std::move(c.minimal));
  for (const auto& state : c.seen) {
    if (state.size() == key.size()) index_.emplace(state, slot);
  }
  return results_.back();
}

}  // namespace coxtrace::oracle
