#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "loopless/instrumentation.hpp"
#include "loopless/multiset.hpp"

namespace loopless {

// Loopless Johnson-Trotter over n distinct items. The initial identity
// permutation is the first output (read it through current()); every next()
// performs exactly one adjacent transposition. Item i is the level-i node of
// the traversal; it can sit in n-i+1 slots relative to the items above it,
// counted by child_. A jump table routes the next move without scanning.
template <typename Ops = NoOps>
class JohnsonTrotter {
 public:
  explicit JohnsonTrotter(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("johnson-trotter: n must be >= 1");
    items_.resize(n + 2);
    pos_.resize(n + 2);
    dir_.resize(n + 2);
    child_.resize(n + 2);
    up_.resize(n + 2);
    for (int i = 1; i <= n; ++i) {
      items_[i] = i;
      pos_[i] = i;
      dir_[i] = 1;
      child_[i] = 1;
      up_[i] = i;
    }
  }

  int size() const { return n_; }
  bool exhausted() const { return exhausted_; }

  std::span<const int> current() const {
    return {items_.data() + 1, static_cast<std::size_t>(n_)};
  }

  std::optional<DeltaEvent> next() {
    if (exhausted_) return std::nullopt;
    const int x = up_[1];
    ops_.add(2);
    if (x == n_) {  // level n has a single child; selecting it ends the run
      exhausted_ = true;
      return std::nullopt;
    }
    up_[1] = 1;
    const int from = pos_[x];
    const int to = from + dir_[x];
    const int w = items_[to];
    items_[to] = x;
    items_[from] = w;
    pos_[w] = from;
    pos_[x] = to;
    ++child_[x];
    ops_.add(10);
    if (child_[x] == n_ - x + 1) {  // last child: hand the jump to the level above
      up_[x] = up_[x + 1];
      up_[x + 1] = x + 1;
      child_[x] = 1;
      dir_[x] = -dir_[x];
      ops_.add(6);
    }
    return DeltaEvent{from, to, x};
  }

  const Ops& ops() const { return ops_; }

 private:
  int n_;
  bool exhausted_ = false;
  std::vector<int> items_;  // container: position -> item
  std::vector<int> pos_;    // inverse: item -> position
  std::vector<int> dir_;    // per-item direction, +1 right / -1 left
  std::vector<int> child_;  // per-level child counter
  std::vector<int> up_;     // jump table
  Ops ops_{};
};

}  // namespace loopless
