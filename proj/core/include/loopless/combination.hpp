#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "loopless/instrumentation.hpp"
#include "loopless/multiset.hpp"

namespace loopless {

// Loopless in-place generator of the n-combinations out of {1..r}. A forward
// run starts at (1,2,...,n) and ends with the selected values packed at the
// right end; reverse_reinit() then restarts it in O(1) so the next run emits
// the same combinations in exactly reversed order, indefinitely.
//
// The container comb_ holds the combination in slot order ("in-place" form);
// each step rewrites exactly one slot, and next() reports the old and new
// value of that slot. Interpreted as a binary vector of length r, the moved 1
// travels only across consecutive 1s and never reorders the 0s, which is what
// lets the multiset-permutation layer drive one server per item class.
//
// label_ carries the twisted-tree path, maintained lazily: when a level's
// parity turns, the parent label is left stale and patched on the next visit
// (stale_parent_), and the solution point of the pending range is kept in
// solution_ so the single container write lands on the right slot.
template <typename Ops = NoOps>
class CombinationGenerator {
 public:
  struct ValueMove {
    int from = 0;  // value that left the rewritten slot
    int to = 0;    // value now occupying it

    friend bool operator==(const ValueMove&, const ValueMove&) = default;
  };

  CombinationGenerator(int n, int r) : CombinationGenerator(with_capacity, n, r) {
    begin_reset(n, r);
    while (!reset_step()) {
    }
  }

  // Allocates for any (n, r) with n <= max_n, r <= max_r; unusable until a
  // begin_reset()/reset_step() cycle completes.
  CombinationGenerator(WithCapacity, int max_n, int max_r) {
    if (max_n < 1 || max_n > max_r)
      throw std::invalid_argument("combination generator: need 1 <= n <= r");
    label_.resize(max_n + 2);
    comb_.resize(max_n + 2);
    dir_.resize(max_n + 3);
    up_.resize(max_n + 2);
    down_.resize(max_n + 2);
    solution_.resize(max_n + 2);
    stale_parent_.resize(max_n + 2);
    slot_of_.resize(max_r + 3);
    n_ = 0;
    r_ = 0;
    level_ = 0;
  }

  // O(1); the object becomes usable once reset_step() returns true.
  void begin_reset(int n, int r) {
    if (n < 1 || n > r)
      throw std::invalid_argument("combination generator: need 1 <= n <= r");
    if (n + 2 > static_cast<int>(label_.size()) ||
        r + 3 > static_cast<int>(slot_of_.size()))
      throw std::invalid_argument("combination generator: exceeds reserved capacity");
    n_ = n;
    r_ = r;
    reset_index_ = 0;
    resetting_ = true;
  }

  // One O(1) slice of the O(n) initialization. Returns true when done.
  bool reset_step() {
    assert(resetting_);
    const int i = reset_index_++;
    if (i <= n_) {
      if (i >= 1) {
        label_[i] = i;
        comb_[i] = i;
        dir_[i] = 1;
      }
      up_[i] = i;
      down_[i] = i;
      slot_of_[i] = i;
      solution_[i] = i;
      stale_parent_[i] = false;
      return false;
    }
    dir_[0] = 0;
    dir_[n_ + 1] = -1;
    stale_parent_[n_ + 1] = false;
    level_ = n_ == r_ ? 0 : n_;  // n == r has the single combination (1..n)
    resetting_ = false;
    return true;
  }

  int size() const { return n_; }
  int universe() const { return r_; }

  std::span<const int> current() const {
    return {comb_.data() + 1, static_cast<std::size_t>(n_)};
  }

  // True when the current run (forward or backward) has emitted its last
  // combination; the multiset layer uses this as its last-child check.
  bool run_complete() const { return level_ == 0; }

  // Constant-work restart; the next run replays the set in reverse order.
  void reverse_reinit() {
    if (level_ != 0)
      throw std::logic_error("combination generator: reverse_reinit mid-run");
    level_ = down_[0];
    ops_.add(2);
  }

  std::optional<ValueMove> next() {
    if (level_ == 0) return std::nullopt;
    const int i = level_;
    ops_.add(2);
    if (stale_parent_[i]) {
      label_[i - 1] = label_[i] - 1;
      stale_parent_[i] = false;
      ops_.add(3);
    }
    int slot, from, to;
    ops_.add(2);
    if (dir_[i + 1] < 0) {
      // previous step flipped the parity below; treat this node as even
      slot = slot_of_[label_[i]];
      from = comb_[slot];
      to = label_[i] + dir_[i];
      comb_[slot] = to;
      slot_of_[to] = slot;
      ops_.add(8);
    } else if (dir_[i] > 0) {
      // odd-to-even with labels increasing: write lands on the solution point
      slot = slot_of_[label_[i]];
      from = comb_[slot];
      to = label_[solution_[i]] + dir_[i];
      comb_[slot] = to;
      slot_of_[to] = slot;
      ops_.add(10);
    } else {
      // odd-to-even with labels decreasing
      slot = slot_of_[label_[solution_[i]]];
      from = comb_[slot];
      to = label_[i] + dir_[i];
      comb_[slot] = to;
      slot_of_[to] = slot;
      ops_.add(10);
    }
    label_[i] += dir_[i];
    ops_.add(3);
    if (dir_[i + 1] > 0) {
      label_[solution_[i]] += dir_[i];
      ops_.add(3);
    }
    up_[i] = i;
    ops_.add(4);
    if ((dir_[i] > 0 && label_[i] == r_ - n_ + i) ||
        (dir_[i] < 0 && label_[i] == label_[i - 1] + 1)) {
      // last child at this level
      up_[i] = up_[i - 1];
      up_[i - 1] = i - 1;
      down_[up_[i]] = i;
      ops_.add(6);
      if (dir_[i] < 0) {
        solution_[up_[i]] = i;
        stale_parent_[i] = true;
        ops_.add(3);
      }
      dir_[i] = -dir_[i];
      level_ = (dir_[i] < 0 || i == n_) ? up_[i] : down_[i];
      ops_.add(6);
    } else {
      level_ = down_[i];
      ops_.add(2);
    }
    return ValueMove{from, to};
  }

  // Binary-vector view (bit j set iff j is selected); debug/test helper,
  // not on the step path.
  std::vector<int> binary_vector() const {
    std::vector<int> bits(r_, 0);
    for (int s = 1; s <= n_; ++s) bits[comb_[s] - 1] = 1;
    return bits;
  }

  const Ops& ops() const { return ops_; }

 private:
  int n_ = 0;
  int r_ = 0;
  int level_ = 0;                      // tree cursor; 0 marks a finished run
  int reset_index_ = 0;
  bool resetting_ = false;
  std::vector<int> label_;             // tree path labels, lazily maintained
  std::vector<int> comb_;              // the combination, slots 1..n
  std::vector<int> dir_;               // per-level parity as +1/-1
  std::vector<int> up_, down_;         // jump tables
  std::vector<int> solution_;          // solution point per level
  std::vector<int> slot_of_;           // value -> slot in comb_
  std::vector<char> stale_parent_;     // parent label not yet patched
  Ops ops_{};
};

}  // namespace loopless
