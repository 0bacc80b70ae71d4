#pragma once

#include <optional>
#include <span>
#include <vector>

namespace loopless {

// Cursor over the standard parking sequences of size n: nondecreasing
// q(1) <= ... <= q(n) with q(i) <= i, Catalan-many in total. The traversal is
// the twisted lexico-tree successor, but the container it maintains is the
// value-count vector of the sequence rather than the sequence itself: a step
// moves 1+m units between two adjacent counts, where m counts the levels that
// had finished descending runs right below the moving level and restart with
// it. Those levels are parked in a group stack and patched one by one when
// they move next, which keeps every advance at a fixed number of operations
// regardless of n.
//
// counts() is live after every advance; sequence() materializes the sorted
// sequence in O(n) for callers that want the object itself.
class CatalanCursor {
 public:
  explicit CatalanCursor(int n);

  int size() const { return n_; }
  bool exhausted() const { return exhausted_; }

  // m[v] = how many entries of the current sequence equal v; 1-based view.
  int count_of(int value) const { return counts_[value]; }
  std::span<const int> counts() const {
    return {counts_.data() + 1, static_cast<std::size_t>(n_)};
  }

  std::vector<int> sequence() const;

  // Moves to the next standard sequence; false once exhausted (idempotent).
  bool advance();

 private:
  struct Group {
    int lo;      // shallowest parked level
    int cursor;  // deepest not-yet-activated member
    int value;   // the value they all restart from
  };

  bool is_stale(int level) const;
  int value_of(int level) const;

  int n_;
  bool exhausted_ = false;
  std::vector<int> value_;     // tree labels per level; stale for parked levels
  std::vector<int> dir_;       // run direction per level
  std::vector<int> up_;        // jump table
  std::vector<char> pending_;  // finished its run, has not moved since
  std::vector<int> chain_top_; // top of the pending descent chain a level joined
  std::vector<int> chain_bot_; // deepest live member, stored at the chain top
  std::vector<int> counts_;
  std::vector<Group> groups_;  // stack; the top holds the deepest members
};

// Enumerates the standard sequences themselves; the first next() yields
// (1,1,...,1). Thin materializing wrapper over CatalanCursor.
class StandardSequences {
 public:
  explicit StandardSequences(int n) : cursor_(n) {}

  std::optional<std::vector<int>> next();

 private:
  CatalanCursor cursor_;
  bool started_ = false;
};

}  // namespace loopless
