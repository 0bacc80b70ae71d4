#pragma once

#include <span>
#include <vector>

namespace loopless {

// Tag for the two-phase construction used by the parking double buffer:
// allocate at capacity now, fill later in budgeted micro-steps.
struct WithCapacity {};
inline constexpr WithCapacity with_capacity{};

// One transposition: the values at container positions `from` and `to`
// (1-based) swap, `moved_value` being the label that moved actively.
// Replaying the event on the previous container yields the next one.
struct DeltaEvent {
  int from = 0;
  int to = 0;
  int moved_value = 0;

  friend bool operator==(const DeltaEvent&, const DeltaEvent&) = default;
};

using Permutation = std::vector<int>;

// Multiplicity vector n[1..k] with the derived capsule arithmetic:
// base[i] = n[1]+...+n[i-1], limit[i] = R - base[i].
class MultisetSpec {
 public:
  static constexpr int kDefaultMaxTotalSize = 64;

  explicit MultisetSpec(std::span<const int> multiplicities,
                        int max_total_size = kDefaultMaxTotalSize);
  MultisetSpec(std::initializer_list<int> multiplicities,
               int max_total_size = kDefaultMaxTotalSize);

  int class_count() const { return k_; }
  int total_size() const { return total_; }

  // Class indices are 1-based, matching the item labels.
  int multiplicity(int cls) const { return mults_[cls]; }
  int base(int cls) const { return base_[cls]; }
  int limit(int cls) const { return limit_[cls]; }

  std::span<const int> multiplicities() const {
    return {mults_.data() + 1, static_cast<std::size_t>(k_)};
  }

  // The sorted container (1,..,1,2,..,2,...,k,..,k) this multiset expands to.
  Permutation sorted_container() const;

  friend bool operator==(const MultisetSpec&, const MultisetSpec&) = default;

 private:
  int k_ = 0;
  int total_ = 0;
  std::vector<int> mults_;  // [0] unused, 1-based like the events
  std::vector<int> base_;
  std::vector<int> limit_;
};

// Replays one swap. Throws std::out_of_range / std::invalid_argument when the
// event cannot be a legal transposition of `p` (a corrupted delta stream).
Permutation apply_delta(Permutation p, const DeltaEvent& event);

}  // namespace loopless
