#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "loopless/combination.hpp"
#include "loopless/counting.hpp"
#include "loopless/instrumentation.hpp"
#include "loopless/multiset.hpp"

namespace loopless {

// Two-level loopless multiset-permutation generator: Johnson-Trotter control
// over the item classes on top, one reversible combination server per class
// 1..k-1 underneath (class k only ever moves passively). The sorted container
// is the first output; every next() swaps exactly two container positions and
// reports the transposition.
//
// A server step yields capsule coordinates, which shift into container
// positions by the width of the lower-class block currently parked at the
// left wall. With every C(limit[m], n[m]) odd (m = 2..cls-1) the lower blocks
// change sides in lockstep and the shift is base[cls] exactly when
// dir_[cls-1] > 0; an even count in between pins the classes up to the
// largest such m to a fixed side at this class's moves while the ones above
// keep alternating. shift_even_/shift_odd_ precompute the two widths, so the
// per-step test stays one sign check.
template <typename Ops = NoOps>
class MultisetPermutation {
 public:
  explicit MultisetPermutation(const MultisetSpec& spec) {
    allocate(spec.total_size());
    servers_.reserve(spec.class_count());
    servers_.emplace_back(with_capacity, 1, 1);  // index 0 unused
    for (int cls = 1; cls <= spec.class_count() - 1; ++cls)
      servers_.emplace_back(with_capacity, spec.multiplicity(cls), spec.limit(cls));
    begin_refill(spec.total_size());
    for (int cls = 1; cls <= spec.class_count(); ++cls)
      refill_add_class(spec.multiplicity(cls));
    while (!refill_step()) {
    }
  }

  // Preallocates for any multiset of total size <= max_total; unusable until
  // a begin_refill / refill_add_class* / refill_step* cycle completes.
  MultisetPermutation(WithCapacity, int max_total) {
    allocate(max_total);
    servers_.reserve(max_total);
    for (int i = 0; i < max_total; ++i)  // slot 0 unused, classes are 1-based
      servers_.emplace_back(with_capacity, max_total, max_total);
  }

  // --- staged refill (drives both the eager constructor and the parking
  // --- standby buffer, which spreads the calls across its steal budget)

  void begin_refill(int total) {
    if (total < 1 || total > max_total_)
      throw std::invalid_argument("multiset permutation: bad refill size");
    total_ = total;
    k_ = 0;
    even_anchor_ = 0;
    classes_done_ = false;
    fill_pos_ = 1;
    fill_cls_ = 1;
    fill_left_ = 0;
    server_cls_ = 1;
    upper_idx_ = 1;
    exhausted_ = true;
    phase_ = Phase::kContainer;
  }

  // Registers the next class (O(1)); call once per class, in class order.
  void refill_add_class(int mult) {
    assert(!classes_done_);
    if (mult < 1) throw std::invalid_argument("multiset permutation: multiplicity < 1");
    const int cls = ++k_;
    mults_[cls] = mult;
    base_[cls] = cls == 1 ? 0 : base_[cls - 1] + mults_[cls - 1];
    if (base_[cls] + mult > total_)
      throw std::invalid_argument("multiset permutation: multiplicities exceed total");
    limit_[cls] = total_ - base_[cls];
    if (cls >= 3 && !binomial_is_odd(limit_[cls - 1], mults_[cls - 1]))
      even_anchor_ = cls - 1;
    shift_even_[cls] = base_[even_anchor_];
    shift_odd_[cls] = base_[cls] - base_[even_anchor_];
  }

  // One O(1) slice of the O(R) refill. Returns true once the generator is
  // ready (container sorted, every server at its first combination).
  bool refill_step() {
    switch (phase_) {
      case Phase::kContainer: {
        if (!classes_done_) {
          classes_done_ = true;
          if (k_ < 1 || base_[k_] + mults_[k_] != total_)
            throw std::invalid_argument(
                "multiset permutation: multiplicities do not sum to total");
        }
        if (fill_left_ == 0) fill_left_ = mults_[fill_cls_];
        container_[fill_pos_++] = fill_cls_;
        if (--fill_left_ == 0) ++fill_cls_;
        if (fill_pos_ > total_) {
          phase_ = k_ >= 2 ? Phase::kServers : Phase::kUpper;
          if (k_ >= 2) servers_[server_cls_].begin_reset(mults_[1], limit_[1]);
        }
        return false;
      }
      case Phase::kServers: {
        if (servers_[server_cls_].reset_step()) {
          if (++server_cls_ <= k_ - 1)
            servers_[server_cls_].begin_reset(mults_[server_cls_], limit_[server_cls_]);
          else
            phase_ = Phase::kUpper;
        }
        return false;
      }
      case Phase::kUpper: {
        const int i = upper_idx_++;
        up_[i] = i;
        dir_[i] = 1;
        if (i == k_) {
          dir_[0] = -1;  // class-0 sentinel: class 1 always moves unshifted
          exhausted_ = false;
          phase_ = Phase::kReady;
          return true;
        }
        return false;
      }
      case Phase::kReady:
        return true;
    }
    return true;
  }

  // --- generation

  int total_size() const { return total_; }
  int class_count() const { return k_; }

  std::span<const int> current() const {
    return {container_.data() + 1, static_cast<std::size_t>(total_)};
  }

  bool exhausted() const { return exhausted_; }

  std::optional<DeltaEvent> next() {
    if (exhausted_) return std::nullopt;
    const int cls = up_[1];
    ops_.add(2);
    if (cls == k_) {  // class k never moves actively; selecting it ends the run
      exhausted_ = true;
      return std::nullopt;
    }
    up_[1] = 1;
    auto move = servers_[cls].next();
    assert(move.has_value());
    int from = move->from + shift_even_[cls];
    int to = move->to + shift_even_[cls];
    ops_.add(6);
    if (dir_[cls - 1] > 0) {
      from += shift_odd_[cls];
      to += shift_odd_[cls];
      ops_.add(4);
    }
    assert(container_[from] == cls);
    std::swap(container_[from], container_[to]);
    ops_.add(4);
    if (servers_[cls].run_complete()) {
      servers_[cls].reverse_reinit();  // O(1); next run replays in reverse
      up_[cls] = up_[cls + 1];
      up_[cls + 1] = cls + 1;
      dir_[cls] = -dir_[cls];
      ops_.add(7);
    }
    return DeltaEvent{from, to, cls};
  }

  // Instrumented work of this object and its servers together.
  std::uint64_t op_total() const {
    std::uint64_t sum = ops_.total();
    for (std::size_t i = 1; i < servers_.size(); ++i) sum += servers_[i].ops().total();
    return sum;
  }

 private:
  enum class Phase { kContainer, kServers, kUpper, kReady };

  void allocate(int max_total) {
    if (max_total < 1)
      throw std::invalid_argument("multiset permutation: total size must be >= 1");
    max_total_ = max_total;
    container_.resize(max_total + 2);
    up_.resize(max_total + 2);
    dir_.resize(max_total + 2);
    mults_.resize(max_total + 2);
    base_.resize(max_total + 2);
    limit_.resize(max_total + 2);
    shift_even_.resize(max_total + 2);
    shift_odd_.resize(max_total + 2);
  }

  int max_total_ = 0;
  int total_ = 0;
  int k_ = 0;
  bool exhausted_ = true;
  std::vector<int> container_;                      // M[1..R]
  std::vector<CombinationGenerator<Ops>> servers_;  // per class, 1..k-1
  std::vector<int> up_;                             // upper jump table
  std::vector<int> dir_;                            // upper directions, dir_[0] sentinel
  std::vector<int> mults_, base_, limit_;
  std::vector<int> shift_even_, shift_odd_;
  int even_anchor_ = 0;

  Phase phase_ = Phase::kReady;
  bool classes_done_ = false;
  int fill_pos_ = 0, fill_cls_ = 0, fill_left_ = 0;
  int server_cls_ = 0, upper_idx_ = 0;

  Ops ops_{};
};

// Multinomial cardinality R!/(n1!...nk!); throws std::overflow_error when it
// does not fit the count type.
inline std::uint64_t permutation_count(const MultisetSpec& spec) {
  return checked_multinomial(spec.multiplicities());
}

}  // namespace loopless
