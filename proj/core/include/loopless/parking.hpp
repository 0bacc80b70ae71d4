#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "loopless/catalan.hpp"
#include "loopless/multiperm.hpp"
#include "loopless/multiset.hpp"

namespace loopless {

// Greedy one-way-alley simulation: car i takes the first free lot >= lots[i].
// True iff every car parks. This is the module's brute-force oracle; it never
// sits on the generation step path. Throws on entries outside 1..n.
bool is_parking_function(std::span<const int> lots);

// Enumerates all parking functions of size n: a Catalan cursor walks the
// standard (nondecreasing) sequences, and each one's block of outputs is the
// multiset-permutation enumeration of its values. Two permutation buffers
// alternate; while one emits, the other is refilled for the following block a
// few micro-steps per output (time stealing), so a block hand-over is a
// constant-time pointer swap. The all-ones sequence comes first and is the
// only block shorter than n outputs, which is why both buffers can be built
// eagerly during construction and every later refill fits the budget.
class ParkingGenerator {
 public:
  static constexpr int kDefaultPrepBudget = 8;

  explicit ParkingGenerator(int n, int prep_budget = kDefaultPrepBudget);

  int size() const { return n_; }
  int prep_budget() const { return budget_; }
  bool exhausted() const { return exhausted_; }

  // The current parking function p(1..n).
  std::span<const int> current() const {
    return {active_->lots.data() + 1, static_cast<std::size_t>(n_)};
  }

  struct Step {
    bool new_block = false;  // container re-seeded from the next standard sequence
    int from = 0;            // swap positions (1-based) when !new_block
    int to = 0;
  };

  std::optional<Step> next();

  // Preparation micro-steps charged to the most recent next() call.
  int last_prep_charge() const { return prep_charge_; }

 private:
  struct Buffer {
    explicit Buffer(int n)
        : gen(with_capacity, n), class_value(n + 2, 0), lots(n + 2, 0) {}
    MultisetPermutation<NoOps> gen;
    std::vector<int> class_value;  // class label -> lot value
    std::vector<int> lots;         // the emitted function, 1-based
  };

  enum class PrepPhase { kScan, kRefill, kLots, kDone };

  void prep_begin();
  void prep_one();          // one O(1) micro-step
  void prep_finished();     // bookkeeping after the last micro-step

  int n_;
  int budget_;
  bool exhausted_ = false;
  CatalanCursor cursor_;
  std::unique_ptr<Buffer> active_;
  std::unique_ptr<Buffer> standby_;
  bool standby_ready_ = false;
  bool cursor_live_ = false;  // cursor_ holds a block not yet prepared
  bool prep_active_ = false;
  PrepPhase prep_phase_ = PrepPhase::kDone;
  int prep_scan_v_ = 0;
  int prep_classes_ = 0;
  int prep_lots_j_ = 0;
  int prep_charge_ = 0;
};

}  // namespace loopless
