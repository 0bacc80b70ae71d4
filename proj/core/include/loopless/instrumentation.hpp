#pragma once

#include <cstdint>

namespace loopless {

// Step-cost instrumentation policy. Generators are templated on one of these;
// the default NoOps compiles every tick away, so the production path carries
// no counting overhead. OpCounter charges a fixed number of units at marked
// points of the step path (array reads/writes and comparisons), which the
// bench and the acceptance suite use to demonstrate the flat per-step cost.

struct NoOps {
  static constexpr bool counting = false;
  constexpr void add(unsigned) const noexcept {}
  constexpr std::uint64_t total() const noexcept { return 0; }
};

struct OpCounter {
  static constexpr bool counting = true;
  void add(unsigned n) noexcept { total_ += n; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t total_ = 0;
};

}  // namespace loopless
