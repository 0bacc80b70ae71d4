#pragma once

#include <cstdint>
#include <string>

#include "loopless/multiset.hpp"

namespace loopless {

// Generator-vs-oracle verification: set equality, uniqueness, counts, the
// per-kind Gray invariants, and a full delta-stream replay. Used by the
// verify command and the acceptance suite. Size guards are the oracle's;
// exceeding them raises oracle::GuardError.
struct VerifyReport {
  bool pass = true;
  std::uint64_t objects = 0;
  std::string failure;  // first counterexample, empty when pass

  explicit operator bool() const { return pass; }
};

VerifyReport verify_permutations(int n);
VerifyReport verify_combinations(int n, int r);
VerifyReport verify_multiset_perms(const MultisetSpec& spec);
VerifyReport verify_parking(int n);

}  // namespace loopless
