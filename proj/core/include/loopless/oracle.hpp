#pragma once

#include <stdexcept>
#include <vector>

#include "loopless/multiset.hpp"

namespace loopless {
namespace oracle {

// Deliberately naive reference enumerations, used only by tests and the
// verify command. Each is guarded by a hard size cap so CI cannot wander
// into an exponential job by accident; exceeding a cap raises GuardError.

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxPermutationSize = 9;
inline constexpr int kMaxCombinationUniverse = 20;
inline constexpr int kMaxMultisetTotal = 9;
inline constexpr int kMaxParkingSize = 6;

// All n! permutations of 1..n, sorted.
std::vector<std::vector<int>> brute_permutations(int n);

// All C(r, n) n-subsets of 1..r as sorted value lists, sorted.
std::vector<std::vector<int>> brute_combinations(int n, int r);

// All distinct rearrangements of the spec's multiset, sorted.
std::vector<std::vector<int>> brute_multiset_perms(const MultisetSpec& spec);

// All nondecreasing q with q(i) <= i, sorted.
std::vector<std::vector<int>> brute_standard_sequences(int n);

// {1..n}^n filtered by the alley simulation, sorted.
std::vector<std::vector<int>> brute_parking_functions(int n);

}  // namespace oracle
}  // namespace loopless
