#pragma once

#include <cstdint>
#include <span>

namespace loopless {

// Exact counting helpers used for verification and the CLI count format.
// Everything is checked: results that do not fit std::uint64_t raise
// std::overflow_error instead of wrapping.

std::uint64_t checked_factorial(int n);

// C(r, n); r up to where the result fits.
std::uint64_t checked_binomial(int r, int n);

// R! / (n1! ... nk!) for the multiplicity vector.
std::uint64_t checked_multinomial(std::span<const int> multiplicities);

// Kummer: C(a, b) is odd iff the subtraction a-b borrows nowhere in binary.
constexpr bool binomial_is_odd(int a, int b) {
  if (b < 0 || b > a) return false;
  return (static_cast<unsigned>(b) & static_cast<unsigned>(a - b)) == 0;
}

std::uint64_t catalan_number(int n);

// (n+1)^(n-1), the parking-function count.
std::uint64_t checked_parking_count(int n);

}  // namespace loopless
