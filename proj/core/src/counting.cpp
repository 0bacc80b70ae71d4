#include "loopless/counting.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace loopless {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error(std::string(what) + ": result exceeds 64 bits");
  return out;
}

}  // namespace

std::uint64_t checked_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative value");
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = mul_checked(out, i, "factorial");
  return out;
}

std::uint64_t checked_binomial(int r, int n) {
  if (n < 0 || n > r) return 0;
  n = std::min(n, r - n);
  // c = c * (r-n+i) / i stays exact at every step
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) {
    c = mul_checked(c, static_cast<std::uint64_t>(r - n + i), "binomial");
    c /= i;
  }
  return c;
}

std::uint64_t checked_multinomial(std::span<const int> multiplicities) {
  std::uint64_t out = 1;
  int remaining = 0;
  for (int m : multiplicities) remaining += m;
  for (int m : multiplicities) {
    out = mul_checked(out, checked_binomial(remaining, m), "multinomial");
    remaining -= m;
  }
  return out;
}

std::uint64_t catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan number of negative value");
  return checked_binomial(2 * n, n) / (static_cast<std::uint64_t>(n) + 1);
}

std::uint64_t checked_parking_count(int n) {
  if (n < 1) throw std::invalid_argument("parking count needs n >= 1");
  std::uint64_t out = 1;
  for (int i = 0; i < n - 1; ++i)
    out = mul_checked(out, static_cast<std::uint64_t>(n) + 1, "parking count");
  return out;
}

}  // namespace loopless
