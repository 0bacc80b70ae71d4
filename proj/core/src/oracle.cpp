#include "loopless/oracle.hpp"

#include <algorithm>
#include <string>

#include "loopless/parking.hpp"

namespace loopless {
namespace oracle {

namespace {

void check_guard(bool ok, const std::string& what) {
  if (!ok) throw GuardError("oracle guard: " + what);
}

}  // namespace

std::vector<std::vector<int>> brute_permutations(int n) {
  check_guard(n >= 1 && n <= kMaxPermutationSize,
              "permutations need 1 <= n <= " + std::to_string(kMaxPermutationSize));
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

std::vector<std::vector<int>> brute_combinations(int n, int r) {
  check_guard(r >= 1 && r <= kMaxCombinationUniverse && n >= 1 && n <= r,
              "combinations need 1 <= n <= r <= " + std::to_string(kMaxCombinationUniverse));
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      out.push_back(pick);
      return;
    }
    for (int v = next; v <= r - (n - 1 - static_cast<int>(pick.size())); ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> brute_multiset_perms(const MultisetSpec& spec) {
  check_guard(spec.total_size() <= kMaxMultisetTotal,
              "multiset permutations need R <= " + std::to_string(kMaxMultisetTotal));
  std::vector<int> items = spec.sorted_container();
  std::vector<std::vector<int>> out;
  do {
    out.push_back(items);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

std::vector<std::vector<int>> brute_standard_sequences(int n) {
  check_guard(n >= 1 && n <= kMaxParkingSize + 3, "standard sequences size too large");
  std::vector<std::vector<int>> out;
  std::vector<int> q;
  auto rec = [&](auto&& self) -> void {
    const int i = static_cast<int>(q.size());
    if (i == n) {
      out.push_back(q);
      return;
    }
    for (int v = q.empty() ? 1 : q.back(); v <= i + 1; ++v) {
      q.push_back(v);
      self(self);
      q.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<int>> brute_parking_functions(int n) {
  check_guard(n >= 1 && n <= kMaxParkingSize,
              "parking functions need n <= " + std::to_string(kMaxParkingSize));
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, 1);
  while (true) {
    if (is_parking_function(p)) out.push_back(p);
    int i = n - 1;
    while (i >= 0 && p[i] == n) p[i--] = 1;
    if (i < 0) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
}  // namespace loopless
