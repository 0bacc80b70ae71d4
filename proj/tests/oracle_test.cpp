#include "loopless/oracle.hpp"

#include <algorithm>

#include "doctest.h"
#include "loopless/counting.hpp"

using namespace loopless;
using namespace loopless::oracle;

TEST_CASE("permutation oracle") {
  CHECK(brute_permutations(3).size() == 6);
  CHECK(brute_permutations(1) == std::vector<std::vector<int>>{{1}});
  CHECK(brute_permutations(4).size() == 24);
  CHECK_THROWS_AS(brute_permutations(10), GuardError);
  CHECK_THROWS_AS(brute_permutations(0), GuardError);
}

TEST_CASE("combination oracle") {
  CHECK(brute_combinations(4, 6).size() == 15);
  CHECK(brute_combinations(1, 1) == std::vector<std::vector<int>>{{1}});
  CHECK(brute_combinations(2, 4).size() == 6);
  CHECK_THROWS_AS(brute_combinations(2, 21), GuardError);
}

TEST_CASE("multiset permutation oracle") {
  CHECK(brute_multiset_perms(MultisetSpec({2, 2, 1})).size() == 30);
  CHECK(brute_multiset_perms(MultisetSpec({3})) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(brute_multiset_perms(MultisetSpec({2, 1})) ==
        std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
  CHECK_THROWS_AS(brute_multiset_perms(MultisetSpec({5, 5})), GuardError);
}

TEST_CASE("parking oracle") {
  CHECK(brute_parking_functions(3).size() == 16);
  CHECK(brute_parking_functions(1) == std::vector<std::vector<int>>{{1}});
  CHECK(brute_parking_functions(2) ==
        std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(brute_parking_functions(7), GuardError);
}

TEST_CASE("oracle cardinalities match the closed forms in range") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(brute_permutations(n).size() == checked_factorial(n));
    CHECK(brute_parking_functions(n).size() == checked_parking_count(n));
    CHECK(brute_standard_sequences(n).size() == catalan_number(n));
    for (int k = 1; k <= n; ++k)
      CHECK(brute_combinations(k, n).size() == checked_binomial(n, k));
  }
}
