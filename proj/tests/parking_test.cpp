#include "loopless/parking.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "loopless/counting.hpp"
#include "loopless/oracle.hpp"
#include "loopless/verify.hpp"
#include "test_util.hpp"

using namespace loopless;
using testutil::vec;

TEST_CASE("alley simulation accepts and rejects the known examples") {
  CHECK(is_parking_function(std::vector<int>{1, 2, 2}));
  CHECK(is_parking_function(std::vector<int>{2, 1, 2}));
  CHECK_FALSE(is_parking_function(std::vector<int>{1, 3, 3}));
  CHECK(is_parking_function(std::vector<int>{1}));
  CHECK_FALSE(is_parking_function(std::vector<int>{2, 2}));
  CHECK_THROWS_AS(is_parking_function(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_parking_function(std::vector<int>{1, 4, 2}), std::invalid_argument);
}

TEST_CASE("n=1 yields exactly the function (1)") {
  ParkingGenerator g(1);
  CHECK(vec(g.current()) == std::vector<int>{1});
  CHECK_FALSE(g.next().has_value());
  CHECK(g.exhausted());
  CHECK_FALSE(g.next().has_value());
}

TEST_CASE("n=3 yields 16 valid functions with the (1,2,2) block contiguous") {
  ParkingGenerator g(3);
  std::vector<std::vector<int>> emitted{vec(g.current())};
  while (g.next()) emitted.push_back(vec(g.current()));
  CHECK(emitted.size() == 16);
  for (const auto& p : emitted) CHECK(is_parking_function(p));
  std::set<std::vector<int>> unique(emitted.begin(), emitted.end());
  CHECK(unique.size() == 16);
  CHECK(unique.count({1, 2, 2}) == 1);
  CHECK(unique.count({2, 1, 2}) == 1);
  CHECK(unique.count({1, 3, 3}) == 0);
  // the rearrangements of (1,2,2) form one contiguous block of three
  auto is122 = [](const std::vector<int>& p) {
    auto s = p;
    std::sort(s.begin(), s.end());
    return s == std::vector<int>{1, 2, 2};
  };
  auto first = std::find_if(emitted.begin(), emitted.end(), is122);
  REQUIRE(first != emitted.end());
  CHECK(std::count_if(emitted.begin(), emitted.end(), is122) == 3);
  CHECK(is122(*(first + 1)));
  CHECK(is122(*(first + 2)));
}

TEST_CASE("full verification for n=1..5") {
  for (int n = 1; n <= 5; ++n) {
    auto report = verify_parking(n);
    CHECK_MESSAGE(report.pass, "n=", n, ": ", report.failure);
    CHECK(report.objects == checked_parking_count(n));
  }
}

TEST_CASE("preparation stays within the configured budget") {
  for (int n = 3; n <= 6; ++n) {
    ParkingGenerator g(n);
    int worst = 0;
    while (g.next()) worst = std::max(worst, g.last_prep_charge());
    CHECK_MESSAGE(worst <= g.prep_budget(), "n=", n, " worst=", worst);
  }
}

TEST_CASE("a tighter budget still enumerates correctly") {
  // Larger budgets only finish preparation earlier; the enumeration must not
  // depend on when the standby becomes ready.
  ParkingGenerator tight(4, ParkingGenerator::kDefaultPrepBudget);
  ParkingGenerator roomy(4, 50);
  while (true) {
    auto a = tight.next();
    auto b = roomy.next();
    REQUIRE(a.has_value() == b.has_value());
    if (!a) break;
    CHECK(vec(tight.current()) == vec(roomy.current()));
  }
}

TEST_CASE("block starts are flagged and re-seed the container") {
  ParkingGenerator g(4);
  std::vector<int> block_sizes;
  int in_block = 1;
  while (auto step = g.next()) {
    if (step->new_block) {
      block_sizes.push_back(in_block);
      in_block = 1;
      auto q = vec(g.current());
      CHECK(std::is_sorted(q.begin(), q.end()));
    } else {
      ++in_block;
    }
  }
  block_sizes.push_back(in_block);
  CHECK(block_sizes.size() == catalan_number(4));
  CHECK(block_sizes.front() == 1);  // the all-ones block
  for (std::size_t i = 1; i < block_sizes.size(); ++i) CHECK(block_sizes[i] >= 4);
  int total = 0;
  for (int b : block_sizes) total += b;
  CHECK(total == static_cast<int>(checked_parking_count(4)));
}
