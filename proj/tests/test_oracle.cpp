#include <random>
#include <stdexcept>

#include "circsort/oracle.hpp"
#include "circsort/random.hpp"
#include "circsort/sorter.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace circsort;
using circsort::testing::all_permutations;
using circsort::testing::inverse_of;
using circsort::testing::make_perm;

TEST_CASE("bfs_distance on known instances") {
  CHECK(bfs_distance(Permutation::identity(5)) == 0);
  CHECK(bfs_distance(make_perm({3, 2, 1, 4})) == 3);
  CHECK(bfs_distance(make_perm({3, 4, 1, 2})) == 4);
  CHECK(bfs_distance(make_perm({4, 3, 2, 1})) == 2);
}

TEST_CASE("bfs_distance respects the cap") {
  CHECK_THROWS_AS(bfs_distance(Permutation::identity(11)),
                  std::invalid_argument);
  CHECK(bfs_distance(Permutation::identity(11), 11) == 0);
}

TEST_CASE("bfs_distance relabels non-contiguous label sets") {
  // (9,2,5) is order-isomorphic to (3,1,2), two swaps from sorted.
  CHECK(bfs_distance(make_perm({9, 2, 5})) == 2);
  CHECK(bfs_distance(make_perm({2, 5, 9})) == 0);
}

TEST_CASE("bidirectional search agrees with the full table") {
  for (int n = 2; n <= 6; ++n) {
    const DistanceTable& table = distance_table(n);
    for (const Permutation& perm : all_permutations(n)) {
      CHECK(bfs_distance(perm) == table.distance_of(perm));
    }
  }
}

TEST_CASE("diameter values and witnesses") {
  CHECK(diameter(3).value == 2);
  CHECK(diameter(2).value == 1);

  const DiameterResult four = diameter(4);
  CHECK(four.value == 4);
  bool found = false;
  for (const Permutation& witness : four.witnesses) {
    if (witness == make_perm({3, 4, 1, 2})) found = true;
    CHECK(bfs_distance(witness) == 4);
  }
  CHECK(found);

  CHECK_THROWS_AS(diameter(1), std::invalid_argument);
}

TEST_CASE("diameter equals the quarter-square bound") {
  const long long expected[] = {1, 2, 4, 6, 9, 12};
  for (int n = 2; n <= 7; ++n) {
    CHECK(diameter(n).value == expected[n - 2]);
    CHECK(diameter(n).value == diameter_bound(n));
  }
}

TEST_CASE("distance histograms") {
  const std::map<int, long long> three = distance_histogram(3);
  CHECK(three == std::map<int, long long>{{0, 1}, {1, 3}, {2, 2}});
  CHECK(distance_histogram(2) == std::map<int, long long>{{0, 1}, {1, 1}});

  long long factorial = 1;
  for (int n = 2; n <= 6; ++n) {
    factorial *= n;
    const std::map<int, long long> counts = distance_histogram(n);
    long long total = 0;
    for (const auto& [distance, count] : counts) total += count;
    CHECK(total == factorial);
    CHECK(counts.rbegin()->first == diameter(n).value);
  }
}

TEST_CASE("feng_worst_case") {
  CHECK(feng_worst_case(4) == make_perm({3, 4, 1, 2}));
  CHECK(feng_worst_case(6) == make_perm({4, 5, 6, 1, 2, 3}));
  CHECK(feng_worst_case(2) == make_perm({2, 1}));
  CHECK_THROWS_AS(feng_worst_case(5), std::invalid_argument);
  CHECK_THROWS_AS(feng_worst_case(0), std::invalid_argument);

  for (int n : {2, 4, 6}) {
    CHECK(bfs_distance(feng_worst_case(n)) == n * n / 4);
  }
}

TEST_CASE("distance is invariant under inversion") {
  for (int n = 2; n <= 6; ++n) {
    const DistanceTable& table = distance_table(n);
    for (const Permutation& perm : all_permutations(n)) {
      CHECK(table.distance_of(perm) == table.distance_of(inverse_of(perm)));
    }
  }
}

TEST_CASE("distance is invariant under rotation conjugation") {
  // Conjugating by the position rotation maps the generator set onto
  // itself, so distances survive simultaneous rotation and relabeling.
  const int n = 6;
  std::mt19937_64 rng(33);
  const auto rotate_label = [&](int x, int shift) {
    return (x - 1 + shift) % n + 1;
  };
  const DistanceTable& table = distance_table(n);
  for (int trial = 0; trial < 40; ++trial) {
    const Permutation perm = random_permutation(n, rng);
    const int shift = 1 + static_cast<int>(uniform_below(rng, n - 1));
    std::vector<int> conjugated(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
      conjugated[static_cast<std::size_t>(rotate_label(p, shift) - 1)] =
          rotate_label(perm.element_at(p), shift);
    }
    CHECK(table.distance_of(make_perm(conjugated)) ==
          table.distance_of(perm));
  }
}

TEST_CASE("distance_table lookups and caching") {
  const DistanceTable& table = distance_table(4);
  CHECK(table.n == 4);
  CHECK(table.distances.size() == 24);
  CHECK(table.distance_of(make_perm({3, 2, 1, 4})) == 3);
  CHECK(table.distance_of(Permutation::identity(4)) == 0);
  CHECK(table.diameter == 4);
  CHECK(&distance_table(4) == &table);  // cached instance is reused
  CHECK_THROWS_AS(table.distance_of(Permutation::identity(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(distance_table(12), std::invalid_argument);
}
