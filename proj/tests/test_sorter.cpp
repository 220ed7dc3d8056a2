#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

#include "circsort/random.hpp"
#include "circsort/sorter.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace circsort;
using circsort::testing::all_permutations;
using circsort::testing::make_perm;

namespace {

// Replays a sequence while tracking the residual displacement, checking the
// step discipline the greedy construction promises: the clockwise element
// carries the strictly larger displacement, the squared sum drops by at
// least two, the residual state stays feasible, and the spread never grows.
void check_step_discipline(const Permutation& perm,
                           const DisplacementVector& d,
                           const SwapSequence& seq) {
  Permutation state = perm;
  std::vector<long long> values = d.values();
  const std::vector<int>& labels = d.labels();
  const int n = perm.size();

  const auto value_of = [&](int label) -> long long& {
    return values[static_cast<std::size_t>(detail::label_index(labels, label))];
  };
  const auto spread = [&] {
    return *std::max_element(values.begin(), values.end()) -
           *std::min_element(values.begin(), values.end());
  };

  long long previous_spread = spread();
  for (const Swap& s : seq.swaps) {
    const long long di = value_of(s.clockwise);
    const long long dj = value_of(s.counterclockwise);
    CHECK(di > dj);
    CHECK(di >= dj + 2);  // squared potential drops by at least two
    state = apply_swap(state, s);
    --value_of(s.clockwise);
    ++value_of(s.counterclockwise);

    // Residual feasibility: zero sum and landing congruences.
    long long sum = 0;
    for (long long v : values) sum += v;
    CHECK(sum == 0);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const long long landing = state.position_of(labels[k]) + values[k];
      CHECK((landing % n + n) % n == (labels[k] % n + n) % n);
    }

    CHECK(spread() <= previous_spread);
    previous_spread = spread();
  }
  CHECK(state == seq.final);
}

}  // namespace

TEST_CASE("sort_by_displacement reproduces the documented traces") {
  const Permutation perm = make_perm({3, 4, 1, 2});
  const DisplacementVector d({1, 2, 3, 4}, {-2, -2, 2, 2});
  const SwapSequence seq = sort_by_displacement(perm, d);
  CHECK(seq.swaps ==
        std::vector<Swap>{{4, 1}, {3, 1}, {4, 2}, {3, 2}});
  CHECK(seq.transpositions == std::vector<int>{2, 1, 3, 2});
  CHECK(seq.final == Permutation::identity(4));

  const SwapSequence one = sort_by_displacement(
      make_perm({4, 2, 3, 1}), DisplacementVector({1, 2, 3, 4}, {1, 0, 0, -1}));
  CHECK(one.swaps == std::vector<Swap>{{1, 4}});
  CHECK(one.transpositions == std::vector<int>{4});
  CHECK(one.final == Permutation::identity(4));

  const Permutation id6 = Permutation::identity(6);
  CHECK(sort_by_displacement(id6, initial_displacement(id6)).swaps.empty());

  CHECK_THROWS_AS(
      sort_by_displacement(perm, DisplacementVector({1, 2, 3, 4}, {0, 0, 0, 0})),
      std::invalid_argument);
}

TEST_CASE("sort_by_displacement realizes the other rotation direction") {
  // (3,2,1,4) admits a second optimality-condition vector that routes the
  // low element the long way around; the greedy must realize it too.
  const Permutation perm = make_perm({3, 2, 1, 4});
  const DisplacementVector d({1, 2, 3, 4}, {2, 0, -2, 0});
  REQUIRE(is_feasible(perm, d));
  REQUIRE(satisfies_opt(d));
  const SwapSequence seq = sort_by_displacement(perm, d);
  CHECK(seq.length() == 3);
  CHECK(seq.final == Permutation::identity(4));
  std::map<std::pair<int, int>, int> uses;
  for (const Swap& s : seq.swaps)
    ++uses[std::minmax(s.clockwise, s.counterclockwise)];
  for (const auto& [pair, count] : uses) CHECK(count == 1);
  CHECK(sequence_net_counts(seq).net_displacement == d);
}

TEST_CASE("greedy steps obey the potential and feasibility discipline") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& perm : all_permutations(n)) {
      const DisplacementVector d = normalize(perm, initial_displacement(perm));
      check_step_discipline(perm, d, sort_by_displacement(perm, d));
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Permutation perm = random_permutation(8, rng);
    const DisplacementVector d = normalize(perm, initial_displacement(perm));
    check_step_discipline(perm, d, sort_by_displacement(perm, d));
  }
}

TEST_CASE("optimal_sort lengths") {
  CHECK(optimal_sort(make_perm({3, 2, 1, 4})).length() == 3);
  CHECK(optimal_sort(make_perm({3, 4, 1, 2})).length() == 4);
  CHECK(optimal_sort(make_perm({4, 3, 2, 1})).length() == 2);
  CHECK(optimal_sort(Permutation::identity(9)).length() == 0);
  CHECK_THROWS_AS(optimal_sort(make_perm({9, 2, 5})), std::invalid_argument);
}

TEST_CASE("optimal sequences swap each pair at most once, never both ways") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& perm : all_permutations(n)) {
      const SwapSequence seq = optimal_sort(perm);
      std::map<std::pair<int, int>, int> uses;
      for (const Swap& s : seq.swaps)
        ++uses[std::minmax(s.clockwise, s.counterclockwise)];
      for (const auto& [pair, count] : uses) CHECK(count == 1);

      // Length therefore equals the total of the closed-form net counts.
      const DisplacementVector d = normalize(perm, initial_displacement(perm));
      long long total = 0;
      for (int i : perm.labels()) {
        for (int j : perm.labels()) {
          if (i < j) total += std::llabs(net_swap_count(perm, d, i, j));
        }
      }
      CHECK(seq.length() == total);
    }
  }
}

TEST_CASE("bubble_sort") {
  CHECK(bubble_sort(make_perm({3, 2, 1, 4})).length() == 3);
  CHECK(bubble_sort(make_perm({4, 3, 2, 1})).length() == 6);
  CHECK(bubble_sort(Permutation::identity(7)).length() == 0);

  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& perm : all_permutations(n)) {
      const SwapSequence seq = bubble_sort(perm);
      CHECK(seq.length() == inversions(perm));
      CHECK(seq.final.is_sorted());
      for (int p : seq.transpositions) CHECK(p < n);  // wrap never used
    }
  }

  std::mt19937_64 rng(11);
  const Permutation big = random_permutation(60, rng);
  const SwapSequence seq = bubble_sort(big);
  CHECK(seq.length() == inversions(big));
  for (int p : seq.transpositions) CHECK(p < 60);
}

TEST_CASE("sequence_net_counts") {
  const SwapSequence one =
      replay_swaps(make_perm({4, 2, 3, 1}), {Swap{1, 4}});
  const SequenceNetCounts nets = sequence_net_counts(one);
  CHECK(nets.counts.at(1, 4) == 1);
  CHECK(nets.net_displacement.at(1) == 1);
  CHECK(nets.net_displacement.at(4) == -1);
  CHECK(nets.net_displacement.at(2) == 0);

  const SwapSequence example = replay_swaps(
      make_perm({3, 4, 1, 2}), {{4, 1}, {3, 1}, {4, 2}, {3, 2}});
  CHECK(sequence_net_counts(example).net_displacement.values() ==
        std::vector<long long>{-2, -2, 2, 2});

  const SwapSequence empty = replay_swaps(Permutation::identity(3), {});
  const SequenceNetCounts empty_nets = sequence_net_counts(empty);
  CHECK(empty_nets.net_displacement.values() ==
        std::vector<long long>{0, 0, 0});
  CHECK(empty_nets.counts.at(1, 2) == 0);

  const SwapSequence broken{make_perm({3, 2, 1, 4}),
                            {Swap{1, 2}},
                            {},
                            make_perm({3, 2, 1, 4})};
  CHECK_THROWS_AS(sequence_net_counts(broken), std::invalid_argument);
}

TEST_CASE("tallies reproduce the generating displacement") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& perm : all_permutations(n)) {
      const DisplacementVector d = normalize(perm, initial_displacement(perm));
      const SwapSequence seq = sort_by_displacement(perm, d);
      CHECK(sequence_net_counts(seq).net_displacement == d);
    }
  }
}

TEST_CASE("validate_sequence") {
  const Permutation perm = make_perm({3, 4, 1, 2});
  const SwapSequence good =
      replay_swaps(perm, {{4, 1}, {3, 1}, {4, 2}, {3, 2}});
  CHECK(validate_sequence(good, Permutation::identity(4)).ok);
  CHECK(validate_sequence(optimal_sort(make_perm({4, 3, 2, 1})),
                          Permutation::identity(4))
            .ok);

  // A non-adjacent swap spliced in fails at its index.
  const SwapSequence spliced{perm, {{4, 1}, {1, 3}}, {}, perm};
  const ValidationResult bad = validate_sequence(spliced, perm);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed_step == 1);
  CHECK(bad.reason.find("not directly before") != std::string::npos);

  const ValidationResult wrong_target =
      validate_sequence(good, make_perm({2, 1, 3, 4}));
  CHECK_FALSE(wrong_target.ok);
  CHECK(wrong_target.failed_step == -1);

  CHECK_FALSE(validate_sequence(good, Permutation::identity(5)).ok);
}

TEST_CASE("replay_swaps derives positions and rejects bad steps") {
  const SwapSequence seq = replay_swaps(make_perm({3, 4, 1, 2}),
                                        {{4, 1}, {3, 1}, {4, 2}, {3, 2}});
  CHECK(seq.transpositions == std::vector<int>{2, 1, 3, 2});
  CHECK(seq.final == Permutation::identity(4));

  CHECK_THROWS_WITH_AS(
      replay_swaps(make_perm({3, 2, 1, 4}), {Swap{1, 2}}),
      "replay: step 0: swap (1,2) is not applicable", std::invalid_argument);
}

TEST_CASE("diameter_bound") {
  CHECK(diameter_bound(2) == 1);
  CHECK(diameter_bound(3) == 2);
  CHECK(diameter_bound(4) == 4);
  CHECK(diameter_bound(7) == 12);
  CHECK(diameter_bound(100) == 2500);
}
