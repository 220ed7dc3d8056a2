#pragma once

#include <string>
#include <vector>

#include "circsort/displacement.hpp"
#include "circsort/permutation.hpp"

namespace circsort {

/// An ordered list of element swaps together with the permutations at both
/// ends and the position each swap acted on. Every swap is applicable at its
/// step and replaying from `initial` yields `final`.
struct SwapSequence {
  Permutation initial;
  std::vector<Swap> swaps;
  std::vector<int> transpositions;  // position of the clockwise element, per step
  Permutation final;

  long long length() const { return static_cast<long long>(swaps.size()); }
};

struct ValidationResult {
  bool ok = false;
  int failed_step = -1;  // 0-based index of the offending swap, -1 otherwise
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Replays `swaps` from `initial`, deriving positions and the final
/// permutation. Throws on the first inapplicable swap.
SwapSequence replay_swaps(const Permutation& initial, std::vector<Swap> swaps);

/// Greedy realization of a feasible displacement vector: scan positions from
/// 1, execute the first cyclically adjacent pair whose left element has the
/// strictly larger displacement, update d, rescan. The squared sum of d drops
/// by at least two per swap, so this terminates with d exhausted; for labels
/// 1..n the final permutation is the identity.
SwapSequence sort_by_displacement(const Permutation& perm,
                                  const DisplacementVector& d);

/// Minimum-length sorting sequence for labels 1..n: initialize d(i)=i-pos(i),
/// normalize to the optimality condition, then realize greedily.
SwapSequence optimal_sort(const Permutation& perm);

/// The same greedy restricted to non-wrapping positions 1..n-1 with the
/// initial displacement: plain bubble sort. Length equals the inversion
/// count and the wrap transposition is never used.
SwapSequence bubble_sort(const Permutation& perm);

struct SequenceNetCounts {
  NetCountMatrix counts;
  DisplacementVector net_displacement;
};

/// Tallies net swap counts and the net displacement of a sequence; rejects
/// sequences that do not replay cleanly from their initial permutation.
SequenceNetCounts sequence_net_counts(const SwapSequence& seq);

/// Checks that every swap is applicable in order and that the replay reaches
/// `target`. Never throws for sequence defects; the result carries the step
/// index and reason instead.
ValidationResult validate_sequence(const SwapSequence& seq,
                                   const Permutation& target);

/// Worst-case optimal sort length over all permutations of n: floor(n^2/4).
constexpr long long diameter_bound(int n) {
  return static_cast<long long>(n) * n / 4;
}

}  // namespace circsort
