#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "circsort/permutation.hpp"

namespace circsort {

/// Default size guard for the exhaustive search; n=10 already touches all
/// 3.6M states. Overridable per call, hard-limited by the packed state
/// encoding (4 bits per position, 16 positions).
inline constexpr int kDefaultBfsCap = 10;
inline constexpr int kMaxPackedSize = 16;

/// Exact distances from the identity for every permutation of {1..n} under
/// cyclically adjacent transpositions, indexed by lexicographic rank.
struct DistanceTable {
  int n = 0;
  std::vector<std::uint8_t> distances;  // distances[rank], size n!
  int diameter = 0;
  std::vector<Permutation> witnesses;  // every permutation attaining diameter

  long long distance_of(const Permutation& perm) const;
};

/// Builds the full table by breadth-first search from the identity.
DistanceTable build_distance_table(int n, int cap = kDefaultBfsCap);

/// Cached access to the full table; built at most once per n, safe to share
/// across threads.
const DistanceTable& distance_table(int n, int cap = kDefaultBfsCap);

/// Exact minimum number of cyclically adjacent transpositions sorting `perm`,
/// via bidirectional search between the permutation and the identity (far
/// smaller memory footprint than the full table). Non-contiguous label sets
/// are relabeled order-isomorphically, which preserves the distance.
long long bfs_distance(const Permutation& perm, int cap = kDefaultBfsCap);

struct DiameterResult {
  int value = 0;
  std::vector<Permutation> witnesses;
};

/// Maximum distance over all n! permutations plus every witness attaining
/// it; requires 2 <= n <= cap.
DiameterResult diameter(int n, int cap = kDefaultBfsCap);

/// Count of permutations at each distance; counts sum to n! and the largest
/// key is the diameter.
std::map<int, long long> distance_histogram(int n, int cap = kDefaultBfsCap);

/// The worst-case permutation for even n: one-line
/// (n/2+1, ..., n, 1, ..., n/2), whose optimal sort length is exactly n^2/4.
Permutation feng_worst_case(int n);

}  // namespace circsort
