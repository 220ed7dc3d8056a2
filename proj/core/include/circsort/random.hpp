#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "circsort/displacement.hpp"
#include "circsort/permutation.hpp"

namespace circsort {

/// Unbiased uniform integer in [0, bound) by rejection sampling, so results
/// depend only on the engine's specified output stream.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform random permutation of {1..n}: swap each position with a uniformly
/// chosen index from the remaining suffix.
inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_permutation: n must be positive");
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) line[static_cast<std::size_t>(p)] = p + 1;
  for (int p = 0; p + 1 < n; ++p) {
    const int q = p + static_cast<int>(
                          uniform_below(rng, static_cast<std::uint64_t>(n - p)));
    std::swap(line[static_cast<std::size_t>(p)], line[static_cast<std::size_t>(q)]);
  }
  return Permutation::from_one_line(line);
}

/// Random feasible displacement for `perm`: the initial displacement plus up
/// to `max_shift_pairs` transfers of n between random element pairs, which
/// preserve both the zero sum and the landing congruences.
inline DisplacementVector random_feasible_displacement(const Permutation& perm,
                                                       std::mt19937_64& rng,
                                                       int max_shift_pairs = 3) {
  const int n = perm.size();
  DisplacementVector d = initial_displacement(perm);
  std::vector<long long> values = d.values();
  const int shifts = static_cast<int>(
      uniform_below(rng, static_cast<std::uint64_t>(max_shift_pairs) + 1));
  for (int s = 0; s < shifts && n >= 2; ++s) {
    const int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    values[static_cast<std::size_t>(a)] += n;
    values[static_cast<std::size_t>(b)] -= n;
  }
  return DisplacementVector(d.labels(), values);
}

}  // namespace circsort
