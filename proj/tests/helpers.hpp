#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "circsort/permutation.hpp"

namespace circsort::testing {

inline Permutation make_perm(const std::vector<int>& line) {
  return Permutation::from_one_line(line);
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

/// One-line notation of the inverse permutation: position p holds the
/// original position of element p.
inline Permutation inverse_of(const Permutation& perm) {
  std::vector<int> line;
  line.reserve(perm.labels().size());
  for (int label : perm.labels()) line.push_back(perm.position_of(label));
  return Permutation::from_one_line(line);
}

inline std::vector<int> rotated(const std::vector<int>& line, int shift) {
  const int n = static_cast<int>(line.size());
  std::vector<int> out(line.size());
  for (int k = 0; k < n; ++k)
    out[static_cast<std::size_t>((k + shift) % n)] = line[static_cast<std::size_t>(k)];
  return out;
}

}  // namespace circsort::testing
