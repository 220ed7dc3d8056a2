#pragma once

#include <functional>
#include <vector>

#include "circsort/permutation.hpp"

namespace circsort {

/// Signed net clockwise displacement per element, in units of positions.
/// The modulus is the element count n; displacements wrap modulo n.
class DisplacementVector {
 public:
  /// Builds from parallel label/value lists (any order); labels must be
  /// distinct positive integers.
  DisplacementVector(std::vector<int> labels, std::vector<long long> values);

  int modulus() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

  /// Values aligned with labels() (ascending label order).
  const std::vector<long long>& values() const { return values_; }

  long long at(int label) const;

  long long sum() const;
  long long abs_sum() const;
  long long max_value() const;
  long long min_value() const;
  long long spread() const { return max_value() - min_value(); }

  friend bool operator==(const DisplacementVector&,
                         const DisplacementVector&) = default;

 private:
  std::vector<int> labels_;        // ascending
  std::vector<long long> values_;  // aligned with labels_
};

/// Net swap tallies for ordered element pairs: occurrences of (i, j) minus
/// occurrences of (j, i). Skew symmetric by construction.
class NetCountMatrix {
 public:
  explicit NetCountMatrix(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }
  long long at(int i, int j) const;
  void add_swap(int clockwise, int counterclockwise);

  /// Row sum over all partners; equals the net displacement of the row
  /// element for the tallied sequence.
  long long row_sum(int label) const;
  DisplacementVector row_sums() const;

  friend bool operator==(const NetCountMatrix&,
                         const NetCountMatrix&) = default;

 private:
  int index_of(int label) const;

  std::vector<int> labels_;
  std::vector<long long> counts_;  // dense n x n, row-major
};

/// The displacement that sends every element straight home: d(i) = i - pos(i).
/// Requires labels exactly {1..n}; every value has magnitude at most n-1.
DisplacementVector initial_displacement(const Permutation& perm);

/// Feasibility: values sum to zero and pos(i) + d(i) is congruent to i
/// modulo n for every element, so the displacements land every element on
/// its target position.
bool is_feasible(const Permutation& perm, const DisplacementVector& d);

/// Optimality condition on a displacement vector: no pair differs by more
/// than n, i.e. spread() <= n.
bool satisfies_opt(const DisplacementVector& d);

/// Repairs a feasible vector until it satisfies the optimality condition by
/// shifting n from the largest value to the smallest (ties broken toward the
/// smallest label). Each shift keeps the vector feasible and strictly
/// decreases the absolute sum, so the loop terminates. `on_step`, when
/// provided, observes the vector after every shift.
DisplacementVector normalize(
    const Permutation& perm, const DisplacementVector& d,
    const std::function<void(const DisplacementVector&)>& on_step = {});

/// Half the absolute sum: a lower bound on the number of cyclically adjacent
/// transpositions realizing d. Requires a zero-sum vector, which makes the
/// absolute sum even; oddness is reported as an internal error rather than
/// rounded away.
long long lower_bound(const DisplacementVector& d);

/// Closed form for the net number of (i, j) swaps in any sequence that
/// realizes the feasible displacement d on perm:
///   m* = max{m : pos(i)+d(i) > pos(j)+d(j) + m*n},
/// plus one when pos(i) < pos(j).
long long net_swap_count(const Permutation& perm, const DisplacementVector& d,
                         int i, int j);

namespace detail {

/// Formula backend shared with the verification module; `a` and `b` are the
/// landing values pos+d of the two elements.
long long net_swap_count_formula(long long a, long long b, bool i_before_j,
                                 int n);

}  // namespace detail

}  // namespace circsort
