#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace circsort {

namespace detail {

/// Index of `label` in the ascending vector `labels`, or -1 if absent.
inline int label_index(const std::vector<int>& labels, int label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<int>(it - labels.begin());
}

}  // namespace detail

/// Position-level move: exchanges the elements in positions
/// (position, position + 1), wrapping from position n back to 1.
struct Transposition {
  int position = 1;

  friend bool operator==(Transposition, Transposition) = default;
};

/// Element-level move. `clockwise` steps from position p to p+1 (mod n),
/// `counterclockwise` steps back from p+1 to p. Applicable to a permutation
/// only when `clockwise` sits directly before `counterclockwise`.
struct Swap {
  int clockwise = 0;
  int counterclockwise = 0;

  friend bool operator==(Swap, Swap) = default;
};

/// A bijection between a finite set of distinct positive integer labels and
/// the positions 1..n. Labels need not be contiguous; positions always are.
///
/// `one_line()` lists the element occupying each position in order, the
/// usual one-line notation of the inverse map.
class Permutation {
 public:
  /// Builds a permutation from one-line notation. Rejects empty input,
  /// non-positive values and duplicates.
  static Permutation from_one_line(const std::vector<int>& one_line);

  /// The identity arrangement of labels 1..n.
  static Permutation identity(int n);

  int size() const { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const { return one_line_; }

  /// Label set in ascending order.
  const std::vector<int>& labels() const { return labels_; }

  /// Element occupying `position` (1-based).
  int element_at(int position) const;

  /// Position (1-based) of `label`; rejects unknown labels.
  int position_of(int label) const;

  bool contains(int label) const {
    return detail::label_index(labels_, label) >= 0;
  }

  /// True when elements appear in ascending label order. For labels 1..n
  /// this is the identity permutation.
  bool is_sorted() const;

  /// True when the label set is exactly {1, ..., n}.
  bool has_contiguous_labels() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend Permutation apply_transposition(const Permutation& perm,
                                         Transposition t);

 private:
  Permutation() = default;

  std::vector<int> one_line_;   // one_line_[p-1] = element at position p
  std::vector<int> labels_;     // ascending
  std::vector<int> positions_;  // positions_[k] = position of labels_[k]
};

std::ostream& operator<<(std::ostream& os, const Permutation& perm);

/// Number of distinct cyclically adjacent transpositions on n positions:
/// n for n >= 3, one for n == 2 (the adjacent pair and the wrap pair are
/// the same move), zero for n == 1.
int transposition_count(int n);

/// True when element i sits directly before element j: j occupies the next
/// position, or i is in the last position and j in the first (wrap).
bool directly_before(const Permutation& perm, int i, int j);

/// Exchanges the elements in positions (t.position, t.position + 1 mod n).
Permutation apply_transposition(const Permutation& perm, Transposition t);

/// The element-level reading of a transposition against `perm`: the element
/// at t.position moves clockwise, its cyclic successor counterclockwise.
Swap transposition_to_swap(const Permutation& perm, Transposition t);

/// Applies an element-level swap; rejects it unless s.clockwise is directly
/// before s.counterclockwise.
Permutation apply_swap(const Permutation& perm, Swap s);

/// Canonical restriction: removes `removed`, closes the gap, and keeps every
/// other element in its original relative order.
Permutation restrict(const Permutation& perm, int removed);

/// True when `candidate` preserves the directly-before relation of `perm`
/// after deleting `removed`: i before j must survive, and i before removed
/// before j collapses to i before j. Any of the |S|-1 rotations of the
/// canonical restriction qualifies.
bool is_restriction(const Permutation& candidate, const Permutation& perm,
                    int removed);

/// Number of label pairs out of order; equals the optimal sort length when
/// only non-wrapping adjacent transpositions are allowed.
long long inversions(const Permutation& perm);

/// Parses one-line notation: whitespace- or comma-separated positive
/// integers. Reports the offending token on failure.
std::vector<int> parse_one_line(const std::string& text);

/// One-line notation as space-separated values.
std::string format_one_line(const Permutation& perm);

}  // namespace circsort
