#include "circsort/sorter.hpp"

#include <algorithm>
#include <stdexcept>

namespace circsort {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

// Shared greedy loop: execute the first position (scanning from 1) whose
// cyclically adjacent pair has a strictly larger displacement on the left,
// update the pair's displacements, rescan. `max_position` is n for the
// cyclic sorter and n-1 for bubble sort.
SwapSequence run_greedy(const Permutation& perm, const DisplacementVector& d,
                        int max_position) {
  const int n = perm.size();
  const std::vector<int>& labels = perm.labels();
  std::vector<int> line = perm.one_line();
  std::vector<long long> values = d.values();

  const auto value_of = [&](int label) -> long long& {
    return values[static_cast<std::size_t>(detail::label_index(labels, label))];
  };

  std::vector<Swap> swaps;
  std::vector<int> transpositions;
  for (;;) {
    int chosen = 0;
    for (int p = 1; p <= max_position; ++p) {
      const int q = p % n + 1;
      if (q == p) break;  // single element, no moves
      if (value_of(line[static_cast<std::size_t>(p - 1)]) >
          value_of(line[static_cast<std::size_t>(q - 1)])) {
        chosen = p;
        break;
      }
    }
    if (chosen == 0) break;

    const int q = chosen % n + 1;
    const int i = line[static_cast<std::size_t>(chosen - 1)];
    const int j = line[static_cast<std::size_t>(q - 1)];
    swaps.push_back(Swap{i, j});
    transpositions.push_back(chosen);
    std::swap(line[static_cast<std::size_t>(chosen - 1)],
              line[static_cast<std::size_t>(q - 1)]);
    --value_of(i);
    ++value_of(j);
  }

  return SwapSequence{perm, std::move(swaps), std::move(transpositions),
                      Permutation::from_one_line(line)};
}

}  // namespace

SwapSequence replay_swaps(const Permutation& initial, std::vector<Swap> swaps) {
  const int n = initial.size();
  const std::vector<int>& labels = initial.labels();
  std::vector<int> line = initial.one_line();
  std::vector<int> position(labels.size());  // by label index
  for (int p = 1; p <= n; ++p) {
    position[static_cast<std::size_t>(detail::label_index(
        labels, line[static_cast<std::size_t>(p - 1)]))] = p;
  }

  std::vector<int> transpositions;
  transpositions.reserve(swaps.size());
  for (std::size_t step = 0; step < swaps.size(); ++step) {
    const Swap s = swaps[step];
    const int ai = detail::label_index(labels, s.clockwise);
    const int bi = detail::label_index(labels, s.counterclockwise);
    if (ai < 0 || bi < 0 || ai == bi)
      fail("replay: step " + std::to_string(step) + ": swap (" +
           std::to_string(s.clockwise) + "," +
           std::to_string(s.counterclockwise) + ") uses invalid elements");
    const int p = position[static_cast<std::size_t>(ai)];
    const int q = p % n + 1;
    if (n < 2 || line[static_cast<std::size_t>(q - 1)] != s.counterclockwise)
      fail("replay: step " + std::to_string(step) + ": swap (" +
           std::to_string(s.clockwise) + "," +
           std::to_string(s.counterclockwise) + ") is not applicable");
    std::swap(line[static_cast<std::size_t>(p - 1)],
              line[static_cast<std::size_t>(q - 1)]);
    position[static_cast<std::size_t>(ai)] = q;
    position[static_cast<std::size_t>(bi)] = p;
    transpositions.push_back(p);
  }

  return SwapSequence{initial, std::move(swaps), std::move(transpositions),
                      Permutation::from_one_line(line)};
}

SwapSequence sort_by_displacement(const Permutation& perm,
                                  const DisplacementVector& d) {
  if (!is_feasible(perm, d))
    fail("sort_by_displacement: displacement vector is not feasible");
  SwapSequence seq = run_greedy(perm, d, perm.size());
  // A feasible vector is exhausted exactly; anything else is a defect here.
  for (int label : perm.labels()) {
    long long residual = d.at(label);
    for (const Swap& s : seq.swaps) {
      if (s.clockwise == label) --residual;
      if (s.counterclockwise == label) ++residual;
    }
    if (residual != 0)
      throw std::logic_error("sort_by_displacement: displacement not exhausted");
  }
  return seq;
}

SwapSequence optimal_sort(const Permutation& perm) {
  if (!perm.has_contiguous_labels())
    fail("optimal_sort: labels must be exactly 1..n");
  SwapSequence seq =
      sort_by_displacement(perm, normalize(perm, initial_displacement(perm)));
  if (!seq.final.is_sorted())
    throw std::logic_error("optimal_sort: final permutation is not sorted");
  return seq;
}

SwapSequence bubble_sort(const Permutation& perm) {
  if (!perm.has_contiguous_labels())
    fail("bubble_sort: labels must be exactly 1..n");
  SwapSequence seq =
      run_greedy(perm, initial_displacement(perm), perm.size() - 1);
  if (!seq.final.is_sorted())
    throw std::logic_error("bubble_sort: final permutation is not sorted");
  return seq;
}

SequenceNetCounts sequence_net_counts(const SwapSequence& seq) {
  const ValidationResult check = validate_sequence(seq, seq.final);
  if (!check.ok) fail("sequence_net_counts: invalid sequence: " + check.reason);

  NetCountMatrix counts(seq.initial.labels());
  for (const Swap& s : seq.swaps) counts.add_swap(s.clockwise, s.counterclockwise);
  DisplacementVector net = counts.row_sums();
  return SequenceNetCounts{std::move(counts), std::move(net)};
}

ValidationResult validate_sequence(const SwapSequence& seq,
                                   const Permutation& target) {
  const int n = seq.initial.size();
  const std::vector<int>& labels = seq.initial.labels();
  if (labels != target.labels())
    return ValidationResult{false, -1, "target label set differs from initial"};

  std::vector<int> line = seq.initial.one_line();
  std::vector<int> position(labels.size());
  for (int p = 1; p <= n; ++p) {
    position[static_cast<std::size_t>(detail::label_index(
        labels, line[static_cast<std::size_t>(p - 1)]))] = p;
  }

  for (std::size_t step = 0; step < seq.swaps.size(); ++step) {
    const Swap s = seq.swaps[step];
    const int ai = detail::label_index(labels, s.clockwise);
    const int bi = detail::label_index(labels, s.counterclockwise);
    if (ai < 0 || bi < 0 || ai == bi) {
      return ValidationResult{
          false, static_cast<int>(step),
          "step " + std::to_string(step) + ": swap (" +
              std::to_string(s.clockwise) + "," +
              std::to_string(s.counterclockwise) + ") uses invalid elements"};
    }
    const int p = position[static_cast<std::size_t>(ai)];
    const int q = p % n + 1;
    if (n < 2 || line[static_cast<std::size_t>(q - 1)] != s.counterclockwise) {
      return ValidationResult{
          false, static_cast<int>(step),
          "step " + std::to_string(step) + ": swap (" +
              std::to_string(s.clockwise) + "," +
              std::to_string(s.counterclockwise) + "): " +
              std::to_string(s.clockwise) + " is not directly before " +
              std::to_string(s.counterclockwise)};
    }
    std::swap(line[static_cast<std::size_t>(p - 1)],
              line[static_cast<std::size_t>(q - 1)]);
    position[static_cast<std::size_t>(ai)] = q;
    position[static_cast<std::size_t>(bi)] = p;
  }

  if (line != target.one_line())
    return ValidationResult{false, -1, "replay does not reach the target"};
  return ValidationResult{true, -1, ""};
}

}  // namespace circsort
