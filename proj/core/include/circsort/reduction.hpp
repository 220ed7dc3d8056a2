#pragma once

#include <string>
#include <vector>

#include "circsort/displacement.hpp"
#include "circsort/sorter.hpp"

namespace circsort {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string evidence;
};

/// Structured pass/fail evidence for one verification run. A rejected report
/// means a precondition failed and the checks were not evaluated; rejection
/// and check failures are data, not exceptions. Only malformed inputs throw.
struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;
  bool rejected = false;
  std::string rejection_reason;

  bool overall() const;
};

/// Element removed by the induction step: the smallest label attaining the
/// maximum displacement when twice that maximum is at most n, otherwise the
/// smallest label attaining the minimum. Under the optimality condition at
/// least one branch applies.
int choose_induction_element(const DisplacementVector& d);

/// Checks the three net-count constraints implied by the optimality
/// condition, for every ordered element pair of the sequence's tally:
///   lemma4a: d(i) >= d(j) implies 0 <= c(i,j) <= 1
///   lemma4b: d(i) == d(j) implies c(i,j) == 0
///   lemma4c: d(i) - d(j) == n implies c(i,j) == 1
/// Rejected when the tally violates the optimality condition.
VerificationReport verify_lemma_prop(const Permutation& perm,
                                     const SwapSequence& seq);

/// Removes every swap involving `removed` and replays the rest from the
/// canonical restriction of the initial permutation. The replay is always
/// valid and its final permutation is a restriction of the original final.
SwapSequence delete_element_swaps(const SwapSequence& seq, int removed);

/// Executes one level of the induction that bounds sequence length by
/// floor(n^2/4). Preconditions (rejected, not thrown): each element pair
/// swapped at most once, tally satisfies the optimality condition. Checks:
///   thm3_k_bound:             2|d(k)| <= n for the chosen element k
///   thm3_k_swap_count:        k appears in exactly |d(k)| swaps
///   thm3_spread:              deleted tally equals d(i)-c(i,k) with spread <= n-1
///   lemma5_valid_restriction: deleted sequence replays onto a restriction
///   thm3_length_bound:        sequence length <= floor(n^2/4)
VerificationReport verify_induction_step(const Permutation& perm,
                                         const SwapSequence& seq);

/// Checks the closed-form net counts of a feasible state (perm, d):
///   appendix_skew:      c(i,j) == -c(j,i) for every ordered pair
///   appendix_decrement: every applicable transposition, wrap included,
///                       lowers exactly its own pair's count by one and
///                       leaves all other pairs unchanged
VerificationReport verify_appendix(const Permutation& perm,
                                   const DisplacementVector& d);

}  // namespace circsort
