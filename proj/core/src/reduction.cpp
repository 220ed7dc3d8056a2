#include "circsort/reduction.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace circsort {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

std::string pair_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

VerificationReport rejected(std::string subject, std::string reason) {
  VerificationReport report;
  report.subject = std::move(subject);
  report.rejected = true;
  report.rejection_reason = std::move(reason);
  return report;
}

// All formula values c(i,j) for a feasible state, as a dense matrix over
// label indices. `landing[k]` is pos+d of labels[k].
std::vector<long long> formula_counts(const std::vector<int>& positions,
                                      const std::vector<long long>& landing,
                                      int n) {
  const std::size_t count = positions.size();
  std::vector<long long> c(count * count, 0);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      c[a * count + b] = detail::net_swap_count_formula(
          landing[a], landing[b], positions[a] < positions[b], n);
    }
  }
  return c;
}

}  // namespace

bool VerificationReport::overall() const {
  if (rejected) return false;
  for (const CheckResult& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

int choose_induction_element(const DisplacementVector& d) {
  const long long d_max = d.max_value();
  const long long d_min = d.min_value();
  const long long target = 2 * d_max <= d.modulus() ? d_max : d_min;
  for (std::size_t k = 0; k < d.labels().size(); ++k) {
    if (d.values()[k] == target) return d.labels()[k];
  }
  throw std::logic_error("choose_induction_element: extremum not found");
}

VerificationReport verify_lemma_prop(const Permutation& perm,
                                     const SwapSequence& seq) {
  if (!(seq.initial == perm))
    fail("verify_lemma_prop: sequence does not start at the given permutation");

  const SequenceNetCounts nets = sequence_net_counts(seq);
  const DisplacementVector& d = nets.net_displacement;
  const int n = perm.size();
  std::string subject = "net-count properties of a " +
                        std::to_string(seq.swaps.size()) +
                        "-swap sequence on " + format_one_line(perm);

  if (!satisfies_opt(d))
    return rejected(std::move(subject),
                    "net displacement spread " + std::to_string(d.spread()) +
                        " exceeds n=" + std::to_string(n));

  VerificationReport report;
  report.subject = std::move(subject);
  CheckResult a{"lemma4a", true, ""};
  CheckResult b{"lemma4b", true, ""};
  CheckResult c{"lemma4c", true, ""};
  for (int i : perm.labels()) {
    for (int j : perm.labels()) {
      if (i == j) continue;
      const long long di = d.at(i);
      const long long dj = d.at(j);
      const long long cij = nets.counts.at(i, j);
      if (di >= dj && (cij < 0 || cij > 1)) {
        a.passed = false;
        a.evidence += pair_text(i, j) + " d=" + std::to_string(di) + "," +
                      std::to_string(dj) + " c=" + std::to_string(cij) + " ";
      }
      if (di == dj && cij != 0) {
        b.passed = false;
        b.evidence += pair_text(i, j) + " c=" + std::to_string(cij) + " ";
      }
      if (di - dj == n && cij != 1) {
        c.passed = false;
        c.evidence += pair_text(i, j) + " c=" + std::to_string(cij) + " ";
      }
    }
  }
  report.checks = {std::move(a), std::move(b), std::move(c)};
  return report;
}

SwapSequence delete_element_swaps(const SwapSequence& seq, int removed) {
  const ValidationResult check = validate_sequence(seq, seq.final);
  if (!check.ok)
    fail("delete_element_swaps: invalid sequence: " + check.reason);
  if (!seq.initial.contains(removed))
    fail("delete_element_swaps: unknown label " + std::to_string(removed));
  if (seq.initial.size() < 2)
    fail("delete_element_swaps: needs at least two elements");

  std::vector<Swap> kept;
  kept.reserve(seq.swaps.size());
  for (const Swap& s : seq.swaps) {
    if (s.clockwise != removed && s.counterclockwise != removed)
      kept.push_back(s);
  }
  return replay_swaps(restrict(seq.initial, removed), std::move(kept));
}

VerificationReport verify_induction_step(const Permutation& perm,
                                         const SwapSequence& seq) {
  if (!(seq.initial == perm))
    fail("verify_induction_step: sequence does not start at the given permutation");
  {
    const ValidationResult check = validate_sequence(seq, seq.final);
    if (!check.ok)
      fail("verify_induction_step: invalid sequence: " + check.reason);
  }

  const int n = perm.size();
  std::string subject = "length-bound induction on " + format_one_line(perm);
  if (n < 2)
    return rejected(std::move(subject), "needs at least two elements");

  std::map<std::pair<int, int>, int> pair_uses;
  for (const Swap& s : seq.swaps) {
    ++pair_uses[std::minmax(s.clockwise, s.counterclockwise)];
  }
  for (const auto& [elements, uses] : pair_uses) {
    if (uses > 1)
      return rejected(std::move(subject),
                      "pair " + pair_text(elements.first, elements.second) +
                          " swapped " + std::to_string(uses) + " times");
  }

  const SequenceNetCounts nets = sequence_net_counts(seq);
  const DisplacementVector& d = nets.net_displacement;
  if (!satisfies_opt(d))
    return rejected(std::move(subject),
                    "net displacement spread " + std::to_string(d.spread()) +
                        " exceeds n=" + std::to_string(n));

  VerificationReport report;
  report.subject = std::move(subject);

  const int k = choose_induction_element(d);
  const long long dk = d.at(k);
  const long long abs_dk = std::llabs(dk);

  report.checks.push_back(
      CheckResult{"thm3_k_bound", 2 * abs_dk <= n,
                  "k=" + std::to_string(k) + " d(k)=" + std::to_string(dk) +
                      " n=" + std::to_string(n)});

  long long swaps_with_k = 0;
  for (const Swap& s : seq.swaps) {
    if (s.clockwise == k || s.counterclockwise == k) ++swaps_with_k;
  }
  report.checks.push_back(CheckResult{
      "thm3_k_swap_count", swaps_with_k == abs_dk,
      "k=" + std::to_string(k) + " swaps=" + std::to_string(swaps_with_k) +
          " |d(k)|=" + std::to_string(abs_dk)});

  CheckResult spread_check{"thm3_spread", true, ""};
  CheckResult restriction_check{"lemma5_valid_restriction", true, ""};
  try {
    const SwapSequence deleted = delete_element_swaps(seq, k);
    const SequenceNetCounts deleted_nets = sequence_net_counts(deleted);
    const DisplacementVector& d_prime = deleted_nets.net_displacement;
    for (int i : d_prime.labels()) {
      const long long expected = d.at(i) - nets.counts.at(i, k);
      if (d_prime.at(i) != expected) {
        spread_check.passed = false;
        spread_check.evidence +=
            "d'(" + std::to_string(i) + ")=" + std::to_string(d_prime.at(i)) +
            " expected " + std::to_string(expected) + " ";
      }
    }
    if (d_prime.spread() > n - 1) {
      spread_check.passed = false;
      spread_check.evidence +=
          "spread " + std::to_string(d_prime.spread()) + " > " +
          std::to_string(n - 1);
    }
    restriction_check.passed = is_restriction(deleted.final, seq.final, k);
    if (!restriction_check.passed)
      restriction_check.evidence =
          "deleted sequence ends at " + format_one_line(deleted.final) +
          ", not a restriction of " + format_one_line(seq.final);
  } catch (const std::exception& e) {
    spread_check.passed = false;
    restriction_check.passed = false;
    restriction_check.evidence = e.what();
  }
  report.checks.push_back(std::move(spread_check));
  report.checks.push_back(std::move(restriction_check));

  report.checks.push_back(CheckResult{
      "thm3_length_bound", seq.length() <= diameter_bound(n),
      "length=" + std::to_string(seq.length()) +
          " bound=" + std::to_string(diameter_bound(n))});
  return report;
}

VerificationReport verify_appendix(const Permutation& perm,
                                   const DisplacementVector& d) {
  if (!is_feasible(perm, d))
    fail("verify_appendix: displacement vector is not feasible");

  const int n = perm.size();
  const std::vector<int>& labels = perm.labels();
  const std::size_t count = labels.size();

  std::vector<int> positions(count);
  std::vector<long long> landing(count);
  for (std::size_t a = 0; a < count; ++a) {
    positions[a] = perm.position_of(labels[a]);
    landing[a] = positions[a] + d.values()[a];
  }
  const std::vector<long long> before = formula_counts(positions, landing, n);

  VerificationReport report;
  report.subject = "closed-form net counts on " + format_one_line(perm);

  CheckResult skew{"appendix_skew", true, ""};
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (before[a * count + b] != -before[b * count + a]) {
        skew.passed = false;
        skew.evidence += pair_text(labels[a], labels[b]) + " c=" +
                         std::to_string(before[a * count + b]) + " reverse=" +
                         std::to_string(before[b * count + a]) + " ";
      }
    }
  }
  report.checks.push_back(std::move(skew));

  CheckResult decrement{"appendix_decrement", true, ""};
  std::vector<int> line(count);
  for (std::size_t a = 0; a < count; ++a)
    line[static_cast<std::size_t>(positions[a] - 1)] = static_cast<int>(a);
  for (int p = 1; p <= transposition_count(n); ++p) {
    const int q = p % n + 1;
    const std::size_t ka = line[static_cast<std::size_t>(p - 1)];
    const std::size_t la = line[static_cast<std::size_t>(q - 1)];

    std::vector<int> new_positions = positions;
    std::vector<long long> new_landing = landing;
    new_positions[ka] = q;
    new_positions[la] = p;
    if (p == n) {
      // Wrap: the clockwise element's landing value drops by n, the
      // counterclockwise one's rises by n.
      new_landing[ka] -= n;
      new_landing[la] += n;
    }
    const std::vector<long long> after =
        formula_counts(new_positions, new_landing, n);

    for (std::size_t a = 0; a < count && decrement.passed; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (a == b) continue;
        long long expected = before[a * count + b];
        if (a == ka && b == la) expected -= 1;
        if (a == la && b == ka) expected += 1;
        if (after[a * count + b] != expected) {
          decrement.passed = false;
          decrement.evidence =
              "transposition " + std::to_string(p) + ": pair " +
              pair_text(labels[a], labels[b]) + " became " +
              std::to_string(after[a * count + b]) + ", expected " +
              std::to_string(expected);
          break;
        }
      }
    }
    if (!decrement.passed) break;
  }
  report.checks.push_back(std::move(decrement));
  return report;
}

}  // namespace circsort
