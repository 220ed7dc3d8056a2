#pragma once

#include <map>

#include <nlohmann/json.hpp>

#include "circsort/displacement.hpp"
#include "circsort/reduction.hpp"
#include "circsort/sorter.hpp"

namespace circsort {

/// {"d_by_element": values in ascending label order,
///  "d_by_position": values in position order of `perm`}
nlohmann::json displacement_json(const Permutation& perm,
                                 const DisplacementVector& d);

/// The swap sequence wire format:
/// {"n", "pi_inv", "d_by_element", "d_by_position", "swaps", "transpositions",
///  "length", "upper_bound", "lower_bound"}
/// where the displacement fields describe the sequence's net displacement
/// relative to the initial permutation.
nlohmann::json sequence_json(const SwapSequence& seq, long long lower,
                             long long upper);

/// {"subject", "rejected", ["rejection_reason",] "checks", "overall"}
nlohmann::json report_json(const VerificationReport& report);

/// {"n", "histogram": [[distance, count], ...]}
nlohmann::json histogram_json(int n, const std::map<int, long long>& counts);

}  // namespace circsort
