#include "circsort/json_io.hpp"

namespace circsort {

nlohmann::json displacement_json(const Permutation& perm,
                                 const DisplacementVector& d) {
  nlohmann::json by_element = nlohmann::json::array();
  for (long long value : d.values()) by_element.push_back(value);

  nlohmann::json by_position = nlohmann::json::array();
  for (int p = 1; p <= perm.size(); ++p)
    by_position.push_back(d.at(perm.element_at(p)));

  return nlohmann::json{{"d_by_element", std::move(by_element)},
                        {"d_by_position", std::move(by_position)}};
}

nlohmann::json sequence_json(const SwapSequence& seq, long long lower,
                             long long upper) {
  const SequenceNetCounts nets = sequence_net_counts(seq);

  nlohmann::json swaps = nlohmann::json::array();
  for (const Swap& s : seq.swaps)
    swaps.push_back({s.clockwise, s.counterclockwise});

  nlohmann::json out = displacement_json(seq.initial, nets.net_displacement);
  out["n"] = seq.initial.size();
  out["pi_inv"] = seq.initial.one_line();
  out["swaps"] = std::move(swaps);
  out["transpositions"] = seq.transpositions;
  out["length"] = seq.length();
  out["upper_bound"] = upper;
  out["lower_bound"] = lower;
  return out;
}

nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"pass", check.passed},
                      {"evidence", check.evidence}});
  }
  nlohmann::json out{{"subject", report.subject},
                     {"rejected", report.rejected},
                     {"checks", std::move(checks)},
                     {"overall", report.overall()}};
  if (report.rejected) out["rejection_reason"] = report.rejection_reason;
  return out;
}

nlohmann::json histogram_json(int n, const std::map<int, long long>& counts) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [distance, count] : counts)
    rows.push_back({distance, count});
  return nlohmann::json{{"n", n}, {"histogram", std::move(rows)}};
}

}  // namespace circsort
