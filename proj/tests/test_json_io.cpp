#include <set>

#include "circsort/json_io.hpp"
#include "circsort/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace circsort;
using circsort::testing::make_perm;

TEST_CASE("sequence wire format") {
  const Permutation perm = make_perm({3, 4, 1, 2});
  const SwapSequence seq = optimal_sort(perm);
  const nlohmann::json out = sequence_json(
      seq, lower_bound(normalize(perm, initial_displacement(perm))),
      diameter_bound(4));

  CHECK(out["n"] == 4);
  CHECK(out["pi_inv"] == nlohmann::json({3, 4, 1, 2}));
  CHECK(out["d_by_element"] == nlohmann::json({-2, -2, 2, 2}));
  CHECK(out["d_by_position"] == nlohmann::json({2, 2, -2, -2}));
  CHECK(out["swaps"] ==
        nlohmann::json({{4, 1}, {3, 1}, {4, 2}, {3, 2}}));
  CHECK(out["transpositions"] == nlohmann::json({2, 1, 3, 2}));
  CHECK(out["length"] == 4);
  CHECK(out["upper_bound"] == 4);
  CHECK(out["lower_bound"] == 4);

  // The printed one-line form re-parses to the input permutation.
  std::vector<int> reparsed;
  for (const auto& value : out["pi_inv"]) reparsed.push_back(value);
  CHECK(Permutation::from_one_line(reparsed) == perm);
}

TEST_CASE("displacement prints both orders") {
  const Permutation perm = make_perm({3, 2, 1, 4});
  const nlohmann::json out =
      displacement_json(perm, initial_displacement(perm));
  CHECK(out["d_by_element"] == nlohmann::json({-2, 0, 2, 0}));
  CHECK(out["d_by_position"] == nlohmann::json({2, 0, -2, 0}));
}

TEST_CASE("report wire format uses the stable check names") {
  const Permutation perm = make_perm({3, 4, 1, 2});
  const SwapSequence seq = optimal_sort(perm);

  const nlohmann::json lemma = report_json(verify_lemma_prop(perm, seq));
  std::set<std::string> lemma_names;
  for (const auto& check : lemma["checks"])
    lemma_names.insert(check["name"].get<std::string>());
  CHECK(lemma_names ==
        std::set<std::string>{"lemma4a", "lemma4b", "lemma4c"});
  CHECK(lemma["overall"] == true);
  CHECK(lemma["rejected"] == false);

  const nlohmann::json induction =
      report_json(verify_induction_step(perm, seq));
  std::set<std::string> induction_names;
  for (const auto& check : induction["checks"])
    induction_names.insert(check["name"].get<std::string>());
  CHECK(induction_names ==
        std::set<std::string>{"thm3_k_bound", "thm3_k_swap_count",
                              "thm3_spread", "lemma5_valid_restriction",
                              "thm3_length_bound"});

  const nlohmann::json appendix = report_json(verify_appendix(
      perm, normalize(perm, initial_displacement(perm))));
  std::set<std::string> appendix_names;
  for (const auto& check : appendix["checks"])
    appendix_names.insert(check["name"].get<std::string>());
  CHECK(appendix_names ==
        std::set<std::string>{"appendix_skew", "appendix_decrement"});

  // A rejected report carries its reason.
  const SwapSequence spun = replay_swaps(Permutation::identity(4),
                                         {{1, 2}, {1, 3}, {1, 4}, {1, 2}});
  const nlohmann::json rejected =
      report_json(verify_lemma_prop(Permutation::identity(4), spun));
  CHECK(rejected["rejected"] == true);
  CHECK(rejected["overall"] == false);
  CHECK(rejected.contains("rejection_reason"));
}

TEST_CASE("histogram wire format") {
  const nlohmann::json out = histogram_json(3, distance_histogram(3));
  CHECK(out["n"] == 3);
  CHECK(out["histogram"] == nlohmann::json({{0, 1}, {1, 3}, {2, 2}}));
}
