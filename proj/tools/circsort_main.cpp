// Command line front end: optimal sorting under cyclically adjacent
// transpositions, exact-distance queries, exhaustive verification, and a
// seeded benchmark harness. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circsort/json_io.hpp"
#include "circsort/oracle.hpp"
#include "circsort/random.hpp"
#include "circsort/reduction.hpp"
#include "circsort/sorter.hpp"

namespace {

using namespace circsort;

enum OutputMode { kText, kJson, kCsv };

struct FormatFlags {
  bool json = false;
  bool csv = false;

  OutputMode mode() const { return json ? kJson : csv ? kCsv : kText; }
};

void add_format_flags(CLI::App* cmd, FormatFlags& flags) {
  auto* json = cmd->add_flag("--json", flags.json, "Emit JSON");
  auto* csv = cmd->add_flag("--csv", flags.csv, "Emit CSV");
  json->excludes(csv);
  csv->excludes(json);
}

Permutation read_permutation(const std::vector<std::string>& tokens) {
  std::string text;
  if (tokens.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>());
  } else {
    for (const std::string& token : tokens) {
      if (!text.empty()) text += ' ';
      text += token;
    }
  }
  return Permutation::from_one_line(parse_one_line(text));
}

// Fixed-point mean with three decimals, rounded half up; avoids floating
// point so output is exact and reproducible.
std::string decimal3(long long numerator, long long denominator) {
  const long long scaled = (numerator * 1000 + denominator / 2) / denominator;
  std::string frac = std::to_string(scaled % 1000);
  frac.insert(frac.begin(), 3 - frac.size(), '0');
  return std::to_string(scaled / 1000) + "." + frac;
}

int run_sort(const std::vector<std::string>& tokens, bool bubble) {
  const Permutation perm = read_permutation(tokens);
  const int n = perm.size();
  SwapSequence seq = bubble ? bubble_sort(perm) : optimal_sort(perm);
  long long lower = 0;
  long long upper = 0;
  if (bubble) {
    lower = inversions(perm);
    upper = static_cast<long long>(n) * (n - 1) / 2;
  } else {
    lower = lower_bound(normalize(perm, initial_displacement(perm)));
    upper = diameter_bound(n);
  }
  std::cout << sequence_json(seq, lower, upper).dump(2) << "\n";
  return 0;
}

int run_distance(const std::vector<std::string>& tokens,
                 const FormatFlags& format, int cap) {
  const Permutation perm = read_permutation(tokens);
  const long long dist = bfs_distance(perm, cap);
  switch (format.mode()) {
    case kJson:
      std::cout << nlohmann::json{{"n", perm.size()},
                                  {"pi_inv", perm.one_line()},
                                  {"distance", dist}}
                       .dump(2)
                << "\n";
      break;
    case kCsv:
      std::cout << "n,distance\n" << perm.size() << "," << dist << "\n";
      break;
    case kText:
      std::cout << dist << "\n";
      break;
  }
  return 0;
}

int run_diameter(int n, const FormatFlags& format, int cap) {
  const DiameterResult result = diameter(n, cap);
  const Permutation& witness = result.witnesses.front();
  switch (format.mode()) {
    case kJson: {
      std::cout << nlohmann::json{
                       {"n", n},
                       {"diameter", result.value},
                       {"witness", witness.one_line()},
                       {"witness_count", result.witnesses.size()}}
                       .dump(2)
                << "\n";
      break;
    }
    case kCsv:
      std::cout << "n,diameter,witness_count,witness\n"
                << n << "," << result.value << "," << result.witnesses.size()
                << "," << format_one_line(witness) << "\n";
      break;
    case kText:
      std::cout << result.value << "\n"
                << "witness: " << format_one_line(witness) << "\n";
      break;
  }
  return 0;
}

int run_histogram(int n, const FormatFlags& format, int cap) {
  const std::map<int, long long> counts = distance_histogram(n, cap);
  if (format.mode() == kJson) {
    std::cout << histogram_json(n, counts).dump(2) << "\n";
  } else {
    for (const auto& [distance, count] : counts)
      std::cout << distance << "," << count << "\n";
  }
  return 0;
}

int run_worstcase(int n, const FormatFlags& format) {
  const Permutation perm = feng_worst_case(n);
  const SwapSequence seq = optimal_sort(perm);
  const long long lower =
      lower_bound(normalize(perm, initial_displacement(perm)));
  if (format.mode() == kJson) {
    std::cout << sequence_json(seq, lower, diameter_bound(n)).dump(2) << "\n";
    return 0;
  }
  std::cout << format_one_line(perm) << "\n"
            << "length " << seq.length() << "\n"
            << "bound " << diameter_bound(n) << "\n";
  for (std::size_t step = 0; step < seq.swaps.size(); ++step) {
    std::cout << "swap (" << seq.swaps[step].clockwise << ","
              << seq.swaps[step].counterclockwise << ") position "
              << seq.transpositions[step] << "\n";
  }
  return 0;
}

int run_verify(int n, int cap, bool cap_given) {
  const int guard = cap_given ? cap : 7;
  if (n < 2 || n > guard) {
    std::cerr << "error: verify needs 2 <= n <= " << guard
              << " (raise --cap to go further)\n";
    return 1;
  }

  const DistanceTable& table = distance_table(n, std::max(cap, n));
  long long verified = 0;
  long long max_length = 0;
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = k + 1;
  do {
    const Permutation perm = Permutation::from_one_line(line);
    const SwapSequence seq = optimal_sort(perm);
    const long long exact = table.distance_of(perm);
    if (seq.length() != exact) {
      std::cerr << "verification failed: " << format_one_line(perm)
                << " sorted in " << seq.length() << " swaps, exact distance "
                << exact << "\n";
      return 2;
    }
    if (seq.length() > diameter_bound(n)) {
      std::cerr << "verification failed: " << format_one_line(perm)
                << " needs " << seq.length() << " swaps, above the bound "
                << diameter_bound(n) << "\n";
      return 2;
    }
    const VerificationReport reports[] = {
        verify_lemma_prop(perm, seq), verify_induction_step(perm, seq),
        verify_appendix(perm, normalize(perm, initial_displacement(perm)))};
    for (const VerificationReport& report : reports) {
      if (!report.overall()) {
        std::cerr << "verification failed: " << format_one_line(perm) << "\n"
                  << report_json(report).dump(2) << "\n";
        return 2;
      }
    }
    max_length = std::max(max_length, seq.length());
    ++verified;
  } while (std::next_permutation(line.begin(), line.end()));

  if (max_length != diameter_bound(n)) {
    std::cerr << "verification failed: observed diameter " << max_length
              << ", expected " << diameter_bound(n) << "\n";
    return 2;
  }
  std::cout << verified << "/" << verified << " verified, diameter "
            << max_length << "\n";
  return 0;
}

int run_bench(int n, long long samples, std::uint64_t seed,
              const FormatFlags& format) {
  if (n < 2) {
    std::cerr << "error: bench needs n >= 2\n";
    return 1;
  }
  if (samples < 1) {
    std::cerr << "error: bench needs samples >= 1\n";
    return 1;
  }

  std::mt19937_64 rng(seed);
  const long long bound = diameter_bound(n);
  std::vector<long long> lengths;
  std::vector<long long> bubble_lengths;
  lengths.reserve(static_cast<std::size_t>(samples));
  bubble_lengths.reserve(static_cast<std::size_t>(samples));
  long long sum_length = 0;
  long long sum_bubble = 0;
  long long max_length = 0;
  for (long long index = 0; index < samples; ++index) {
    const Permutation perm = random_permutation(n, rng);
    const long long length = optimal_sort(perm).length();
    const long long bubble_length = bubble_sort(perm).length();
    if (length > bound) {
      std::cerr << "verification failed: sample " << index << " ("
                << format_one_line(perm) << ") needs " << length
                << " swaps, above the bound " << bound << "\n";
      return 2;
    }
    lengths.push_back(length);
    bubble_lengths.push_back(bubble_length);
    sum_length += length;
    sum_bubble += bubble_length;
    max_length = std::max(max_length, length);
  }
  if (sum_length > sum_bubble) {
    std::cerr << "verification failed: mean optimal length exceeds mean "
                 "bubble length\n";
    return 2;
  }

  if (format.mode() == kJson) {
    nlohmann::json out{
        {"n", n},
        {"samples", samples},
        {"seed", seed},
        {"bound", bound},
        {"lengths", lengths},
        {"bubble_lengths", bubble_lengths},
        {"max_length", max_length},
        {"mean_length",
         {{"numerator", sum_length},
          {"denominator", samples},
          {"decimal", decimal3(sum_length, samples)}}},
        {"mean_bubble_length",
         {{"numerator", sum_bubble},
          {"denominator", samples},
          {"decimal", decimal3(sum_bubble, samples)}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "# circsort bench n=" << n << " samples=" << samples
            << " seed=" << seed << "\n";
  std::cout << "n,sample,seed,length,bubble_length,bound\n";
  for (long long index = 0; index < samples; ++index) {
    std::cout << n << "," << index << "," << seed << ","
              << lengths[static_cast<std::size_t>(index)] << ","
              << bubble_lengths[static_cast<std::size_t>(index)] << ","
              << bound << "\n";
  }
  std::cout << "# summary n=" << n << " samples=" << samples
            << " seed=" << seed << " max_length=" << max_length
            << " mean_length=" << sum_length << "/" << samples << " ("
            << decimal3(sum_length, samples) << ")"
            << " mean_bubble_length=" << sum_bubble << "/" << samples << " ("
            << decimal3(sum_bubble, samples) << ") bound=" << bound << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "circsort: minimum-length sorting with cyclically adjacent "
      "transpositions, with exact search oracles and proof-surface "
      "verification"};
  app.require_subcommand(1);

  std::vector<std::string> tokens;
  int n = 0;
  int cap = kDefaultBfsCap;
  long long samples = 50;
  std::uint64_t seed = 1;
  FormatFlags sort_fmt, bubble_fmt, dist_fmt, diam_fmt, hist_fmt, worst_fmt,
      bench_fmt;

  auto* sort_cmd = app.add_subcommand(
      "sort", "Minimum-length sorting sequence for a permutation (JSON)");
  sort_cmd->add_option("permutation", tokens,
                       "One-line permutation, e.g. \"3 2 1 4\" (stdin if "
                       "omitted)");
  add_format_flags(sort_cmd, sort_fmt);

  auto* bubble_cmd = app.add_subcommand(
      "bubble", "Adjacent-only bubble sorting sequence (JSON)");
  bubble_cmd->add_option("permutation", tokens, "One-line permutation");
  add_format_flags(bubble_cmd, bubble_fmt);

  auto* dist_cmd = app.add_subcommand(
      "distance", "Exact minimum number of swaps, by bidirectional search");
  dist_cmd->add_option("permutation", tokens, "One-line permutation");
  dist_cmd->add_option("--cap", cap, "Largest n the search will accept");
  add_format_flags(dist_cmd, dist_fmt);

  auto* diam_cmd =
      app.add_subcommand("diameter", "Worst-case distance over all of S_n");
  diam_cmd->add_option("n", n, "Permutation size")->required();
  diam_cmd->add_option("--cap", cap, "Largest n the search will accept");
  add_format_flags(diam_cmd, diam_fmt);

  auto* hist_cmd = app.add_subcommand(
      "histogram", "distance,count rows over all of S_n (CSV)");
  hist_cmd->add_option("n", n, "Permutation size")->required();
  hist_cmd->add_option("--cap", cap, "Largest n the search will accept");
  add_format_flags(hist_cmd, hist_fmt);

  auto* worst_cmd = app.add_subcommand(
      "worstcase", "Worst-case permutation for even n and its sorted trace");
  worst_cmd->add_option("n", n, "Even permutation size")->required();
  add_format_flags(worst_cmd, worst_fmt);

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "Exhaustively check optimality, the length bound and the "
      "verification suite over all of S_n");
  verify_cmd->add_option("n", n, "Permutation size (2..7 by default)")
      ->required();
  auto* verify_cap =
      verify_cmd->add_option("--cap", cap, "Raise the exhaustive size guard");

  auto* bench_cmd = app.add_subcommand(
      "bench", "Seeded random benchmark: optimal vs bubble lengths (CSV)");
  bench_cmd->add_option("n", n, "Permutation size")->required();
  bench_cmd->add_option("--samples", samples, "Number of random permutations");
  bench_cmd->add_option("--seed", seed, "RNG seed, echoed in the output");
  add_format_flags(bench_cmd, bench_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sort_cmd) return run_sort(tokens, false);
    if (*bubble_cmd) return run_sort(tokens, true);
    if (*dist_cmd) return run_distance(tokens, dist_fmt, cap);
    if (*diam_cmd) return run_diameter(n, diam_fmt, cap);
    if (*hist_cmd) return run_histogram(n, hist_fmt, cap);
    if (*worst_cmd) return run_worstcase(n, worst_fmt);
    if (*verify_cmd) return run_verify(n, cap, verify_cap->count() > 0);
    if (*bench_cmd) return run_bench(n, samples, seed, bench_fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
