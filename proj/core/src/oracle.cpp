#include "circsort/oracle.hpp"

#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace circsort {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// 4 bits per position, value-1 in each nibble; supports n <= 16.
std::uint64_t pack(const int* line, int n) {
  std::uint64_t key = 0;
  for (int p = 0; p < n; ++p)
    key |= static_cast<std::uint64_t>(line[p] - 1) << (4 * p);
  return key;
}

void unpack(std::uint64_t key, int n, int* line) {
  for (int p = 0; p < n; ++p)
    line[p] = static_cast<int>((key >> (4 * p)) & 0xF) + 1;
}

std::uint64_t with_positions_swapped(std::uint64_t key, int a, int b) {
  const std::uint64_t x =
      ((key >> (4 * a)) ^ (key >> (4 * b))) & 0xF;
  return key ^ (x << (4 * a)) ^ (x << (4 * b));
}

// Lexicographic rank of a permutation of {1..n}.
std::size_t lex_rank(const int* line, int n) {
  std::size_t rank = 0;
  std::size_t suffix = static_cast<std::size_t>(factorial(n - 1));
  for (int p = 0; p < n; ++p) {
    int smaller = 0;
    for (int q = p + 1; q < n; ++q) {
      if (line[q] < line[p]) ++smaller;
    }
    rank += static_cast<std::size_t>(smaller) * suffix;
    if (n - 1 - p > 0) suffix /= static_cast<std::size_t>(n - 1 - p);
  }
  return rank;
}

std::vector<int> unrank(std::size_t rank, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pool[static_cast<std::size_t>(k)] = k + 1;
  std::vector<int> line;
  line.reserve(pool.size());
  std::size_t suffix = static_cast<std::size_t>(factorial(n - 1));
  for (int p = 0; p < n; ++p) {
    const std::size_t idx = rank / suffix;
    rank %= suffix;
    line.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    if (n - 1 - p > 0) suffix /= static_cast<std::size_t>(n - 1 - p);
  }
  return line;
}

void check_size(int n, int cap, const char* what) {
  if (n < 1) fail(std::string(what) + ": size must be positive");
  if (cap > kMaxPackedSize) cap = kMaxPackedSize;
  if (n > cap)
    fail(std::string(what) + ": n=" + std::to_string(n) +
         " exceeds the cap " + std::to_string(cap));
}

// Relabel to {1..n} through the order isomorphism of the label set; the
// sorted arrangement maps to the identity and distances are unchanged.
std::vector<int> contiguous_line(const Permutation& perm) {
  const std::vector<int>& labels = perm.labels();
  std::vector<int> line;
  line.reserve(labels.size());
  for (int value : perm.one_line())
    line.push_back(detail::label_index(labels, value) + 1);
  return line;
}

}  // namespace

long long DistanceTable::distance_of(const Permutation& perm) const {
  if (perm.size() != n)
    fail("distance table: permutation size " + std::to_string(perm.size()) +
         " does not match table size " + std::to_string(n));
  const std::vector<int> line = contiguous_line(perm);
  return distances[lex_rank(line.data(), n)];
}

DistanceTable build_distance_table(int n, int cap) {
  check_size(n, cap, "distance table");

  DistanceTable table;
  table.n = n;
  table.distances.assign(static_cast<std::size_t>(factorial(n)), kUnvisited);

  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) identity[static_cast<std::size_t>(k)] = k + 1;
  table.distances[lex_rank(identity.data(), n)] = 0;

  const int generators = transposition_count(n);
  std::vector<std::uint64_t> frontier{pack(identity.data(), n)};
  std::vector<std::uint64_t> next;
  int line[kMaxPackedSize];
  std::uint8_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (std::uint64_t key : frontier) {
      unpack(key, n, line);
      for (int p = 0; p < generators; ++p) {
        const int q = (p + 1) % n;
        std::swap(line[p], line[q]);
        const std::size_t rank = lex_rank(line, n);
        if (table.distances[rank] == kUnvisited) {
          table.distances[rank] = depth;
          next.push_back(pack(line, n));
        }
        std::swap(line[p], line[q]);
      }
    }
    frontier.swap(next);
  }

  int max_distance = 0;
  for (std::size_t rank = 0; rank < table.distances.size(); ++rank) {
    if (table.distances[rank] == kUnvisited)
      throw std::logic_error("distance table: search left a state unvisited");
    max_distance = std::max(max_distance, static_cast<int>(table.distances[rank]));
  }
  table.diameter = max_distance;
  for (std::size_t rank = 0; rank < table.distances.size(); ++rank) {
    if (table.distances[rank] == max_distance)
      table.witnesses.push_back(Permutation::from_one_line(unrank(rank, n)));
  }
  return table;
}

const DistanceTable& distance_table(int n, int cap) {
  check_size(n, cap, "distance table");

  static std::mutex mutex;
  static std::unordered_map<int, std::unique_ptr<DistanceTable>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<DistanceTable>(
                              build_distance_table(n, cap)))
             .first;
  }
  return *it->second;
}

long long bfs_distance(const Permutation& perm, int cap) {
  const int n = perm.size();
  check_size(n, cap, "bfs_distance");

  const std::vector<int> start_line = contiguous_line(perm);
  std::vector<int> identity(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) identity[static_cast<std::size_t>(k)] = k + 1;

  const std::uint64_t start = pack(start_line.data(), n);
  const std::uint64_t goal = pack(identity.data(), n);
  if (start == goal) return 0;

  const int generators = transposition_count(n);
  std::unordered_map<std::uint64_t, int> forward{{start, 0}};
  std::unordered_map<std::uint64_t, int> backward{{goal, 0}};
  std::vector<std::uint64_t> forward_frontier{start};
  std::vector<std::uint64_t> backward_frontier{goal};
  int forward_depth = 0;
  int backward_depth = 0;
  long long best = std::numeric_limits<long long>::max();

  const auto expand = [&](std::vector<std::uint64_t>& frontier,
                          std::unordered_map<std::uint64_t, int>& own,
                          const std::unordered_map<std::uint64_t, int>& other,
                          int depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : frontier) {
      for (int p = 0; p < generators; ++p) {
        const std::uint64_t neighbor =
            with_positions_swapped(key, p, (p + 1) % n);
        if (!own.emplace(neighbor, depth).second) continue;
        const auto hit = other.find(neighbor);
        if (hit != other.end())
          best = std::min(best, static_cast<long long>(depth) + hit->second);
        next.push_back(neighbor);
      }
    }
    frontier.swap(next);
  };

  while (!forward_frontier.empty() && !backward_frontier.empty() &&
         static_cast<long long>(forward_depth) + backward_depth < best) {
    if (forward_frontier.size() <= backward_frontier.size()) {
      ++forward_depth;
      expand(forward_frontier, forward, backward, forward_depth);
    } else {
      ++backward_depth;
      expand(backward_frontier, backward, forward, backward_depth);
    }
  }

  if (best == std::numeric_limits<long long>::max())
    throw std::logic_error("bfs_distance: search exhausted without meeting");
  return best;
}

DiameterResult diameter(int n, int cap) {
  if (n < 2) fail("diameter: needs n >= 2");
  const DistanceTable& table = distance_table(n, cap);
  return DiameterResult{table.diameter, table.witnesses};
}

std::map<int, long long> distance_histogram(int n, int cap) {
  if (n < 2) fail("histogram: needs n >= 2");
  const DistanceTable& table = distance_table(n, cap);
  std::map<int, long long> counts;
  for (std::uint8_t d : table.distances) ++counts[d];
  return counts;
}

Permutation feng_worst_case(int n) {
  if (n < 2) fail("feng_worst_case: needs n >= 2");
  if (n % 2 != 0) fail("feng_worst_case: n must be even");
  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(n));
  for (int v = n / 2 + 1; v <= n; ++v) line.push_back(v);
  for (int v = 1; v <= n / 2; ++v) line.push_back(v);
  return Permutation::from_one_line(line);
}

}  // namespace circsort
