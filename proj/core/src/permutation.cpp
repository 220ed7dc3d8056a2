#include "circsort/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace circsort {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  if (one_line.empty()) fail("permutation: empty one-line input");

  const int n = static_cast<int>(one_line.size());
  std::vector<std::pair<int, int>> by_label;  // (label, position)
  by_label.reserve(one_line.size());
  for (int p = 1; p <= n; ++p) {
    const int value = one_line[static_cast<std::size_t>(p - 1)];
    if (value <= 0)
      fail("permutation: non-positive value " + std::to_string(value));
    by_label.emplace_back(value, p);
  }
  std::sort(by_label.begin(), by_label.end());
  for (std::size_t k = 1; k < by_label.size(); ++k) {
    if (by_label[k].first == by_label[k - 1].first)
      fail("permutation: duplicate value " + std::to_string(by_label[k].first));
  }

  Permutation perm;
  perm.one_line_ = one_line;
  perm.labels_.reserve(by_label.size());
  perm.positions_.reserve(by_label.size());
  for (const auto& [label, position] : by_label) {
    perm.labels_.push_back(label);
    perm.positions_.push_back(position);
  }
  return perm;
}

Permutation Permutation::identity(int n) {
  if (n < 1) fail("permutation: size must be positive");
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  return from_one_line(line);
}

int Permutation::element_at(int position) const {
  if (position < 1 || position > size())
    fail("permutation: position " + std::to_string(position) +
         " out of range 1.." + std::to_string(size()));
  return one_line_[static_cast<std::size_t>(position - 1)];
}

int Permutation::position_of(int label) const {
  const int k = detail::label_index(labels_, label);
  if (k < 0) fail("permutation: unknown label " + std::to_string(label));
  return positions_[static_cast<std::size_t>(k)];
}

bool Permutation::is_sorted() const {
  return std::is_sorted(one_line_.begin(), one_line_.end());
}

bool Permutation::has_contiguous_labels() const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  return os << format_one_line(perm);
}

int transposition_count(int n) {
  if (n <= 1) return 0;
  if (n == 2) return 1;
  return n;
}

bool directly_before(const Permutation& perm, int i, int j) {
  if (i == j) fail("directly_before: elements must be distinct");
  const int pi = perm.position_of(i);
  const int pj = perm.position_of(j);
  return pj == pi + 1 || (pi == perm.size() && pj == 1);
}

Permutation apply_transposition(const Permutation& perm, Transposition t) {
  const int n = perm.size();
  if (t.position < 1 || t.position > n)
    fail("transposition: position " + std::to_string(t.position) +
         " out of range 1.." + std::to_string(n));
  if (n == 1) fail("transposition: no cyclically adjacent pair on one element");

  const int p = t.position;
  const int q = p % n + 1;

  Permutation result = perm;
  std::swap(result.one_line_[static_cast<std::size_t>(p - 1)],
            result.one_line_[static_cast<std::size_t>(q - 1)]);
  const int label_p = result.one_line_[static_cast<std::size_t>(p - 1)];
  const int label_q = result.one_line_[static_cast<std::size_t>(q - 1)];
  result.positions_[static_cast<std::size_t>(
      detail::label_index(result.labels_, label_p))] = p;
  result.positions_[static_cast<std::size_t>(
      detail::label_index(result.labels_, label_q))] = q;
  return result;
}

Swap transposition_to_swap(const Permutation& perm, Transposition t) {
  const int n = perm.size();
  if (t.position < 1 || t.position > n)
    fail("transposition: position " + std::to_string(t.position) +
         " out of range 1.." + std::to_string(n));
  if (n == 1) fail("transposition: no cyclically adjacent pair on one element");
  return Swap{perm.element_at(t.position), perm.element_at(t.position % n + 1)};
}

Permutation apply_swap(const Permutation& perm, Swap s) {
  if (!directly_before(perm, s.clockwise, s.counterclockwise))
    fail("swap (" + std::to_string(s.clockwise) + "," +
         std::to_string(s.counterclockwise) + ") is not applicable: " +
         std::to_string(s.clockwise) + " is not directly before " +
         std::to_string(s.counterclockwise));
  return apply_transposition(perm, Transposition{perm.position_of(s.clockwise)});
}

Permutation restrict(const Permutation& perm, int removed) {
  if (!perm.contains(removed))
    fail("restrict: unknown label " + std::to_string(removed));
  if (perm.size() < 2) fail("restrict: needs at least two elements");

  std::vector<int> line;
  line.reserve(static_cast<std::size_t>(perm.size() - 1));
  for (int value : perm.one_line()) {
    if (value != removed) line.push_back(value);
  }
  return Permutation::from_one_line(line);
}

bool is_restriction(const Permutation& candidate, const Permutation& perm,
                    int removed) {
  if (!perm.contains(removed))
    fail("is_restriction: unknown label " + std::to_string(removed));

  std::vector<int> expected;
  expected.reserve(static_cast<std::size_t>(perm.size() - 1));
  for (int label : perm.labels()) {
    if (label != removed) expected.push_back(label);
  }
  if (candidate.labels() != expected)
    fail("is_restriction: label-set mismatch");

  if (candidate.size() == 1) return true;

  const int n = perm.size();
  for (int p = 1; p <= n; ++p) {
    const int i = perm.element_at(p);
    if (i == removed) continue;
    int successor = perm.element_at(p % n + 1);
    if (successor == removed)
      successor = perm.element_at(perm.position_of(removed) % n + 1);
    if (!directly_before(candidate, i, successor)) return false;
  }
  return true;
}

long long inversions(const Permutation& perm) {
  const auto& line = perm.one_line();
  long long count = 0;
  for (std::size_t p = 0; p < line.size(); ++p) {
    for (std::size_t q = p + 1; q < line.size(); ++q) {
      if (line[p] > line[q]) ++count;
    }
  }
  return count;
}

std::vector<int> parse_one_line(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');

  std::vector<int> values;
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      fail("parse: unrecognized token \"" + token + "\"");
    values.push_back(value);
  }
  if (values.empty()) fail("parse: no values given");
  return values;
}

std::string format_one_line(const Permutation& perm) {
  std::string out;
  for (std::size_t k = 0; k < perm.one_line().size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(perm.one_line()[k]);
  }
  return out;
}

}  // namespace circsort
