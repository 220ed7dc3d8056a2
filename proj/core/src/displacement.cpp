#include "circsort/displacement.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace circsort {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

long long mod_reduce(long long value, int n) {
  const long long m = value % n;
  return m < 0 ? m + n : m;
}

}  // namespace

DisplacementVector::DisplacementVector(std::vector<int> labels,
                                       std::vector<long long> values) {
  if (labels.empty()) fail("displacement: empty label set");
  if (labels.size() != values.size())
    fail("displacement: label/value size mismatch");

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

  labels_.reserve(labels.size());
  values_.reserve(values.size());
  for (std::size_t k : order) {
    if (labels[k] <= 0)
      fail("displacement: non-positive label " + std::to_string(labels[k]));
    if (!labels_.empty() && labels_.back() == labels[k])
      fail("displacement: duplicate label " + std::to_string(labels[k]));
    labels_.push_back(labels[k]);
    values_.push_back(values[k]);
  }
}

long long DisplacementVector::at(int label) const {
  const int k = detail::label_index(labels_, label);
  if (k < 0) fail("displacement: unknown label " + std::to_string(label));
  return values_[static_cast<std::size_t>(k)];
}

long long DisplacementVector::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

long long DisplacementVector::abs_sum() const {
  long long total = 0;
  for (long long v : values_) total += std::llabs(v);
  return total;
}

long long DisplacementVector::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

long long DisplacementVector::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

NetCountMatrix::NetCountMatrix(std::vector<int> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) fail("net counts: empty label set");
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t k = 1; k < labels_.size(); ++k) {
    if (labels_[k] == labels_[k - 1])
      fail("net counts: duplicate label " + std::to_string(labels_[k]));
  }
  counts_.assign(labels_.size() * labels_.size(), 0);
}

int NetCountMatrix::index_of(int label) const {
  const int k = detail::label_index(labels_, label);
  if (k < 0) fail("net counts: unknown label " + std::to_string(label));
  return k;
}

long long NetCountMatrix::at(int i, int j) const {
  if (i == j) fail("net counts: elements must be distinct");
  const std::size_t n = labels_.size();
  return counts_[static_cast<std::size_t>(index_of(i)) * n +
                 static_cast<std::size_t>(index_of(j))];
}

void NetCountMatrix::add_swap(int clockwise, int counterclockwise) {
  if (clockwise == counterclockwise)
    fail("net counts: swap elements must be distinct");
  const std::size_t n = labels_.size();
  const std::size_t a = static_cast<std::size_t>(index_of(clockwise));
  const std::size_t b = static_cast<std::size_t>(index_of(counterclockwise));
  counts_[a * n + b] += 1;
  counts_[b * n + a] -= 1;
}

long long NetCountMatrix::row_sum(int label) const {
  const std::size_t n = labels_.size();
  const std::size_t row = static_cast<std::size_t>(index_of(label));
  long long total = 0;
  for (std::size_t col = 0; col < n; ++col) total += counts_[row * n + col];
  return total;
}

DisplacementVector NetCountMatrix::row_sums() const {
  std::vector<long long> values;
  values.reserve(labels_.size());
  for (int label : labels_) values.push_back(row_sum(label));
  return DisplacementVector(labels_, values);
}

DisplacementVector initial_displacement(const Permutation& perm) {
  if (!perm.has_contiguous_labels())
    fail("initial_displacement: labels must be exactly 1..n");
  std::vector<long long> values;
  values.reserve(perm.labels().size());
  for (int label : perm.labels())
    values.push_back(label - perm.position_of(label));
  return DisplacementVector(perm.labels(), values);
}

bool is_feasible(const Permutation& perm, const DisplacementVector& d) {
  if (perm.labels() != d.labels()) fail("is_feasible: label mismatch");
  if (d.sum() != 0) return false;
  const int n = perm.size();
  for (int label : perm.labels()) {
    if (mod_reduce(perm.position_of(label) + d.at(label), n) !=
        mod_reduce(label, n))
      return false;
  }
  return true;
}

bool satisfies_opt(const DisplacementVector& d) {
  return d.spread() <= d.modulus();
}

DisplacementVector normalize(
    const Permutation& perm, const DisplacementVector& d,
    const std::function<void(const DisplacementVector&)>& on_step) {
  if (!is_feasible(perm, d))
    fail("normalize: displacement vector is not feasible for the permutation");

  const int n = d.modulus();
  std::vector<long long> values = d.values();
  for (;;) {
    std::size_t hi = 0;
    std::size_t lo = 0;
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] > values[hi]) hi = k;
      if (values[k] < values[lo]) lo = k;
    }
    if (values[hi] - values[lo] <= n) break;
    values[hi] -= n;
    values[lo] += n;
    if (on_step) on_step(DisplacementVector(d.labels(), values));
  }
  return DisplacementVector(d.labels(), values);
}

long long lower_bound(const DisplacementVector& d) {
  if (d.sum() != 0) fail("lower_bound: displacement values must sum to zero");
  const long long total = d.abs_sum();
  if (total % 2 != 0)
    throw std::logic_error("lower_bound: odd absolute sum for a zero-sum vector");
  return total / 2;
}

namespace detail {

long long net_swap_count_formula(long long a, long long b, bool i_before_j,
                                 int n) {
  // Largest m with m*n < a - b, i.e. floor((a - b - 1) / n).
  const long long diff = a - b - 1;
  long long m = diff / n;
  if (diff % n != 0 && diff < 0) --m;
  return m + (i_before_j ? 1 : 0);
}

}  // namespace detail

long long net_swap_count(const Permutation& perm, const DisplacementVector& d,
                         int i, int j) {
  if (i == j) fail("net_swap_count: elements must be distinct");
  if (!is_feasible(perm, d))
    fail("net_swap_count: displacement vector is not feasible");
  const int pi = perm.position_of(i);
  const int pj = perm.position_of(j);
  return detail::net_swap_count_formula(pi + d.at(i), pj + d.at(j), pi < pj,
                                        perm.size());
}

}  // namespace circsort
