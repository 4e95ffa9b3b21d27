#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cardauct/core.hpp"

namespace cardauct {

// Static dominance structure over the points (rank i, cap k_i) with weight
// b_i, one per bidder, rank taken in canonical order. Answers, for query
// rectangles [1, i] x [k, inf):
//   range_count  — number of points inside,
//   range_sum    — total bid weight inside,
//   find_kth_eligible — smallest rank prefix containing m points with
//                       cap >= k (the binary search the Sigma_k algorithm
//                       runs, fused into one tree descent).
//
// Layout is a merge tree: a segment tree over ranks whose nodes store the
// caps of their range sorted ascending, plus suffix sums of the bid
// weights in that cap order. Build O(n log n), queries O(log^2 n).
// Immutable after construction; concurrent reads are safe.
class RangeStructure {
public:
  explicit RangeStructure(const Instance& instance) {
    if (instance.empty()) throw InputError("cannot build range structure over empty instance");
    n_ = instance.size();
    leaves_ = static_cast<int>(std::bit_ceil(static_cast<unsigned>(n_)));
    caps_.resize(2 * leaves_);
    suffix_.assign(2 * leaves_, {0});
    for (int r = 1; r <= n_; ++r) {
      const Bid& b = instance.ranked(r);
      caps_[leaves_ + r - 1] = {b.cap};
      suffix_[leaves_ + r - 1] = {b.amount.micros(), 0};
    }
    for (int node = leaves_ - 1; node >= 1; --node) merge_children(node);
  }

  int size() const { return n_; }

  std::int64_t range_count(int i, std::int64_t k) const {
    check_prefix(i);
    std::int64_t count = 0;
    visit_prefix(i, [&](int node) { count += count_at(node, k); });
    return count;
  }

  Money range_sum(int i, std::int64_t k) const {
    check_prefix(i);
    std::int64_t sum = 0;
    visit_prefix(i, [&](int node) { sum += sum_at(node, k); });
    return Money::from_micros(sum);
  }

  // Smallest rank r such that range_count(r, k) == m; 0 when fewer than m
  // points have cap >= k.
  int find_kth_eligible(std::int64_t k, std::int64_t m) const {
    if (m < 1) throw InputError("find_kth_eligible: m must be >= 1");
    if (count_at(1, k) < m) return 0;
    int node = 1;
    while (node < leaves_) {
      int left = 2 * node;
      std::int64_t in_left = count_at(left, k);
      if (in_left >= m) {
        node = left;
      } else {
        m -= in_left;
        node = left + 1;
      }
    }
    return node - leaves_ + 1;
  }

private:
  void check_prefix(int i) const {
    if (i < 1 || i > n_) throw InputError("rank prefix out of range");
  }

  template <typename Visit>
  void visit_prefix(int i, Visit&& visit) const {
    int l = leaves_;
    int r = leaves_ + i;  // half-open [l, r)
    while (l < r) {
      if (l & 1) visit(l++);
      if (r & 1) visit(--r);
      l >>= 1;
      r >>= 1;
    }
  }

  std::int64_t count_at(int node, std::int64_t k) const {
    const auto& caps = caps_[node];
    auto it = std::lower_bound(caps.begin(), caps.end(), k);
    return static_cast<std::int64_t>(caps.end() - it);
  }

  std::int64_t sum_at(int node, std::int64_t k) const {
    const auto& caps = caps_[node];
    auto it = std::lower_bound(caps.begin(), caps.end(), k);
    return suffix_[node][it - caps.begin()];
  }

  void merge_children(int node) {
    const auto& lc = caps_[2 * node];
    const auto& rc = caps_[2 * node + 1];
    const auto& lw = suffix_[2 * node];
    const auto& rw = suffix_[2 * node + 1];
    auto& caps = caps_[node];
    caps.resize(lc.size() + rc.size());
    std::vector<std::int64_t> weights(caps.size());
    std::size_t a = 0, b = 0, o = 0;
    while (a < lc.size() || b < rc.size()) {
      bool take_left = b == rc.size() || (a < lc.size() && lc[a] <= rc[b]);
      if (take_left) {
        caps[o] = lc[a];
        weights[o++] = lw[a] - lw[a + 1];
        ++a;
      } else {
        caps[o] = rc[b];
        weights[o++] = rw[b] - rw[b + 1];
        ++b;
      }
    }
    auto& suffix = suffix_[node];
    suffix.assign(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];
  }

  int n_ = 0;
  int leaves_ = 0;
  std::vector<std::vector<std::int64_t>> caps_;
  std::vector<std::vector<std::int64_t>> suffix_;  // one longer than caps_
};

}  // namespace cardauct
