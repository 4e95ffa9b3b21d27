#pragma once

#include <optional>
#include <vector>

#include "cardauct/core.hpp"
#include "cardauct/range_tree.hpp"

namespace cardauct {

// How to pick k* among allocation sizes with equal Sigma_k.
enum class TieRule { kSmallest, kLargest };

// Sigma_k for k = 1..n, the winner-rank cutoffs i_k*, and the optimizer k*.
// Sigma_k is absent (not zero) when fewer than k bidders accept size k;
// definedness is downward closed, so entries 1..max_defined_k() are set.
struct SigmaTable {
  std::vector<std::optional<Money>> sigma;  // index 0 unused
  std::vector<std::optional<int>> i_star;   // index 0 unused
  int k_star = 0;                           // 0 only for the empty table
  TieRule tie = TieRule::kSmallest;

  int max_defined_k() const {
    int k = static_cast<int>(sigma.size()) - 1;
    while (k >= 1 && !sigma[k].has_value()) --k;
    return k < 1 ? 0 : k;
  }
};

// Smallest rank i with exactly k caps >= k among ranks [1, i].
inline std::optional<int> find_i_star(const RangeStructure& rs, int k) {
  if (k < 1 || k > rs.size()) throw InputError("find_i_star: k out of range");
  int rank = rs.find_kth_eligible(k, k);
  if (rank == 0) return std::nullopt;
  return rank;
}

inline std::optional<Money> sigma(const RangeStructure& rs, int k) {
  auto cutoff = find_i_star(rs, k);
  if (!cutoff) return std::nullopt;
  return rs.range_sum(*cutoff, k);
}

namespace detail {

inline void pick_k_star(SigmaTable& table) {
  table.k_star = 0;
  std::optional<Money> best;
  int n = static_cast<int>(table.sigma.size()) - 1;
  for (int k = 1; k <= n; ++k) {
    if (!table.sigma[k]) continue;
    bool better = !best || *table.sigma[k] > *best ||
                  (*table.sigma[k] == *best && table.tie == TieRule::kLargest);
    if (better) {
      best = *table.sigma[k];
      table.k_star = k;
    }
  }
}

}  // namespace detail

// All Sigma_k via the range structure: per k one descent for i_k* and one
// rectangle sum, O(n log^2 n) overall.
inline SigmaTable sigma_table(const Instance& instance, const RangeStructure& rs,
                              TieRule tie = TieRule::kSmallest) {
  int n = instance.size();
  SigmaTable table;
  table.tie = tie;
  table.sigma.resize(n + 1);
  table.i_star.resize(n + 1);
  for (int k = 1; k <= n; ++k) {
    auto cutoff = find_i_star(rs, k);
    if (!cutoff) break;  // definedness is downward closed in k
    table.i_star[k] = *cutoff;
    table.sigma[k] = rs.range_sum(*cutoff, k);
  }
  detail::pick_k_star(table);
  return table;
}

inline SigmaTable sigma_table(const Instance& instance, TieRule tie = TieRule::kSmallest) {
  RangeStructure rs(instance);
  return sigma_table(instance, rs, tie);
}

// Direct O(n*ell) rescan, the small-ell implementation the fast path is
// checked against. Entries above ell stay unset.
inline SigmaTable sigma_table_naive(const Instance& instance, int ell,
                                    TieRule tie = TieRule::kSmallest) {
  if (ell < 1) throw InputError("sigma_table_naive: ell must be >= 1");
  int n = instance.size();
  if (n == 0) throw InputError("sigma_table_naive: empty instance");
  SigmaTable table;
  table.tie = tie;
  table.sigma.resize(n + 1);
  table.i_star.resize(n + 1);
  for (int k = 1; k <= std::min(ell, n); ++k) {
    Money total;
    int taken = 0;
    for (int r = 1; r <= n && taken < k; ++r) {
      const Bid& b = instance.ranked(r);
      if (b.cap >= k) {
        total += b.amount;
        if (++taken == k) table.i_star[k] = r;
      }
    }
    if (taken < k) break;
    table.sigma[k] = total;
  }
  detail::pick_k_star(table);
  return table;
}

// The k highest canonically-ordered bids with cap >= k.
inline Allocation allocate(const Instance& instance, int k) {
  if (k < 0) throw InputError("allocate: negative k");
  Allocation alloc;
  alloc.k = k;
  for (int r = 1; r <= instance.size() && static_cast<int>(alloc.winners.size()) < k; ++r) {
    const Bid& b = instance.ranked(r);
    if (b.cap >= k) alloc.winners.push_back(b.bidder_id);
  }
  if (static_cast<int>(alloc.winners.size()) < k)
    throw NoAllocationError("no feasible allocation of size " + std::to_string(k));
  return alloc;
}

}  // namespace cardauct
