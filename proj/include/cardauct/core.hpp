#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cardauct/errors.hpp"
#include "cardauct/money.hpp"

namespace cardauct {

// Submitted two-dimensional bid (b_i, l_i): amount and the largest
// allocation size the bidder accepts.
struct Bid {
  int bidder_id = 0;
  Money amount;
  std::int64_t cap = 1;

  friend bool operator==(const Bid&, const Bid&) = default;
};

// Private (v_i, k_i). Used as truthful input to VCG-style mechanisms and
// for utility computation in the equilibrium lab.
struct Valuation {
  int bidder_id = 0;
  Money value;
  std::int64_t cap = 1;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Bid as_bid(const Valuation& v) { return Bid{v.bidder_id, v.value, v.cap}; }
inline Valuation as_valuation(const Bid& b) { return Valuation{b.bidder_id, b.amount, b.cap}; }

inline std::vector<Bid> as_bids(const std::vector<Valuation>& vals) {
  std::vector<Bid> out;
  out.reserve(vals.size());
  for (const auto& v : vals) out.push_back(as_bid(v));
  return out;
}

// Canonical bid order: amount descending, bidder_id ascending. Total and
// deterministic, so every mechanism and oracle resolves ties identically.
inline bool canonical_before(const Bid& a, const Bid& b) {
  if (a.amount != b.amount) return a.amount > b.amount;
  return a.bidder_id < b.bidder_id;
}

// One auction's worth of bids, validated and canonically ordered on
// construction. Immutable afterwards; safe to share across threads.
class Instance {
public:
  Instance() = default;

  explicit Instance(std::vector<Bid> bids) : bids_(std::move(bids)) {
    order_.resize(bids_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
    std::sort(order_.begin(), order_.end(),
              [&](int a, int b) { return canonical_before(bids_[a], bids_[b]); });
    rank_by_id_.reserve(bids_.size());
    for (std::size_t r = 0; r < order_.size(); ++r) {
      const Bid& b = bids_[order_[r]];
      if (b.cap < 1) throw InputError("bid cap must be >= 1");
      if (b.amount < Money{}) throw InputError("bid amount must be >= 0");
      if (!rank_by_id_.emplace(b.bidder_id, static_cast<int>(r) + 1).second)
        throw InputError("duplicate bidder_id " + std::to_string(b.bidder_id));
    }
  }

  int size() const { return static_cast<int>(bids_.size()); }
  bool empty() const { return bids_.empty(); }

  const std::vector<Bid>& bids() const { return bids_; }
  const std::vector<int>& canonical_order() const { return order_; }

  // rank is 1-based in canonical order.
  const Bid& ranked(int rank) const { return bids_[order_[rank - 1]]; }

  int rank_of(int bidder_id) const {
    auto it = rank_by_id_.find(bidder_id);
    if (it == rank_by_id_.end())
      throw InputError("unknown bidder_id " + std::to_string(bidder_id));
    return it->second;
  }

  bool has_bidder(int bidder_id) const { return rank_by_id_.count(bidder_id) != 0; }

  const Bid& by_id(int bidder_id) const { return ranked(rank_of(bidder_id)); }

  // Copy with one bidder's bid replaced (id and cap may change too).
  Instance with_replaced(int bidder_id, const Bid& replacement) const {
    std::vector<Bid> out = bids_;
    out[order_[rank_of(bidder_id) - 1]] = replacement;
    return Instance(std::move(out));
  }

  Instance without(int bidder_id) const {
    std::vector<Bid> out;
    out.reserve(bids_.size());
    for (const auto& b : bids_)
      if (b.bidder_id != bidder_id) out.push_back(b);
    return Instance(std::move(out));
  }

private:
  std::vector<Bid> bids_;
  std::vector<int> order_;  // indices into bids_, canonical order
  std::unordered_map<int, int> rank_by_id_;
};

// k copies sold to |winners| = k bidders. For cardinal mechanisms winners
// are listed in canonical order; for prefix mechanisms in position order.
struct Allocation {
  int k = 0;
  std::vector<int> winners;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct PricedOutcome {
  Allocation allocation;
  std::map<int, Money> prices;  // winners only, each >= 0
  Money efficiency;             // winner values when known, else winner bids
  Money revenue;                // sum of prices

  bool is_winner(int bidder_id) const {
    const auto& w = allocation.winners;
    return std::find(w.begin(), w.end(), bidder_id) != w.end();
  }

  // 0-based position of a winner in the allocation list, -1 for losers.
  int position_of(int bidder_id) const {
    const auto& w = allocation.winners;
    auto it = std::find(w.begin(), w.end(), bidder_id);
    return it == w.end() ? -1 : static_cast<int>(it - w.begin());
  }
};

// Money extended with a distinguished -infinity, the utility of winning in
// an allocation larger than one's private cap.
struct Utility {
  bool finite = true;
  Money value;

  static Utility neg_inf() { return Utility{false, Money{}}; }
  static Utility of(Money v) { return Utility{true, v}; }

  friend bool operator==(const Utility& a, const Utility& b) {
    if (a.finite != b.finite) return false;
    return !a.finite || a.value == b.value;
  }
  friend bool operator<(const Utility& a, const Utility& b) {
    if (!a.finite) return b.finite;
    if (!b.finite) return false;
    return a.value < b.value;
  }
  friend bool operator>(const Utility& a, const Utility& b) { return b < a; }

  std::string str() const { return finite ? value.str() : "-inf"; }
};

// Cardinal-model utility. Losers get 0 whatever the allocation size: the
// cardinality externality binds possessors of a copy only (the paper's own
// equilibrium examples need losing bidders with exceeded caps content at 0).
inline Utility utility(const Valuation& v, const PricedOutcome& outcome) {
  if (!outcome.is_winner(v.bidder_id)) return Utility::of(Money{});
  if (outcome.allocation.k > v.cap) return Utility::neg_inf();
  return Utility::of(v.value - outcome.prices.at(v.bidder_id));
}

// Feasibility: exactly k winners, each accepting an allocation of size k.
inline bool is_feasible(const Allocation& alloc, const Instance& instance) {
  if (static_cast<int>(alloc.winners.size()) != alloc.k) return false;
  for (int id : alloc.winners)
    if (instance.by_id(id).cap < alloc.k) return false;
  return true;
}

}  // namespace cardauct
