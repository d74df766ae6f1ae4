#pragma once

#include <vector>

namespace moldsched {

struct KnapsackEntry {
  int allot = 1;      // capacity consumed, in [1, capacity]
  double weight = 0;  // value maximized
};

// 0/1 knapsack by dynamic programming over integer capacity, O(n*capacity).
// W(i,j) = max(W(i-1,j), W(i-1,j-allot_i) + w_i) with W(.,j<0) = -inf and
// W(0,j>=0) = 0.  Selection recovered by backtracking over stored decisions;
// ties keep the entry out.  Returns selected indices in ascending order.
std::vector<int> knapsack_select(const std::vector<KnapsackEntry>& entries, int capacity);

}  // namespace moldsched
